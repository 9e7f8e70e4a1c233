#include "fanocalc/pfaffian.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "fanocalc/linalg.hpp"

namespace fano::pfaff {

namespace {

// Pfaffian by expansion along the first remaining index, memoized over the
// bitmask of remaining indices. Sizes here never exceed ~16.
template <class K, class Field>
K pfaffian_mask(const Skew<K>& m, std::uint32_t mask, std::map<std::uint32_t, K>& memo,
                const Field& F) {
    if (mask == 0) return F.one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int first = std::countr_zero(mask);
    K acc = F.zero();
    bool plus = true;
    for (int j = first + 1; j < m.size(); ++j) {
        if (!(mask >> j & 1u)) continue;
        const K& v = m.at(first, j);
        if (!F.is_zero(v)) {
            const std::uint32_t rest = mask & ~(1u << first) & ~(1u << j);
            const K sub = pfaffian_mask(m, rest, memo, F);
            const K term = F.mul(v, sub);
            acc = plus ? F.add(acc, term) : F.sub(acc, term);
        }
        plus = !plus;
    }
    memo.emplace(mask, acc);
    return acc;
}

struct RationalOps {
    using Elem = Rational;
    Rational zero() const { return 0; }
    Rational one() const { return 1; }
    bool is_zero(const Rational& a) const { return a == 0; }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
};

template <class K, class Field>
K pfaffian_impl(const Skew<K>& m, const Field& F) {
    if (m.size() % 2 != 0) throw std::invalid_argument("pfaffian: size must be even");
    std::map<std::uint32_t, K> memo;
    const std::uint32_t full = m.size() == 32 ? ~0u : ((1u << m.size()) - 1u);
    return pfaffian_mask(m, full, memo, F);
}

template <class K, class Field>
K pfaffian_minor_impl(const Skew<K>& m, const std::vector<int>& rows, const Field& F) {
    Skew<K> sub(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            sub.set(static_cast<int>(i), static_cast<int>(j), m.at(rows[i], rows[j]),
                    [&](const K& v) { return F.sub(F.zero(), v); });
    return pfaffian_impl(sub, F);
}

void subsets_rec(int n, int k, int start, std::vector<int>& acc,
                 const std::function<bool(const std::vector<int>&)>& visit, bool& stop) {
    if (stop) return;
    if (static_cast<int>(acc.size()) == k) {
        if (!visit(acc)) stop = true;
        return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(acc.size())); ++i) {
        acc.push_back(i);
        subsets_rec(n, k, i + 1, acc, visit, stop);
        acc.pop_back();
        if (stop) return;
    }
}

// Visits all k-subsets of {0..n-1} until the visitor returns false.
void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> acc;
    bool stop = false;
    subsets_rec(n, k, 0, acc, visit, stop);
}

}  // namespace

Rational pfaffian(const SkewQ& m) { return pfaffian_impl(m, RationalOps{}); }

std::uint32_t pfaffian(const SkewFp& m, const PrimeField& F) { return pfaffian_impl(m, F); }

Rational pfaffian_minor(const SkewQ& m, const std::vector<int>& rows) {
    return pfaffian_minor_impl(m, rows, RationalOps{});
}

std::uint32_t pfaffian_minor(const SkewFp& m, const std::vector<int>& rows, const PrimeField& F) {
    return pfaffian_minor_impl(m, rows, F);
}

namespace {

template <class K, class Field>
bool rank_stratum_impl(const Skew<K>& m, int k, const Field& F) {
    const int n = m.size() / 2;
    if (k < 1 || k > n - 1) throw std::invalid_argument("rank_stratum: need 1 <= k <= n-1");
    const int minor_size = 2 * (n - k + 1);
    bool all_vanish = true;
    for_each_subset(m.size(), minor_size, [&](const std::vector<int>& rows) {
        if (!F.is_zero(pfaffian_minor_impl(m, rows, F))) {
            all_vanish = false;
            return false;
        }
        return true;
    });
    return all_vanish;
}

}  // namespace

bool rank_stratum(const SkewQ& m, int k) { return rank_stratum_impl(m, k, RationalOps{}); }
bool rank_stratum(const SkewFp& m, int k, const PrimeField& F) {
    return rank_stratum_impl(m, k, F);
}

int rank(const SkewQ& m) {
    linalg::MatQ a(static_cast<std::size_t>(m.size()), static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m.at(i, j);
    return static_cast<int>(linalg::rank(std::move(a)));
}

int rank(const SkewFp& m, const PrimeField& F) {
    linalg::MatFp a(static_cast<std::size_t>(m.size()), static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m.at(i, j);
    return static_cast<int>(linalg::rank(std::move(a), F));
}

namespace {

// Dense univariate polynomials over F_p, little-endian coefficients.
using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Lagrange interpolation through (x_i, y_i), all x_i distinct.
Poly poly_interpolate(const std::vector<std::uint32_t>& xs, const std::vector<std::uint32_t>& ys,
                      const PrimeField& F) {
    const std::size_t n = xs.size();
    Poly acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
        Poly numer{1};
        std::uint32_t denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Poly next(numer.size() + 1, 0);
            const std::uint32_t neg_xj = F.neg(xs[j]);
            for (std::size_t t = 0; t < numer.size(); ++t) {
                next[t] = F.add(next[t], F.mul(numer[t], neg_xj));
                next[t + 1] = F.add(next[t + 1], numer[t]);
            }
            numer = std::move(next);
            denom = F.mul(denom, F.sub(xs[i], xs[j]));
        }
        const std::uint32_t scale = F.mul(ys[i], F.inv(denom));
        for (std::size_t t = 0; t < numer.size(); ++t)
            acc[t] = F.add(acc[t], F.mul(numer[t], scale));
    }
    poly_trim(acc);
    return acc;
}

Poly poly_mod(Poly a, const Poly& b, const PrimeField& F) {
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = F.inv(b.back());
    while (a.size() > db) {
        const std::uint32_t q = F.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = F.sub(a[shift + i], F.mul(q, b[i]));
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& F) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

SkewFp pencil_member(const SkewPencil& p, std::uint32_t s, std::uint32_t t, const PrimeField& F) {
    SkewFp m(p.A.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            m.set(i, j, F.add(F.mul(s, p.A.at(i, j)), F.mul(t, p.B.at(i, j))),
                  [&](std::uint32_t v) { return F.neg(v); });
    return m;
}

}  // namespace

HullResult pencil_kernel_hull(const SkewPencil& p, int k, const PrimeField& F) {
    const int two_n = p.A.size();
    const int n = two_n / 2;
    if (k < 1 || k > n - 1) throw std::invalid_argument("pencil_kernel_hull: bad k");
    {
        // degenerate pencil check: B must not be proportional to A
        linalg::MatFp dep(2, static_cast<std::size_t>(two_n) * two_n);
        for (int i = 0; i < two_n; ++i)
            for (int j = 0; j < two_n; ++j) {
                dep.at(0, static_cast<std::size_t>(i) * two_n + j) = p.A.at(i, j);
                dep.at(1, static_cast<std::size_t>(i) * two_n + j) = p.B.at(i, j);
            }
        if (linalg::rank(std::move(dep), F) < 2)
            throw std::invalid_argument("pencil_kernel_hull: A, B linearly dependent");
    }

    HullResult res;
    res.target_rank = 2 * n - 2 * k;

    // 2n+1 sample members of the pencil: t = infinity (B) and t = 0..2n-1.
    std::vector<SkewFp> samples;
    samples.push_back(pencil_member(p, 0, 1, F));
    std::vector<std::uint32_t> ts;
    for (int t = 0; t < two_n; ++t) {
        samples.push_back(pencil_member(p, 1, F.from_int(t), F));
        ts.push_back(F.from_int(t));
    }

    bool pointwise_ok = true;
    for (const auto& s : samples)
        if (rank(s, F) != res.target_rank) pointwise_ok = false;

    // Symbolic check along A + tB. The sigma_k equations (principal Pfaffian
    // minors of size 2(n-k+1), degree <= n-k+1 in t) already vanish
    // identically once the rank is <= 2n-2k at 2n+1 > n-k+2 points of P^1,
    // which the pointwise pass certifies. What remains is the next stratum:
    // the size-2(n-k) minors, interpolated as polynomials in t, must have no
    // common root over the algebraic closure, i.e. constant gcd. (A common
    // root at infinity would show up as rank(B) < 2n-2k in the pointwise
    // pass.)
    bool no_common_root = false;
    if (pointwise_ok) {
        Poly g;  // gcd accumulated over next-stratum minors
        bool first = true;
        for_each_subset(two_n, 2 * (n - k), [&](const std::vector<int>& rows) {
            std::vector<std::uint32_t> ys;
            ys.reserve(ts.size());
            for (std::size_t s = 1; s < samples.size(); ++s)
                ys.push_back(pfaffian_minor(samples[s], rows, F));
            Poly minor = poly_interpolate(ts, ys, F);
            if (first) {
                g = std::move(minor);
                first = false;
            } else {
                g = poly_gcd(std::move(g), minor, F);
            }
            return g.size() != 1;  // stop once the gcd is a nonzero constant
        });
        no_common_root = g.size() == 1;
    }

    res.constant_rank = pointwise_ok && no_common_root;

    // Kernel hull over the sampled members.
    std::vector<std::vector<std::uint32_t>> hull_rows;
    for (const auto& s : samples) {
        linalg::MatFp a(static_cast<std::size_t>(two_n), static_cast<std::size_t>(two_n));
        for (int i = 0; i < two_n; ++i)
            for (int j = 0; j < two_n; ++j)
                a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s.at(i, j);
        for (auto& v : linalg::kernel_basis(std::move(a), F)) hull_rows.push_back(std::move(v));
    }
    linalg::MatFp hull(hull_rows.size(), static_cast<std::size_t>(two_n));
    for (std::size_t i = 0; i < hull_rows.size(); ++i)
        for (int j = 0; j < two_n; ++j)
            hull.at(i, static_cast<std::size_t>(j)) = hull_rows[i][static_cast<std::size_t>(j)];
    res.hull_dim = static_cast<int>(linalg::rank(std::move(hull), F));
    return res;
}

namespace {

// Random skew form with the given (n+k)-dimensional subspace U isotropic:
// a uniform element of the ideal ann(U) ^ W*, built as sum_r psi_r ^ theta_r
// with psi_r a basis of the annihilator of U and theta_r random. Its generic
// rank is exactly 2n-2k (kernel = ker of the restriction map on U).
SkewFp random_isotropic_skew(const std::vector<std::vector<std::uint32_t>>& psi, int two_n,
                             Rng& rng, const PrimeField& F) {
    const std::size_t q = psi.size();  // = n-k
    std::vector<std::vector<std::uint32_t>> theta(q, std::vector<std::uint32_t>(
                                                         static_cast<std::size_t>(two_n), 0));
    for (auto& row : theta)
        for (auto& v : row) v = static_cast<std::uint32_t>(rng.below(F.modulus()));

    SkewFp m(two_n);
    for (int i = 0; i < two_n; ++i)
        for (int j = i + 1; j < two_n; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t r = 0; r < q; ++r) {
                const std::uint32_t v =
                    F.sub(F.mul(psi[r][static_cast<std::size_t>(i)], theta[r][static_cast<std::size_t>(j)]),
                          F.mul(psi[r][static_cast<std::size_t>(j)], theta[r][static_cast<std::size_t>(i)]));
                acc = (acc + std::uint64_t(v)) % F.modulus();
            }
            m.set(i, j, static_cast<std::uint32_t>(acc),
                  [&](std::uint32_t v) { return F.neg(v); });
        }
    return m;
}

}  // namespace

HullTrialsReport run_hull_trials(int n, int k, int trials, std::uint64_t seed,
                                 std::uint32_t prime) {
    if (!is_prime_u32(prime)) throw std::invalid_argument("run_hull_trials: modulus must be prime");
    const PrimeField F(prime);
    Rng rng(seed);
    HullTrialsReport rep;
    rep.n = n;
    rep.k = k;
    rep.trials = trials;
    rep.seed = seed;
    rep.prime = prime;
    rep.accepted = 0;
    rep.rejected = 0;

    const int two_n = 2 * n;
    while (rep.accepted < trials) {
        // Random (n+k)-dimensional subspace U, then a random pencil of skew
        // forms vanishing on U. All members lie on the rank <= 2n-2k
        // stratum; the constant-rank filter below rejects pencils that meet
        // the next stratum (mirroring the sigma_k equations).
        linalg::MatFp u(static_cast<std::size_t>(n + k), static_cast<std::size_t>(two_n));
        for (std::size_t i = 0; i < u.rows; ++i)
            for (std::size_t j = 0; j < u.cols; ++j)
                u.at(i, j) = static_cast<std::uint32_t>(rng.below(F.modulus()));
        linalg::MatFp u_copy = u;
        if (linalg::rank(std::move(u_copy), F) != static_cast<std::size_t>(n + k)) {
            ++rep.rejected;
            continue;
        }
        // Linear forms vanishing on U = right kernel of U-row-matrix.
        const auto phis = linalg::kernel_basis(std::move(u), F);
        SkewFp a = random_isotropic_skew(phis, two_n, rng, F);
        SkewFp b = random_isotropic_skew(phis, two_n, rng, F);
        try {
            SkewPencil pencil(std::move(a), std::move(b));
            const HullResult r = pencil_kernel_hull(pencil, k, F);
            if (!r.constant_rank) {
                ++rep.rejected;
                continue;
            }
            ++rep.accepted;
            rep.hull_hist[r.hull_dim] += 1;
        } catch (const std::invalid_argument&) {
            ++rep.rejected;  // degenerate pencil draw
        }
    }
    return rep;
}

Int catalan_degree(int n) {
    if (n < 1) throw std::invalid_argument("catalan_degree: need n >= 1");
    return factorial(2 * n - 2) / (factorial(n) * factorial(n - 1));
}

std::int64_t cn_constant(int n) {
    if (n < 2) throw std::invalid_argument("cn_constant: need n >= 2");
    return (static_cast<std::int64_t>(n) * n - 3 * n + 4) / 2;
}

CrepancyBidegrees crepancy_bidegrees(int n) {
    if (n < 2) throw std::invalid_argument("crepancy_bidegrees: need n >= 2");
    const std::int64_t ln = n;
    // omega of the ambient product and det of the cut bundle; adjunction
    // adds them.
    const std::pair<std::int64_t, std::int64_t> omega_ambient{-2 * ln, -ln * (2 * ln - 1)};
    const std::pair<std::int64_t, std::int64_t> det_bundle{2 * ln, ln * (ln + 1) / 2};
    CrepancyBidegrees out;
    out.det_bidegree = det_bundle;
    out.canonical_bidegree = {omega_ambient.first + det_bundle.first,
                              omega_ambient.second + det_bundle.second};
    return out;
}

}  // namespace fano::pfaff
