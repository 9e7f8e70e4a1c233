#include "fanocalc/forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "fanocalc/linalg.hpp"

namespace fano::forms {

namespace {

// Sign of the permutation sorting `idx`; 0 if an index repeats.
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

// All k-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Rational det(linalg::MatQ m) {
    Rational d = 1;
    const std::size_t n = m.rows;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c) / m.at(c, c);
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

}  // namespace

void AltForm::add(std::vector<int> idx, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(idx.size()) != p) throw std::invalid_argument("AltForm: arity mismatch");
    std::vector<int> s = idx;
    const int sign = sort_sign(s);
    if (sign == 0) return;
    for (int i : s)
        if (i < 0 || i >= n) throw std::invalid_argument("AltForm: index out of range");
    auto it = coeff.find(s);
    const Rational v = (it == coeff.end() ? Rational(0) : it->second) + (sign > 0 ? c : -c);
    if (v == 0) {
        if (it != coeff.end()) coeff.erase(it);
    } else {
        coeff[std::move(s)] = v;
    }
}

Rational eval(const AltForm& f, const std::vector<std::vector<Rational>>& vectors) {
    if (static_cast<int>(vectors.size()) != f.p)
        throw std::invalid_argument("eval: wrong number of arguments");
    Rational total = 0;
    for (const auto& [idx, c] : f.coeff) {
        linalg::MatQ m(static_cast<std::size_t>(f.p), static_cast<std::size_t>(f.p));
        for (int r = 0; r < f.p; ++r)
            for (int s = 0; s < f.p; ++s)
                m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) =
                    vectors[static_cast<std::size_t>(s)][static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])];
        total += c * det(std::move(m));
    }
    return total;
}

AltForm wedge(const AltForm& f, const AltForm& g) {
    if (f.n != g.n) throw std::invalid_argument("wedge: dimension mismatch");
    AltForm out;
    out.p = f.p + g.p;
    out.n = f.n;
    for (const auto& [fi, fc] : f.coeff)
        for (const auto& [gi, gc] : g.coeff) {
            std::vector<int> idx = fi;
            idx.insert(idx.end(), gi.begin(), gi.end());
            out.add(std::move(idx), fc * gc);
        }
    return out;
}

AltForm contract(const AltForm& f, const std::vector<Rational>& u) {
    if (static_cast<int>(u.size()) != f.n) throw std::invalid_argument("contract: bad vector");
    AltForm out;
    out.p = f.p - 1;
    out.n = f.n;
    for (const auto& [idx, c] : f.coeff)
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const int i = idx[t];
            if (u[static_cast<std::size_t>(i)] == 0) continue;
            std::vector<int> rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            const Rational sgn = (t % 2 == 0) ? 1 : -1;
            out.add(std::move(rest), sgn * u[static_cast<std::size_t>(i)] * c);
        }
    return out;
}

AltForm transform(const AltForm& f, const std::vector<std::vector<Rational>>& g) {
    AltForm out;
    out.p = f.p;
    out.n = f.n;
    const auto cols = subsets(f.n, f.p);
    for (const auto& J : cols) {
        Rational total = 0;
        for (const auto& [I, c] : f.coeff) {
            linalg::MatQ m(static_cast<std::size_t>(f.p), static_cast<std::size_t>(f.p));
            for (int r = 0; r < f.p; ++r)
                for (int s = 0; s < f.p; ++s)
                    m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) =
                        g[static_cast<std::size_t>(I[static_cast<std::size_t>(r)])]
                         [static_cast<std::size_t>(J[static_cast<std::size_t>(s)])];
            total += c * det(std::move(m));
        }
        if (!(total == 0)) out.coeff[J] = total;
    }
    return out;
}

AltForm dual_form(const AltForm& f) {
    AltForm out;
    out.p = f.n - f.p;
    out.n = f.n;
    for (const auto& [I, c] : f.coeff) {
        std::vector<int> comp;
        comp.reserve(static_cast<std::size_t>(out.p));
        std::size_t t = 0;
        for (int i = 0; i < f.n; ++i) {
            if (t < I.size() && I[t] == i) {
                ++t;
            } else {
                comp.push_back(i);
            }
        }
        // sign of the permutation (I, comp) of (0..n-1)
        std::vector<int> perm = I;
        perm.insert(perm.end(), comp.begin(), comp.end());
        const int sgn = sort_sign(perm);
        out.coeff[comp] = sgn > 0 ? c : -c;
    }
    return out;
}

AltForm random_form(int p, int n, Rng& rng, std::int64_t coeff_bound) {
    AltForm out;
    out.p = p;
    out.n = n;
    for (auto& I : subsets(n, p)) {
        const Rational c = rng.range(-coeff_bound, coeff_bound);
        if (!(c == 0)) out.coeff[std::move(I)] = c;
    }
    return out;
}

Rational eval_alpha4(const TangentVector7& x1, const TangentVector7& x2,
                     const TangentVector7& x3, const TangentVector7& x4) {
    const std::array<const TangentVector7*, 4> xs{&x1, &x2, &x3, &x4};
    // The four signed determinants, rows (a0,b0,c2,c3), (a0,b1,c1,c3),
    // (a1,b0,c1,c3), (a1,b1,c1,c2) with signs (+,-,-,+).
    const auto det4 = [&](auto proj) {
        linalg::MatQ m(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            const auto row = proj(*xs[i]);
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = row[j];
        }
        return det(std::move(m));
    };
    const Rational d1 = det4([](const TangentVector7& v) {
        return std::array<Rational, 4>{v.a0, v.b0, v.c2, v.c3};
    });
    const Rational d2 = det4([](const TangentVector7& v) {
        return std::array<Rational, 4>{v.a0, v.b1, v.c1, v.c3};
    });
    const Rational d3 = det4([](const TangentVector7& v) {
        return std::array<Rational, 4>{v.a1, v.b0, v.c1, v.c3};
    });
    const Rational d4 = det4([](const TangentVector7& v) {
        return std::array<Rational, 4>{v.a1, v.b1, v.c1, v.c2};
    });
    return d1 - d2 - d3 + d4;
}

AltForm alpha4_as_form() {
    // Basis order (a0, a1, b0, b1, c1, c2, c3) = indices 0..6.
    AltForm f;
    f.p = 4;
    f.n = 7;
    f.coeff[{0, 2, 5, 6}] = 1;   //  a0 ^ b0 ^ c2 ^ c3
    f.coeff[{0, 3, 4, 6}] = -1;  // -a0 ^ b1 ^ c1 ^ c3
    f.coeff[{1, 2, 4, 6}] = -1;  // -a1 ^ b0 ^ c1 ^ c3
    f.coeff[{1, 3, 4, 5}] = 1;   //  a1 ^ b1 ^ c1 ^ c2
    return f;
}

int two_rank(const AltForm& f) {
    if (f.p % 2 != 0) throw std::invalid_argument("two_rank: form degree must be even");
    const int k = f.p / 2;
    const auto basis = subsets(f.n, k);
    linalg::MatQ b(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            std::vector<int> idx = basis[i];
            idx.insert(idx.end(), basis[j].begin(), basis[j].end());
            std::vector<int> s = idx;
            const int sgn = sort_sign(s);
            if (sgn == 0) continue;
            auto it = f.coeff.find(s);
            if (it != f.coeff.end()) b.at(i, j) = sgn > 0 ? it->second : -it->second;
        }
    return static_cast<int>(linalg::rank(std::move(b)));
}

int orbit_dim(const AltForm& f) {
    const int n = f.n;
    const auto basis = subsets(n, f.p);
    std::map<std::vector<int>, std::size_t> basis_index;
    for (std::size_t i = 0; i < basis.size(); ++i) basis_index[basis[i]] = i;

    // Columns: E_{ij} acting as a derivation on f (replace j by i in each
    // index tuple). Rows: basis p-tuples.
    linalg::MatQ m(basis.size(), static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::size_t col = static_cast<std::size_t>(i) * n + j;
            for (const auto& [K, c] : f.coeff) {
                for (std::size_t t = 0; t < K.size(); ++t) {
                    if (K[t] != j) continue;
                    std::vector<int> repl = K;
                    repl[t] = i;
                    std::vector<int> s = repl;
                    const int sgn = sort_sign(s);
                    if (sgn == 0) break;
                    m.at(basis_index.at(s), col) += (sgn > 0 ? c : -c);
                    break;  // j occurs at most once in a strictly increasing tuple
                }
            }
        }
    return static_cast<int>(linalg::rank(std::move(m)));
}

namespace {

// Rank of the polarized quadratic form of a 3-form in 7 variables.
int q_rank3(const AltForm& w) {
    linalg::MatQ b(7, 7);
    std::vector<Rational> eu(7, 0), ev(7, 0);
    for (int i = 0; i < 7; ++i) {
        eu.assign(7, 0);
        eu[static_cast<std::size_t>(i)] = 1;
        const AltForm wi = contract(w, eu);
        for (int j = i; j < 7; ++j) {
            ev.assign(7, 0);
            ev[static_cast<std::size_t>(j)] = 1;
            const AltForm top = wedge(wedge(w, wi), contract(w, ev));
            Rational v = 0;
            if (!top.coeff.empty()) v = top.coeff.begin()->second;  // coefficient on (0..6)
            b.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
            b.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
        }
    }
    return static_cast<int>(linalg::rank(std::move(b)));
}

}  // namespace

int q_rank(const AltForm& f) {
    if (f.n != 7) throw std::invalid_argument("q_rank: defined for 7 variables");
    if (f.p == 3) return q_rank3(f);
    if (f.p == 4) return q_rank3(dual_form(f));
    throw std::invalid_argument("q_rank: form degree must be 3 or 4");
}

const std::array<OrbitRecord, 10>& orbit_table() {
    static const std::array<OrbitRecord, 10> table{{
        {"zero", 0, 0, 0},
        {"O1", 13, 6, 0},
        {"O2", 20, 10, 0},
        {"O3", 26, 12, 0},
        {"O4", 25, 12, 0},
        {"O5", 31, 16, 2},
        {"O6", 28, 16, 1},
        {"O7", 34, 18, 4},
        {"O8", 24, 15, 1},
        {"O9", 35, 21, 7},
    }};
    return table;
}

OrbitRecord classify_orbit(const AltForm& f) {
    if (f.n != 7 || (f.p != 3 && f.p != 4))
        throw std::invalid_argument("classify_orbit: need a 3- or 4-form in 7 variables");
    const AltForm& four = f.p == 4 ? f : dual_form(f);
    const int d = orbit_dim(f);
    const int r2 = two_rank(four);
    const int r = q_rank(f);
    for (const auto& rec : orbit_table())
        if (rec.orbit_dim == d && rec.two_rank == r2 && rec.q_rank == r) return rec;
    throw std::logic_error("classify_orbit: invariant triple (" + std::to_string(d) + "," +
                           std::to_string(r2) + "," + std::to_string(r) +
                           ") matches no orbit; the orbit list is complete, so this is a bug");
}

namespace {

// An invertible 8x8 matrix whose last two columns are the given points and
// whose first six columns are standard basis vectors (greedy completion).
std::vector<std::vector<Rational>> line_frame(const std::vector<Rational>& p1,
                                              const std::vector<Rational>& p2) {
    std::vector<int> chosen;
    auto rank_with = [&](int extra) {
        linalg::MatQ test(chosen.size() + (extra >= 0 ? 3 : 2), 8);
        std::size_t r = 0;
        for (int e : chosen) test.at(r++, static_cast<std::size_t>(e)) = 1;
        if (extra >= 0) test.at(r++, static_cast<std::size_t>(extra)) = 1;
        for (int j = 0; j < 8; ++j) {
            test.at(r, static_cast<std::size_t>(j)) = p1[static_cast<std::size_t>(j)];
            test.at(r + 1, static_cast<std::size_t>(j)) = p2[static_cast<std::size_t>(j)];
        }
        return linalg::rank(std::move(test));
    };
    if (rank_with(-1) != 2)
        throw std::invalid_argument("line_type: the two points do not span a line");
    for (int e = 0; e < 8 && chosen.size() < 6; ++e)
        if (rank_with(e) == chosen.size() + 3) chosen.push_back(e);
    if (chosen.size() != 6) throw std::logic_error("line_type: frame completion failed");

    std::vector<std::vector<Rational>> m(8, std::vector<Rational>(8, 0));
    for (std::size_t i = 0; i < 6; ++i) m[static_cast<std::size_t>(chosen[i])][i] = 1;
    for (std::size_t i = 0; i < 8; ++i) {
        m[i][6] = p1[i];
        m[i][7] = p2[i];
    }
    return m;
}

}  // namespace

LineTypeResult line_type(const FormQ& f, const std::vector<Rational>& point1,
                         const std::vector<Rational>& point2) {
    if (f.n_vars != 8 || f.degree != 4)
        throw std::invalid_argument("line_type: expected a quartic form in 8 variables");
    auto frame = line_frame(point1, point2);
    FormQ g = substitute(f, frame);

    // The line is now {y0 = ... = y5 = 0}; f must vanish on it.
    for (const auto& [m, c] : g.coeff) {
        bool on_line = true;
        for (int i = 0; i < 6; ++i)
            if (m[static_cast<std::size_t>(i)] != 0) on_line = false;
        if (on_line && !(c == 0)) throw std::invalid_argument("line_type: line is not on the quartic");
    }

    auto restricted_partials = [](const FormQ& h) {
        std::array<BinaryCubic, 6> out;
        for (int i = 0; i < 6; ++i) {
            const FormQ d = derivative(h, i);
            BinaryCubic cubic{};
            for (const auto& [m, c] : d.coeff) {
                bool pure = true;
                for (int v = 0; v < 6; ++v)
                    if (m[static_cast<std::size_t>(v)] != 0) pure = false;
                if (!pure) continue;
                cubic.c[static_cast<std::size_t>(m[7])] = c;  // exponent of x7 indexes the basis
            }
            out[static_cast<std::size_t>(i)] = cubic;
        }
        return out;
    };

    auto partials = restricted_partials(g);
    linalg::MatQ c(6, 4);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 4; ++j) c.at(i, j) = partials[i].c[j];
    linalg::MatQ c_copy = c;
    const int span = static_cast<int>(linalg::rank(std::move(c_copy)));

    LineTypeResult result;
    result.span_dim = span;
    result.change = frame;
    result.restricted = partials;
    if (span <= 2) {
        result.type = LineType::Singular;
        return result;
    }
    if (span == 3) {
        result.type = LineType::SecondType;
        return result;
    }
    result.type = LineType::FirstType;

    // Normalize: find invertible T (6x6) with T * C = [I4; 0], then change
    // the first six coordinates by S = T^t so the partials become standard.
    // Rows of C forming an invertible 4x4 block:
    std::vector<int> rows_used;
    {
        linalg::MatQ acc(0, 0);
        std::vector<std::vector<Rational>> sel;
        for (int i = 0; i < 6 && rows_used.size() < 4; ++i) {
            sel.push_back({c.at(static_cast<std::size_t>(i), 0), c.at(static_cast<std::size_t>(i), 1),
                           c.at(static_cast<std::size_t>(i), 2), c.at(static_cast<std::size_t>(i), 3)});
            linalg::MatQ test(sel.size(), 4);
            for (std::size_t r = 0; r < sel.size(); ++r)
                for (std::size_t cc = 0; cc < 4; ++cc) test.at(r, cc) = sel[r][cc];
            if (linalg::rank(std::move(test)) == sel.size()) {
                rows_used.push_back(i);
            } else {
                sel.pop_back();
            }
        }
    }

    // Invert the selected 4x4 block by augmented elimination.
    linalg::MatQ aug(4, 8);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t cc = 0; cc < 4; ++cc)
            aug.at(r, cc) = c.at(static_cast<std::size_t>(rows_used[r]), cc);
        aug.at(r, 4 + r) = 1;
    }
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        while (aug.at(piv, col) == 0) ++piv;
        if (piv != col)
            for (std::size_t j = 0; j < 8; ++j) std::swap(aug.at(piv, j), aug.at(col, j));
        const Rational pv = aug.at(col, col);
        for (std::size_t j = 0; j < 8; ++j) aug.at(col, j) /= pv;
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == col || aug.at(r, col) == 0) continue;
            const Rational fmul = aug.at(r, col);
            for (std::size_t j = 0; j < 8; ++j) aug.at(r, j) -= fmul * aug.at(col, j);
        }
    }

    std::vector<std::vector<Rational>> t(6, std::vector<Rational>(6, 0));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s)
            t[r][static_cast<std::size_t>(rows_used[s])] = aug.at(r, 4 + s);

    // Last two rows of T: a basis of the left kernel of C.
    {
        linalg::MatQ ct(4, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 4; ++j) ct.at(j, i) = c.at(i, j);
        // kernel of C^t x = 0 over Q by elimination
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t col = 0; col < 6 && r < 4; ++col) {
            std::size_t piv = r;
            while (piv < 4 && ct.at(piv, col) == 0) ++piv;
            if (piv == 4) continue;
            if (piv != r)
                for (std::size_t j = 0; j < 6; ++j) std::swap(ct.at(piv, j), ct.at(r, j));
            const Rational pv = ct.at(r, col);
            for (std::size_t j = 0; j < 6; ++j) ct.at(r, j) /= pv;
            for (std::size_t i = 0; i < 4; ++i) {
                if (i == r || ct.at(i, col) == 0) continue;
                const Rational fmul = ct.at(i, col);
                for (std::size_t j = 0; j < 6; ++j) ct.at(i, j) -= fmul * ct.at(r, j);
            }
            pivots.push_back(col);
            ++r;
        }
        std::vector<bool> is_pivot(6, false);
        for (auto pcol : pivots) is_pivot[pcol] = true;
        std::size_t krow = 4;
        for (std::size_t free_c = 0; free_c < 6 && krow < 6; ++free_c) {
            if (is_pivot[free_c]) continue;
            t[krow].assign(6, 0);
            t[krow][free_c] = 1;
            for (std::size_t i = 0; i < r; ++i) t[krow][pivots[i]] = -ct.at(i, free_c);
            ++krow;
        }
    }

    // S = T^t acts on the first six coordinates: x = frame * diag(S, I2) * z.
    std::vector<std::vector<Rational>> full(8, std::vector<Rational>(8, 0));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) full[i][j] = t[j][i];
    full[6][6] = 1;
    full[7][7] = 1;

    std::vector<std::vector<Rational>> combined(8, std::vector<Rational>(8, 0));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < 8; ++k) s += frame[i][k] * full[k][j];
            combined[i][j] = s;
        }

    result.change = combined;
    result.restricted = restricted_partials(substitute(f, combined));
    return result;
}

}  // namespace fano::forms
