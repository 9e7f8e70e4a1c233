#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fanocalc/fp.hpp"
#include "fanocalc/rational.hpp"
#include "fanocalc/rng.hpp"

namespace fano::pfaff {

/// Skew-symmetric matrix over an exact field K, stored densely with the
/// antisymmetry kept as an invariant of the setter.
template <class K>
class Skew {
public:
    explicit Skew(int size) : n_(size), a_(static_cast<std::size_t>(size) * size, K{}) {
        if (size <= 0) throw std::invalid_argument("Skew: size must be positive");
    }

    int size() const { return n_; }
    const K& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    template <class Neg>
    void set(int i, int j, const K& v, Neg neg) {
        if (i == j && !(v == K{})) throw std::invalid_argument("Skew: nonzero diagonal");
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = neg(v);
    }

private:
    int n_;
    std::vector<K> a_;
};

using SkewQ = Skew<Rational>;
using SkewFp = Skew<std::uint32_t>;

/// Pf(M), by expansion along the first remaining row with memoization over
/// index subsets. Requires even size. Pf(M)^2 = det(M).
Rational pfaffian(const SkewQ& m);
std::uint32_t pfaffian(const SkewFp& m, const PrimeField& F);

/// Pfaffian of the principal minor on the index subset `rows` (even size).
Rational pfaffian_minor(const SkewQ& m, const std::vector<int>& rows);
std::uint32_t pfaffian_minor(const SkewFp& m, const std::vector<int>& rows, const PrimeField& F);

/// True iff all principal Pfaffian minors of size 2(n-k+1) vanish, i.e. the
/// form lies on the stratum rank <= 2n-2k. Requires 1 <= k <= n-1.
bool rank_stratum(const SkewQ& m, int k);
bool rank_stratum(const SkewFp& m, int k, const PrimeField& F);

/// Matrix rank (for cross-checking the Pfaffian stratum test).
int rank(const SkewQ& m);
int rank(const SkewFp& m, const PrimeField& F);

/// A pencil of skew forms s*A + t*B over F_p.
struct SkewPencil {
    SkewFp A, B;
    SkewPencil(SkewFp a, SkewFp b) : A(std::move(a)), B(std::move(b)) {
        if (A.size() != B.size()) throw std::invalid_argument("SkewPencil: size mismatch");
    }
};

struct HullResult {
    bool constant_rank;  // every member of the pencil has rank exactly 2n-2k
    int hull_dim;        // dim of the span of the kernels at the sampled members
    int target_rank;     // 2n-2k
};

/// Samples the pencil at 2n+1 parameter values of P^1 and checks constant
/// rank both pointwise and symbolically (the Pfaffian minors of A + tB are
/// interpolated as polynomials in t; the sigma_k minors must vanish
/// identically and the next stratum's minors must have no common root).
/// For a constant-rank pencil the kernel hull has dimension n+k.
HullResult pencil_kernel_hull(const SkewPencil& p, int k, const PrimeField& F);

struct HullTrialsReport {
    int n, k, trials;
    std::uint64_t seed;
    std::uint32_t prime;
    int accepted;                    // pencils passing the constant-rank filter
    std::map<int, int> hull_hist;    // hull_dim -> count over accepted pencils
    std::uint64_t rejected;          // random draws discarded by the filter
};

/// Rejection-samples random pencils over F_p until `trials` constant-rank
/// ones are found, and records the distribution of kernel hull dimensions.
HullTrialsReport run_hull_trials(int n, int k, int trials, std::uint64_t seed, std::uint32_t prime);

/// deg Gr(2, n+1) = (2n-2)! / (n! (n-1)!), the Catalan number C_{n-1}.
Int catalan_degree(int n);

/// c_n = (n^2 - 3n + 4)/2 = (n-1)(n-2)/2 + 1.
std::int64_t cn_constant(int n);

struct CrepancyBidegrees {
    std::pair<std::int64_t, std::int64_t> det_bidegree;        // (2n, n(n+1)/2)
    std::pair<std::int64_t, std::int64_t> canonical_bidegree;  // (0, -3n(n-1)/2)
};

/// Adjunction arithmetic for the resolution cut out by a section of
/// Lambda^2 U* (x) L* on Gr(n+1,2n) x Gr(2, Lambda^2 W*): the first slot of
/// the canonical bidegree vanishing witnesses crepancy.
CrepancyBidegrees crepancy_bidegrees(int n);

}  // namespace fano::pfaff
