#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fanocalc/weights.hpp"

namespace fano::bott {

/// An irreducible homogeneous bundle Sigma^alpha Q (x) Sigma^beta S on
/// Gr(m, N), with S the rank-m tautological subbundle and Q = V/S.
struct GrassmannianBundle {
    int N;                     // ambient dimension
    int m;                     // rank of the subbundle, 1 <= m <= N-1
    IntWeight quotient_weight; // alpha, length N-m
    IntWeight sub_weight;      // beta, length m

    GrassmannianBundle(int N_, int m_, IntWeight alpha, IntWeight beta);
};

/// Output of Bott's theorem: either everything vanishes, or exactly one
/// cohomology group H^q = Sigma^lambda V survives.
struct BottResult {
    bool vanishing;
    int q = 0;                  // cohomological degree (inversion count)
    std::optional<IntWeight> lambda;
    Int dim = 0;

    static BottResult vanish() { return BottResult{true, 0, std::nullopt, 0}; }
};

/// The Bott recipe: form s = (alpha, beta) + rho with rho = (N, N-1, ..., 1).
/// A repeated entry means vanishing; otherwise q is the number of inversions
/// of s and lambda = sort_descending(s) - rho.
BottResult cohomology(const GrassmannianBundle& b);

/// Convenience for Gr(2,N) line computations: Sigma^{(a,b)} S with trivial
/// quotient weight.
BottResult cohomology_sub_rank2(int N, std::int64_t a, std::int64_t b);

/// Closed-form nonvanishing conditions for H^q(Gr(2,8), Sigma^{(a,b)}S):
/// q = 0 iff 0 >= a >= b; q = 6 iff a >= 7 and 1 >= b; q = 12 iff a >= b >= 8.
std::optional<int> line_condition_q(std::int64_t a, std::int64_t b);

struct LineConditionCase {
    std::int64_t a, b;
    std::optional<int> expected_q;  // from the closed form
    std::optional<int> computed_q;  // from the recipe
    bool pass;
};

/// Sweeps all pairs |a|,|b| <= max_abs with a >= b on Gr(2,8) and checks the
/// recipe against the closed-form conditions.
std::vector<LineConditionCase> line_conditions_sweep(std::int64_t max_abs);

}  // namespace fano::bott
