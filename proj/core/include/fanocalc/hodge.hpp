#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fanocalc/bott.hpp"
#include "fanocalc/fp.hpp"
#include "fanocalc/monomials.hpp"
#include "fanocalc/schur.hpp"
#include "fanocalc/weights.hpp"

namespace fano::hodge {

/// A twisting bundle on Gr(2,N): formal sum of Sigma^alpha Q (x) Sigma^beta T
/// labels (alpha of length N-2, beta a rank-2 label).
struct TwistLabel {
    IntWeight alpha;
    std::pair<std::int64_t, std::int64_t> beta;
    friend bool operator==(const TwistLabel&, const TwistLabel&) = default;
    friend auto operator<=>(const TwistLabel&, const TwistLabel&) = default;
};
using TwistExpr = std::map<TwistLabel, std::int64_t>;

TwistExpr twist_trivial(int N);
TwistExpr twist_sym_sub(int N, int d);   // S^d T
TwistExpr twist_cotangent(int N);        // Omega^1_G = Q* (x) T

/// One slot of the Koszul E_1 page: the surviving Sigma^lambda V groups.
struct PageEntry {
    std::map<IntWeight, std::int64_t> groups;
    Int dim = 0;
};

/// E_1 page of the Koszul complex of a regular section of S^d T* on Gr(2,N),
/// twisted: entry (i, q) holds H^q(G, Lambda^i(S^d T) (x) twist).
struct KoszulPage {
    int N = 0;
    int section_sym_degree = 0;  // the d of S^d T*
    std::map<std::pair<int, int>, PageEntry> grid;
};

KoszulPage koszul_page(int N, int d, const TwistExpr& twist);

/// Collapse of the page when no spectral-sequence differential can connect
/// two nonzero entries: d_r moves (i,q) -> (i-r, q-r+1), so a pair with
/// delta_i >= 1 and delta_q = delta_i - 1 blocks the collapse.
struct CollapseResult {
    bool ambiguous = false;
    std::map<int, Int> h;  // cohomology degree -> dimension (when unambiguous)
    // pairs of output degrees (q-i) whose entries a differential could connect
    std::vector<std::pair<int, int>> ambiguous_degrees;
};

CollapseResult collapse_page(const KoszulPage& page);

/// Hodge numbers of a smooth degree-d hypersurface in P^N by Griffiths
/// residue: Hilbert series of the Jacobian ring ((1-t^{d-1})/(1-t))^{N+1};
/// h^{N-p,p-1}_prim = coefficient in degree pd-N-1, with +1 on the middle
/// (p,p) slot when N-1 is even.
struct HypersurfaceHodge {
    int N = 0, d = 0;
    std::vector<Int> jacobian_hilbert;            // degree -> dim R_f
    std::map<std::pair<int, int>, Int> hodge;     // (N-p, p-1) -> h
};

HypersurfaceHodge hypersurface_hodge(int N, int d);

/// Verification of the vanishing H^q(Gr(2,2n), Lambda^t(S^n L)) = 0 for
/// q <= t, t > 0: nonzero cohomology only occurs at q in {2n-2, 4n-4}.
struct Gr2VanishingReport {
    int n = 0;
    bool pass = false;
    struct Entry {
        int t;
        std::pair<std::int64_t, std::int64_t> label;
        int q;
        Int dim;
    };
    std::vector<Entry> nonzero_groups;  // every Bott-nonzero summand
};

Gr2VanishingReport gr2_syml_vanishing(int n);

/// A homogeneous form over F_p with dense coefficient storage indexed by a
/// MonomialTable of the same (n_vars, degree).
struct FormFp {
    int n_vars = 0;
    int degree = 0;
    std::uint32_t p = 0;
    std::vector<std::uint32_t> coeff;  // size = #monomials
};

FormFp random_form_fp(int n_vars, int degree, std::uint32_t p, std::uint64_t seed);

struct PhiRank {
    std::int64_t rank;        // rank of phi_f : End(V) -> S^d V*
    std::int64_t kernel_psi;  // dim ker of the dual map = dim S^d V - rank
};

/// The 330 x 64 matrix of u |-> u(f) (Lie algebra action x_i d/d x_j on f).
/// Requires an 8-variable quartic over a prime field of characteristic > 4.
PhiRank griffiths_phi_rank(const FormFp& f);

/// Corank of the multiplication map S^e V (x) V* -> S^{e+d-1} V,
/// (q, j) |-> q * df/dx_j. For the quartic 6-fold e = 5; the degree-8
/// corank equals h^{3,3}_prim = 1107 for generic f.
std::int64_t jacobian_multiplication_corank(const FormFp& f, int e);

/// The quintic multiplication map S^5 V (x) V* -> S^8 V of the quartic
/// 6-fold (the 6435 x 6336 sparse rank); corank = h^{3,3}(Y)_prim.
std::int64_t griffiths_beta_corank(const FormFp& f);

/// Sparse triple dump (row col value per line) of the multiplication matrix.
void dump_multiplication_matrix(const FormFp& f, int e, const std::string& path);

/// End-to-end reproduction of the quartic 6-fold Hodge table. The two
/// paper-resolved ambiguities are hard-wired: the S^4 T page in degrees 4/5
/// is resolved by the rank of phi_f, and h^{2,2}(F) = h^{2,2}(G) + corank of
/// the quintic multiplication map.
struct QuarticFanoReport {
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    bool skip_matrix = false;

    HypersurfaceHodge hypersurface;                   // (i)
    std::map<int, Int> h_i0;                          // (ii): h^{i,0}(F)
    IntWeight of_top_weight = IntWeight::zero(1);     // Bott weight at (5,12)
    // (iii)
    Int h11 = 0, h12 = 0, h13 = 0, h22 = 0;
    std::int64_t phi_rank = -1;      // -1 when skip_matrix
    std::int64_t beta_corank = -1;   // -1 when skip_matrix
    bool series_route = false;       // h13/h22 derived from the Hilbert series only
};

QuarticFanoReport quartic_sixfold_fano(std::uint32_t prime, std::uint64_t seed, bool skip_matrix);

}  // namespace fano::hodge
