#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fanocalc/monomials.hpp"
#include "fanocalc/rational.hpp"
#include "fanocalc/rng.hpp"

namespace fano::forms {

/// An alternating p-linear form on an n-dimensional space, stored by exact
/// rational coefficients on strictly increasing index tuples (0-based).
struct AltForm {
    int p = 0;
    int n = 0;
    std::map<std::vector<int>, Rational> coeff;

    void add(std::vector<int> idx, const Rational& c);  // sorts, tracks sign
    bool is_zero() const { return coeff.empty(); }
};

/// f(v_1, ..., v_p) for column vectors of length n.
Rational eval(const AltForm& f, const std::vector<std::vector<Rational>>& vectors);

AltForm wedge(const AltForm& f, const AltForm& g);
AltForm contract(const AltForm& f, const std::vector<Rational>& u);  // iota_u f

/// Pullback along g (n x n): (g.f)_J = sum_I f_I det g[I, J]. A right
/// GL-action on forms; all orbit invariants are constant along it.
AltForm transform(const AltForm& f, const std::vector<std::vector<Rational>>& g);

/// Poincare-type dual with respect to the volume e_0 ^ ... ^ e_{n-1}:
/// a p-form goes to an (n-p)-form on the dual space.
AltForm dual_form(const AltForm& f);

AltForm random_form(int p, int n, Rng& rng, std::int64_t coeff_bound = 9);

/// Tangent coordinates (a0, a1, b0, b1, c1, c2, c3) of a deformation of a
/// first-type line, matching the basis in which alpha4 is expressed.
struct TangentVector7 {
    Rational a0, a1, b0, b1, c1, c2, c3;
};

/// The explicit value of the 4-form at a first-type line: the signed sum of
/// four 4x4 determinants in the tangent coordinates.
Rational eval_alpha4(const TangentVector7& x1, const TangentVector7& x2,
                     const TangentVector7& x3, const TangentVector7& x4);

/// The same 4-form as an AltForm in the basis order (a0,a1,b0,b1,c1,c2,c3):
/// a0^b0^c2^c3 - a0^b1^c1^c3 - a1^b0^c1^c3 + a1^b1^c1^c2.
AltForm alpha4_as_form();

/// Rank of the bilinear form B(x, y) = f(x ^ y) on Lambda^k V (p = 2k).
int two_rank(const AltForm& f);

/// Dimension of the GL(V)-orbit of f: the rank of gl(V) -> Lambda^p,
/// X -> (derivation action of X on f).
int orbit_dim(const AltForm& f);

/// Rank of the quadratic form q defined by w ^ (u . w) ^ (u . w) = q(u) Ω
/// for a 3-form w in 7 variables; a 4-form is first dualized to a 3-form.
int q_rank(const AltForm& f);

struct OrbitRecord {
    std::string name;  // "O1".."O9" or "zero"
    int orbit_dim;
    int two_rank;
    int q_rank;
};

/// The ten GL(7)-orbits of 4-forms with their invariant triples.
const std::array<OrbitRecord, 10>& orbit_table();

/// Matches the computed triple (orbit_dim, two_rank, q_rank) against the
/// orbit table; the triples are pairwise distinct. Throws on no match.
OrbitRecord classify_orbit(const AltForm& f);

enum class LineType { FirstType, SecondType, Singular };

struct BinaryCubic {
    std::array<Rational, 4> c;  // x6^3, x6^2 x7, x6 x7^2, x7^3
    friend bool operator==(const BinaryCubic&, const BinaryCubic&) = default;
};

struct LineTypeResult {
    LineType type;
    int span_dim;                           // dim of the span of the f-bar_i
    std::vector<std::vector<Rational>> change;  // 8x8 coordinate change used
    std::array<BinaryCubic, 6> restricted;  // f-bar_i in the final coordinates
};

/// Classifies a line on the quartic {f = 0} in P^7: FirstType iff the six
/// restricted partials span the 4-space of binary cubics, SecondType iff
/// they span a 3-space. For a first-type line the returned change of
/// coordinates realizes f-bar = (x6^3, x6^2 x7, x6 x7^2, x7^3, 0, 0).
/// Throws if the line is not contained in {f = 0}; a span of dimension <= 2
/// (a singular point of the quartic on the line) is reported as Singular.
LineTypeResult line_type(const FormQ& f, const std::vector<Rational>& point1,
                         const std::vector<Rational>& point2);

}  // namespace fano::forms
