#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fanocalc/rational.hpp"

namespace fano {

/// Exponent vector of a monomial; length = number of variables.
using Monomial = std::vector<std::uint8_t>;

/// Enumeration of all degree-d monomials in n variables, with rank lookup.
/// Order is lexicographic in the exponent vector.
class MonomialTable {
public:
    MonomialTable(int n_vars, int degree);

    std::size_t size() const { return monomials_.size(); }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    std::size_t rank(const Monomial& m) const;
    int n_vars() const { return n_vars_; }
    int degree() const { return degree_; }

private:
    int n_vars_, degree_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> index_;
};

/// A homogeneous form of fixed degree with exact coefficients.
template <class K>
struct Form {
    int n_vars = 0;
    int degree = 0;
    std::map<Monomial, K> coeff;  // only nonzero entries

    void add(const Monomial& m, const K& v) {
        auto it = coeff.find(m);
        if (it == coeff.end()) {
            if (!(v == K{})) coeff.emplace(m, v);
        } else {
            it->second = it->second + v;
            if (it->second == K{}) coeff.erase(it);
        }
    }
};

using FormQ = Form<Rational>;

/// d/dx_i, degree drops by one.
FormQ derivative(const FormQ& f, int i);

/// Substitution x_i = sum_j m[i][j] * y_j (m is n x n, acting on variables).
FormQ substitute(const FormQ& f, const std::vector<std::vector<Rational>>& m);

}  // namespace fano
