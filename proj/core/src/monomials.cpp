#include "fanocalc/monomials.hpp"

#include <stdexcept>

namespace fano {

namespace {

void enumerate(int n_vars, int var, int remaining, Monomial& acc, std::vector<Monomial>& out) {
    if (var == n_vars - 1) {
        acc[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(remaining);
        out.push_back(acc);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        acc[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
        enumerate(n_vars, var + 1, remaining - e, acc, out);
    }
}

}  // namespace

MonomialTable::MonomialTable(int n_vars, int degree) : n_vars_(n_vars), degree_(degree) {
    if (n_vars < 1 || degree < 0) throw std::invalid_argument("MonomialTable: bad arguments");
    Monomial acc(static_cast<std::size_t>(n_vars), 0);
    enumerate(n_vars, 0, degree, acc, monomials_);
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
}

std::size_t MonomialTable::rank(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("MonomialTable: monomial not in table");
    return it->second;
}

FormQ derivative(const FormQ& f, int i) {
    FormQ g;
    g.n_vars = f.n_vars;
    g.degree = f.degree - 1;
    for (const auto& [m, c] : f.coeff) {
        const auto e = m[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        Monomial d = m;
        --d[static_cast<std::size_t>(i)];
        g.add(d, c * static_cast<int>(e));
    }
    return g;
}

FormQ substitute(const FormQ& f, const std::vector<std::vector<Rational>>& m) {
    const int n = f.n_vars;
    FormQ out;
    out.n_vars = n;
    out.degree = f.degree;
    // Expand each monomial as a product of substituted linear forms.
    for (const auto& [mono, c] : f.coeff) {
        // Polynomial in y, built factor by factor.
        std::map<Monomial, Rational> acc;
        acc.emplace(Monomial(static_cast<std::size_t>(n), 0), c);
        for (int i = 0; i < n; ++i) {
            for (int rep = 0; rep < mono[static_cast<std::size_t>(i)]; ++rep) {
                std::map<Monomial, Rational> next;
                for (const auto& [my, cy] : acc) {
                    for (int j = 0; j < n; ++j) {
                        const Rational& mij = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                        if (mij == 0) continue;
                        Monomial t = my;
                        ++t[static_cast<std::size_t>(j)];
                        auto [it, fresh] = next.emplace(t, cy * mij);
                        if (!fresh) it->second += cy * mij;
                    }
                }
                acc.swap(next);
            }
        }
        for (const auto& [my, cy] : acc) out.add(my, cy);
    }
    return out;
}

}  // namespace fano
