#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracles {

using fano::Partition;

namespace {

// Enumerate SSYT of the given shape with entries in 1..n, cell by cell.
void ssyt_rec(const std::vector<std::int64_t>& shape, int n,
              std::vector<std::vector<int>>& t, std::size_t row, std::int64_t col,
              SymPoly& out) {
    if (row == shape.size()) {
        std::vector<int> content(static_cast<std::size_t>(n), 0);
        for (const auto& r : t)
            for (int v : r) ++content[static_cast<std::size_t>(v - 1)];
        ++out[content];
        return;
    }
    if (col == shape[row]) {
        ssyt_rec(shape, n, t, row + 1, 0, out);
        return;
    }
    const std::size_t c = static_cast<std::size_t>(col);
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[row][c - 1]);                      // row weak
    if (row > 0 && col < shape[row - 1]) lo = std::max(lo, t[row - 1][c] + 1);  // col strict
    for (int v = lo; v <= n; ++v) {
        t[row][c] = v;
        ssyt_rec(shape, n, t, row, col + 1, out);
    }
    t[row][c] = 0;
}

}  // namespace

SymPoly schur_monomials(const Partition& lambda, int n) {
    SymPoly out;
    if (lambda.rows() > static_cast<std::size_t>(n)) return out;  // functor vanishes
    if (lambda.empty()) {
        out[std::vector<int>(static_cast<std::size_t>(n), 0)] = 1;
        return out;
    }
    std::vector<std::vector<int>> t;
    for (std::size_t r = 0; r < lambda.rows(); ++r)
        t.emplace_back(static_cast<std::size_t>(lambda.part(r)), 0);
    ssyt_rec(lambda.parts(), n, t, 0, 0, out);
    return out;
}

SymPoly mul(const SymPoly& a, const SymPoly& b) {
    SymPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out[e] += ca * cb;
        }
    return out;
}

std::map<Partition, std::int64_t> schur_decompose(SymPoly poly, int n) {
    std::map<Partition, std::int64_t> out;
    while (true) {
        // lex-largest monomial with nonzero coefficient; for a symmetric
        // polynomial its exponent vector is non-increasing
        auto lead = poly.rbegin();
        while (lead != poly.rend() && lead->second == 0) ++lead;
        if (lead == poly.rend()) break;
        const std::vector<int>& e = lead->first;
        const std::int64_t mult = lead->second;
        if (!std::is_sorted(e.rbegin(), e.rend()))
            throw std::logic_error("schur_decompose: leading monomial not dominant");
        if (mult < 0) throw std::logic_error("schur_decompose: negative multiplicity");
        std::vector<std::int64_t> parts(e.begin(), e.end());
        const Partition lambda(parts);
        out[lambda] += mult;
        const SymPoly s = schur_monomials(lambda, n);
        for (const auto& [em, cm] : s) {
            auto it = poly.find(em);
            if (it == poly.end()) poly.emplace(em, -mult * cm);
            else it->second -= mult * cm;
        }
    }
    for (const auto& [em, cm] : poly)
        if (cm != 0) throw std::logic_error("schur_decompose: nonzero residue");
    return out;
}

SymPoly ext_power_lambda2_char(int a, int r) {
    // all a-subsets of the C(r,2) wedge basis vectors
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
    SymPoly out;
    std::vector<int> pick;
    const std::size_t m = pairs.size();
    const auto rec = [&](auto&& self, std::size_t start, int left) -> void {
        if (left == 0) {
            std::vector<int> content(static_cast<std::size_t>(r), 0);
            for (int p : pick) {
                ++content[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].first)];
                ++content[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].second)];
            }
            ++out[content];
            return;
        }
        for (std::size_t i = start; i < m && m - i >= static_cast<std::size_t>(left); ++i) {
            pick.push_back(static_cast<int>(i));
            self(self, i + 1, left - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, a);
    return out;
}

SymPoly ext_power_sym_rank2_char(int d, int i) {
    // weights of S^d C^2: (d-j, j); choose i distinct ones
    SymPoly out;
    const auto rec = [&](auto&& self, int start, int left, int e0, int e1) -> void {
        if (left == 0) {
            ++out[std::vector<int>{e0, e1}];
            return;
        }
        for (int j = start; j <= d; ++j) self(self, j + 1, left - 1, e0 + d - j, e1 + j);
    };
    rec(rec, 0, i, 0, 0);
    return out;
}

SymPoly sym_power_sym_rank2_char(int d, int i) {
    SymPoly out;
    const auto rec = [&](auto&& self, int start, int left, int e0, int e1) -> void {
        if (left == 0) {
            ++out[std::vector<int>{e0, e1}];
            return;
        }
        for (int j = start; j <= d; ++j) self(self, j, left - 1, e0 + d - j, e1 + j);
    };
    rec(rec, 0, i, 0, 0);
    return out;
}

}  // namespace oracles
