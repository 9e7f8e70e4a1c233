#include "fanocalc/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace fano::schur {

namespace {

// Sparse Laurent polynomial in one variable q with int64 coefficients,
// indexed by exponent. Characters here always have non-negative exponents.
using Char = std::map<std::int64_t, std::int64_t>;

// Peels a character (known to be a sum of rank-2 Schur characters of fixed
// total degree `total` for every monomial weight (a, total-a)) into labels.
// The character of Sigma^{a,b} at (q,1) is q^b + q^{b+1} + ... + q^a.
Rank2Expr peel_rank2(Char ch, std::int64_t total) {
    Rank2Expr out;
    while (!ch.empty()) {
        auto top = std::prev(ch.end());
        const std::int64_t a = top->first;
        const std::int64_t mult = top->second;
        const std::int64_t b = total - a;
        if (mult <= 0 || b > a)
            throw std::logic_error("character peel failed: not a sum of Schur characters");
        for (std::int64_t e = b; e <= a; ++e) {
            auto it = ch.find(e);
            if (it == ch.end())
                throw std::logic_error("character peel failed: missing exponent");
            it->second -= mult;
            if (it->second == 0) ch.erase(it);
        }
        out[{a, b}] += mult;
    }
    return out;
}

}  // namespace

Rank2Expr rank2_tensor(const Rank2Expr& e1, const Rank2Expr& e2) {
    Rank2Expr out;
    for (const auto& [l1, m1] : e1)
        for (const auto& [l2, m2] : e2) {
            const auto [a, b] = l1;
            const auto [c, d] = l2;
            if (a < b || c < d) throw std::invalid_argument("rank2_tensor: labels must be sorted");
            const std::int64_t jmax = std::min(a - b, c - d);
            for (std::int64_t j = 0; j <= jmax; ++j) out[{a + c - j, b + d + j}] += m1 * m2;
        }
    return out;
}

Rank2Expr rank2_ext_power(int d, int i) {
    if (i < 0 || i > d + 1) throw std::invalid_argument("rank2_ext_power: need 0 <= i <= d+1");
    // e_i of the weights q^d, q^{d-1}, ..., q^0: DP over "take or skip".
    // dp[k] = generating polynomial of k-subsets chosen so far.
    std::vector<Char> dp(static_cast<std::size_t>(i) + 1);
    dp[0][0] = 1;
    for (std::int64_t w = 0; w <= d; ++w)
        for (int k = std::min(i, static_cast<int>(w) + 1); k >= 1; --k)
            for (const auto& [e, c] : dp[static_cast<std::size_t>(k - 1)])
                dp[static_cast<std::size_t>(k)][e + w] += c;
    return peel_rank2(dp[static_cast<std::size_t>(i)], static_cast<std::int64_t>(i) * d);
}

Rank2Expr rank2_sym_power(int d, int i) {
    if (i < 0) throw std::invalid_argument("rank2_sym_power: need i >= 0");
    // h_i of the weights q^d, ..., q^0: multisets of size i.
    std::vector<Char> dp(static_cast<std::size_t>(i) + 1);
    dp[0][0] = 1;
    // increasing k: dp[k-1] already contains multisets using w, so w repeats
    for (std::int64_t w = 0; w <= d; ++w)
        for (int k = 1; k <= i; ++k)
            for (const auto& [e, c] : dp[static_cast<std::size_t>(k - 1)])
                dp[static_cast<std::size_t>(k)][e + w] += c;
    return peel_rank2(dp[static_cast<std::size_t>(i)], static_cast<std::int64_t>(i) * d);
}

Int rank2_dim(const Rank2Expr& e) {
    Int total = 0;
    for (const auto& [label, mult] : e) total += mult * (label.first - label.second + 1);
    return total;
}

Int partition_dim(const PartitionExpr& e, std::size_t rank) {
    Int total = 0;
    for (const auto& [label, mult] : e) total += mult * weyl_dim(label, rank);
    return total;
}

namespace {

// Enumerates lambda_1 >= ... >= lambda_c >= c with given weight.
void enumerate_wa(std::int64_t remaining, std::int64_t max_part, std::int64_t c, std::size_t row,
                  std::vector<std::int64_t>& acc, std::vector<std::vector<std::int64_t>>& out) {
    if (row == static_cast<std::size_t>(c)) {
        if (remaining == 0) out.push_back(acc);
        return;
    }
    const std::int64_t rows_left = c - static_cast<std::int64_t>(row);
    for (std::int64_t p = std::min(remaining - c * (rows_left - 1), max_part); p >= c; --p) {
        acc.push_back(p);
        enumerate_wa(remaining - p, p, c, row + 1, acc, out);
        acc.pop_back();
    }
}

Partition d_of_lambda(const std::vector<std::int64_t>& lambda) {
    const std::int64_t c = static_cast<std::int64_t>(lambda.size());
    std::vector<std::int64_t> d(lambda);
    const std::int64_t lc = lambda.back();
    for (std::int64_t r = 0; r < lc - c + 1; ++r) d.push_back(c);
    for (std::int64_t j = c - 1; j >= 1; --j) {
        const std::int64_t reps = lambda[static_cast<std::size_t>(j - 1)] - lambda[static_cast<std::size_t>(j)];
        for (std::int64_t r = 0; r < reps; ++r) d.push_back(j);
    }
    return Partition(std::move(d));
}

}  // namespace

PartitionExpr ext_lambda2(int a, int rank_u) {
    if (a < 0) throw std::invalid_argument("ext_lambda2: need a >= 0");
    PartitionExpr out;
    if (a == 0) {
        out[Partition{}] = 1;
        return out;
    }
    // lambda = (lambda_1 >= ... >= lambda_c >= c), |lambda| = a + c(c-1)/2.
    // (The box count |d(lambda)| = 2|lambda| - c(c-1) = 2a pins this form.)
    for (std::int64_t c = 1;; ++c) {
        const std::int64_t target = a + c * (c - 1) / 2;
        if (c * c > target) break;  // |lambda| >= c^2 is impossible beyond this
        std::vector<std::vector<std::int64_t>> lambdas;
        std::vector<std::int64_t> acc;
        enumerate_wa(target, target, c, 0, acc, lambdas);
        for (const auto& lambda : lambdas) {
            Partition d = d_of_lambda(lambda);
            if (d.rows() <= static_cast<std::size_t>(rank_u)) out[d] += 1;
        }
    }
    return out;
}

PartitionExpr partition_tensor(const PartitionExpr& e1, const PartitionExpr& e2, int rank) {
    PartitionExpr out;
    for (const auto& [l1, m1] : e1)
        for (const auto& [l2, m2] : e2)
            for (const auto& [lambda, c] : lr_coefficients(l1, l2))
                if (lambda.rows() <= static_cast<std::size_t>(rank)) out[lambda] += m1 * m2 * c;
    return out;
}

PartitionExpr two_column_schur(int a, int b, int rank_u) {
    if (a < b || b < 0) throw std::invalid_argument("two_column_schur: need a >= b >= 0");
    if (b == 0) return ext_lambda2(a, rank_u);
    PartitionExpr acc = partition_tensor(ext_lambda2(a, rank_u), ext_lambda2(b, rank_u), rank_u);
    for (int j = 1; j <= b; ++j) {
        for (const auto& [label, mult] : two_column_schur(a + j, b - j, rank_u)) {
            auto it = acc.find(label);
            if (it == acc.end() || it->second < mult)
                throw std::logic_error("two_column_schur: negative multiplicity");
            it->second -= mult;
            if (it->second == 0) acc.erase(it);
        }
    }
    return acc;
}

std::vector<std::pair<int, int>> koszul_box_terms(int t) {
    if (t < 0) throw std::invalid_argument("koszul_box_terms: need t >= 0");
    std::vector<std::pair<int, int>> out;
    for (int a = t, b = 0; a >= b; --a, ++b) out.emplace_back(a, b);
    return out;
}

}  // namespace fano::schur
