#include "fanocalc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <cblas.h>

namespace fano::linalg {

std::size_t rank(MatQ m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Rational inv_p = m.at(r, c);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c) / inv_p;
            m.at(i, c) = 0;
            for (std::size_t j = c + 1; j < m.cols; ++j)
                if (!(m.at(r, j) == 0)) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t echelonize(MatFp& m, const PrimeField& F, std::vector<std::size_t>* pivot_cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const std::uint32_t inv = F.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const std::uint32_t f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

std::size_t rank(MatFp m, const PrimeField& F) { return echelonize(m, F); }

std::vector<std::vector<std::uint32_t>> kernel_basis(MatFp m, const PrimeField& F) {
    std::vector<std::size_t> pivots;
    const std::size_t r = echelonize(m, F, &pivots);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free_c = 0; free_c < m.cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<std::uint32_t> v(m.cols, 0);
        v[free_c] = 1;
        for (std::size_t i = 0; i < r; ++i)
            v[pivots[i]] = F.neg(m.at(i, free_c));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t SparseFp::nnz() const {
    std::size_t n = 0;
    for (const auto& r : row) n += r.size();
    return n;
}

namespace {

// Merge dst <- dst + f * src (sorted sparse rows).
void sparse_axpy(std::vector<std::pair<std::int32_t, std::uint32_t>>& dst,
                 const std::vector<std::pair<std::int32_t, std::uint32_t>>& src,
                 std::uint32_t f, const PrimeField& F,
                 std::vector<std::pair<std::int32_t, std::uint32_t>>& scratch) {
    scratch.clear();
    scratch.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            scratch.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            scratch.emplace_back(src[j].first, F.mul(f, src[j].second));
            ++j;
        } else {
            const std::uint32_t v = F.add(dst[i].second, F.mul(f, src[j].second));
            if (v) scratch.emplace_back(dst[i].first, v);
            ++i;
            ++j;
        }
    }
    dst.swap(scratch);
}

}  // namespace

std::int64_t dense_rank_fp(std::vector<double>& a, std::int64_t rows, std::int64_t cols,
                           std::uint32_t p) {
    if (p == 0 || static_cast<double>(p) * p * 256 >= 9007199254740992.0)  // 2^53
        throw std::invalid_argument("dense_rank_fp: modulus too large for delayed reduction");
    const double dp = static_cast<double>(p);
    const double inv_p = 1.0 / dp;
    const std::int64_t NB = 128;  // panel width; NB * p^2 < 2^53 holds for p < 2*10^5

    auto reduce = [&](double x) {
        double r = x - std::floor(x * inv_p) * dp;
        if (r >= dp) r -= dp;
        if (r < 0) r += dp;
        return r;
    };
    auto inv_mod = [&](std::uint64_t x) {
        // Fermat inverse
        std::uint64_t r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<double>(r);
    };

    std::int64_t rank_rows = 0;  // rows 0..rank_rows-1 hold pivot rows
    for (std::int64_t c0 = 0; c0 < cols && rank_rows < rows; c0 += NB) {
        const std::int64_t c1 = std::min(c0 + NB, cols);
        const std::int64_t panel_start = rank_rows;
        std::vector<std::int64_t> piv_cols;

        // Unblocked elimination restricted to the panel columns.
        for (std::int64_t c = c0; c < c1 && rank_rows < rows; ++c) {
            std::int64_t piv = -1;
            for (std::int64_t i = rank_rows; i < rows; ++i)
                if (a[static_cast<std::size_t>(i) * cols + c] != 0.0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            if (piv != rank_rows) {
                double* r1 = &a[static_cast<std::size_t>(piv) * cols];
                double* r2 = &a[static_cast<std::size_t>(rank_rows) * cols];
                std::swap_ranges(r1, r1 + cols, r2);
            }
            const double* prow = &a[static_cast<std::size_t>(rank_rows) * cols];
            const double pinv = inv_mod(static_cast<std::uint64_t>(prow[c]));
            for (std::int64_t i = rank_rows + 1; i < rows; ++i) {
                double* row = &a[static_cast<std::size_t>(i) * cols];
                if (row[c] == 0.0) continue;
                const double f = reduce(row[c] * pinv);        // multiplier
                const double nf = f == 0.0 ? 0.0 : dp - f;     // -f mod p
                for (std::int64_t j = c + 1; j < c1; ++j)
                    row[j] = reduce(row[j] + nf * prow[j]);
                row[c] = f;  // store multiplier in place of the zeroed entry
            }
            piv_cols.push_back(c);
            ++rank_rows;
        }

        const std::int64_t kp = rank_rows - panel_start;
        if (kp == 0 || c1 >= cols) continue;
        const std::int64_t trail = cols - c1;

        // Pivot rows of this panel: triangular update of their trailing parts
        // (row j gets contributions from earlier panel pivots only).
        for (std::int64_t j = 1; j < kp; ++j) {
            double* rj = &a[static_cast<std::size_t>(panel_start + j) * cols + c1];
            for (std::int64_t i = 0; i < j; ++i) {
                const double f =
                    a[static_cast<std::size_t>(panel_start + j) * cols + piv_cols[static_cast<std::size_t>(i)]];
                if (f == 0.0) continue;
                const double* ri = &a[static_cast<std::size_t>(panel_start + i) * cols + c1];
                const double nf = dp - f;
                for (std::int64_t t = 0; t < trail; ++t) rj[t] += nf * ri[t];
                for (std::int64_t t = 0; t < trail; ++t) rj[t] = reduce(rj[t]);
            }
        }

        // Rows below the panel: one rank-kp gemm update, then one reduction.
        const std::int64_t below = rows - rank_rows;
        if (below > 0) {
            // Gather multipliers M (below x kp) and pivot rows U (kp x trail).
            std::vector<double> M(static_cast<std::size_t>(below) * kp);
            for (std::int64_t i = 0; i < below; ++i)
                for (std::int64_t k = 0; k < kp; ++k)
                    M[static_cast<std::size_t>(i) * kp + k] =
                        a[static_cast<std::size_t>(rank_rows + i) * cols +
                          piv_cols[static_cast<std::size_t>(k)]];
            std::vector<double> U(static_cast<std::size_t>(kp) * trail);
            for (std::int64_t k = 0; k < kp; ++k)
                std::memcpy(&U[static_cast<std::size_t>(k) * trail],
                            &a[static_cast<std::size_t>(panel_start + k) * cols + c1],
                            static_cast<std::size_t>(trail) * sizeof(double));
            // A_below_trail -= M * U   (exact in doubles: kp * p^2 < 2^53)
            cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(below),
                        static_cast<int>(trail), static_cast<int>(kp), -1.0, M.data(),
                        static_cast<int>(kp), U.data(), static_cast<int>(trail), 1.0,
                        &a[static_cast<std::size_t>(rank_rows) * cols + c1], static_cast<int>(cols));
#pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < below; ++i) {
                double* row = &a[static_cast<std::size_t>(rank_rows + i) * cols + c1];
                for (std::int64_t t = 0; t < trail; ++t) row[t] = reduce(row[t]);
            }
        }
    }
    return rank_rows;
}

std::int64_t sparse_rank(SparseFp m, const PrimeField& F, SparseRankStats* stats,
                         double dense_switch_density) {
    SparseRankStats local{};
    std::vector<std::pair<std::int32_t, std::uint32_t>> scratch;

    // Active rows; eliminated ones are dropped. Column occupancy counts are
    // kept for Markowitz scores.
    std::vector<std::vector<std::pair<std::int32_t, std::uint32_t>>> rowsv;
    rowsv.reserve(m.row.size());
    for (auto& r : m.row)
        if (!r.empty()) rowsv.push_back(std::move(r));

    std::vector<std::int64_t> col_count(static_cast<std::size_t>(m.cols), 0);
    auto recount = [&]() {
        std::fill(col_count.begin(), col_count.end(), 0);
        for (const auto& r : rowsv)
            for (const auto& [c, v] : r) ++col_count[static_cast<std::size_t>(c)];
    };
    recount();

    std::int64_t pivots = 0;
    while (!rowsv.empty()) {
        // Density check on the remaining block.
        std::size_t nnz = 0;
        for (const auto& r : rowsv) nnz += r.size();
        std::int64_t active_cols = 0;
        for (auto c : col_count) active_cols += (c > 0);
        if (active_cols == 0) break;
        const double density =
            static_cast<double>(nnz) / (static_cast<double>(rowsv.size()) * active_cols);
        if (density > dense_switch_density ||
            static_cast<double>(rowsv.size()) * active_cols < 65536.0) {
            // Densify the remaining block (compressing active columns).
            std::vector<std::int32_t> col_map(static_cast<std::size_t>(m.cols), -1);
            std::int32_t nc = 0;
            for (std::int64_t c = 0; c < m.cols; ++c)
                if (col_count[static_cast<std::size_t>(c)] > 0)
                    col_map[static_cast<std::size_t>(c)] = nc++;
            std::vector<double> dense(rowsv.size() * static_cast<std::size_t>(nc), 0.0);
            for (std::size_t i = 0; i < rowsv.size(); ++i)
                for (const auto& [c, v] : rowsv[i])
                    dense[i * static_cast<std::size_t>(nc) +
                          static_cast<std::size_t>(col_map[static_cast<std::size_t>(c)])] = v;
            local.switch_density = density;
            local.dense_pivots = dense_rank_fp(dense, static_cast<std::int64_t>(rowsv.size()), nc,
                                               F.modulus());
            pivots += local.dense_pivots;
            break;
        }

        // Markowitz pivot: among the sparsest few rows, minimize
        // (row_nnz - 1) * (col_count - 1).
        std::size_t best_row = 0;
        std::size_t shortest = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < rowsv.size(); ++i)
            if (rowsv[i].size() < shortest) {
                shortest = rowsv[i].size();
                best_row = i;
            }
        std::int64_t best_score = std::numeric_limits<std::int64_t>::max();
        std::int32_t piv_col = -1;
        std::size_t piv_row = best_row;
        for (std::size_t i = 0; i < rowsv.size(); ++i) {
            if (rowsv[i].size() > shortest + 2) continue;  // bounded candidate set
            for (const auto& [c, v] : rowsv[i]) {
                const std::int64_t score = static_cast<std::int64_t>(rowsv[i].size() - 1) *
                                           (col_count[static_cast<std::size_t>(c)] - 1);
                if (score < best_score) {
                    best_score = score;
                    piv_col = c;
                    piv_row = i;
                }
            }
            if (best_score == 0) break;
        }

        // Eliminate the pivot column from every other row holding it.
        auto piv = std::move(rowsv[piv_row]);
        if (piv_row != rowsv.size() - 1) rowsv[piv_row] = std::move(rowsv.back());
        rowsv.pop_back();
        for (const auto& [c, v] : piv) --col_count[static_cast<std::size_t>(c)];
        std::uint32_t piv_val = 0;
        for (const auto& [c, v] : piv)
            if (c == piv_col) piv_val = v;
        const std::uint32_t piv_inv = F.inv(piv_val);

        for (auto& r : rowsv) {
            auto it = std::lower_bound(r.begin(), r.end(), piv_col,
                                       [](const auto& e, std::int32_t c) { return e.first < c; });
            if (it == r.end() || it->first != piv_col) continue;
            const std::uint32_t f = F.neg(F.mul(it->second, piv_inv));
            for (const auto& [c, v] : r) --col_count[static_cast<std::size_t>(c)];
            sparse_axpy(r, piv, f, F, scratch);
            for (const auto& [c, v] : r) ++col_count[static_cast<std::size_t>(c)];
        }
        std::erase_if(rowsv, [](const auto& r) { return r.empty(); });
        ++pivots;
        ++local.sparse_pivots;
    }

    if (stats) *stats = local;
    return pivots;
}

}  // namespace fano::linalg
