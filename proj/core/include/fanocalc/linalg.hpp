#pragma once

#include <cstdint>
#include <vector>

#include "fanocalc/fp.hpp"
#include "fanocalc/rational.hpp"

namespace fano::linalg {

/// Minimal dense row-major matrix.
template <class T>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T{}) {}
    T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

using MatQ = Mat<Rational>;
using MatFp = Mat<std::uint32_t>;

/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(MatQ m);
std::size_t rank(MatFp m, const PrimeField& F);

/// Basis of the right kernel {x : Mx = 0}, as rows.
std::vector<std::vector<std::uint32_t>> kernel_basis(MatFp m, const PrimeField& F);

/// Row-echelon reduction in place; returns the rank. Pivot columns in order.
std::size_t echelonize(MatFp& m, const PrimeField& F, std::vector<std::size_t>* pivot_cols = nullptr);

/// Sparse matrix over F_p in row-major triplet-per-row form (columns sorted).
struct SparseFp {
    std::int64_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::int32_t, std::uint32_t>>> row;

    SparseFp(std::int64_t r, std::int64_t c) : rows(r), cols(c), row(static_cast<std::size_t>(r)) {}
    void add(std::int64_t i, std::int64_t j, std::uint32_t v) {
        if (v) row[static_cast<std::size_t>(i)].emplace_back(static_cast<std::int32_t>(j), v);
    }
    std::size_t nnz() const;
};

struct SparseRankStats {
    std::int64_t sparse_pivots = 0;   // pivots found in the Markowitz phase
    std::int64_t dense_pivots = 0;    // pivots found after densification
    double switch_density = 0.0;      // density of the remaining block at switch
};

/// Rank over F_p: sparse Gaussian elimination with Markowitz pivoting,
/// switching to a dense blocked elimination once fill-in makes the
/// remaining block dense (standard sparse-rank engineering). Deterministic.
std::int64_t sparse_rank(SparseFp m, const PrimeField& F, SparseRankStats* stats = nullptr,
                         double dense_switch_density = 0.30);

/// Dense rank over F_p for a row-major matrix of doubles holding exact
/// values in [0, p). Blocked right-looking elimination; panel updates are
/// rank-k dgemm calls with delayed modular reduction (exact because
/// k * p^2 < 2^53). Destroys the input.
std::int64_t dense_rank_fp(std::vector<double>& a, std::int64_t rows, std::int64_t cols,
                           std::uint32_t p);

}  // namespace fano::linalg
