#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fanocalc/weights.hpp"

namespace fano::schur {

/// Formal non-negative combination of Sigma^{(a,b)} labels on a rank-2 bundle.
using Rank2Expr = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;

/// Formal non-negative combination of Sigma^lambda labels on a bundle of a
/// fixed rank (labels with more rows than the rank are dropped: the Schur
/// functor vanishes there).
using PartitionExpr = std::map<Partition, std::int64_t>;

/// Clebsch-Gordan for rank 2:
/// Sigma^{a,b} (x) Sigma^{c,d} = sum_{j=0}^{min(a-b,c-d)} Sigma^{a+c-j, b+d+j}.
Rank2Expr rank2_tensor(const Rank2Expr& e1, const Rank2Expr& e2);

/// Lambda^i(S^d T) for a rank-2 bundle T, decomposed by the exact univariate
/// character method (elementary symmetric function of the d+1 weights of
/// S^d T, then greedy peel-off of highest weights). Requires 0 <= i <= d+1.
Rank2Expr rank2_ext_power(int d, int i);

/// S^i(S^d T), same character method with complete symmetric functions.
Rank2Expr rank2_sym_power(int d, int i);

/// Total rank of a rank-2 expression.
Int rank2_dim(const Rank2Expr& e);

/// Total rank of a partition-labelled expression over GL(rank).
Int partition_dim(const PartitionExpr& e, std::size_t rank);

/// Lambda^a(Lambda^2 U) = sum over W(a) of Sigma^{d(lambda)} U. W(a) is the
/// set of partitions lambda = (lambda_1 >= ... >= lambda_c >= c) with
/// a = |lambda| - c(c-1)/2, and
/// d(lambda) = (lambda_1,...,lambda_c, c^{lambda_c-c+1},
///              (c-1)^{lambda_{c-1}-lambda_c}, ..., 1^{lambda_1-lambda_2}).
/// Labels with more than rank_u rows are dropped. Multiplicity-free.
PartitionExpr ext_lambda2(int a, int rank_u);

/// Tensor product of partition-labelled expressions over a rank-r bundle,
/// expanded with Littlewood-Richardson coefficients.
PartitionExpr partition_tensor(const PartitionExpr& e1, const PartitionExpr& e2, int rank);

/// Sigma^{(a,b)'}(Lambda^2 U) for a >= b >= 0, via the two-column recursion
/// Lambda^a(E) (x) Lambda^b(E) = sum_{j=0}^{b} Sigma^{(a+j,b-j)'}(E).
/// Throws if a negative multiplicity ever appears (would signal a bug).
PartitionExpr two_column_schur(int a, int b, int rank_u);

/// The Koszul summands of Lambda^t(Lambda^2 U (x) L): pairs (a,b) with
/// a + b = t, a >= b >= 0; the term is Sigma^{(a,b)'}(Lambda^2 U) (x)
/// Sigma^{(a,b)} L.
std::vector<std::pair<int, int>> koszul_box_terms(int t);

}  // namespace fano::schur
