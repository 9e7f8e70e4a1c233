#include <doctest.h>

#include "fanocalc/linalg.hpp"
#include "fanocalc/rng.hpp"

using namespace fano;
using namespace fano::linalg;

namespace {

MatFp random_low_rank(std::size_t rows, std::size_t cols, std::size_t r, const PrimeField& F,
                      Rng& rng) {
    // product of rows x r and r x cols has rank exactly r with overwhelming
    // probability; verified against the echelon rank below anyway
    MatFp a(rows, r), b(r, cols), m(rows, cols);
    for (auto& v : a.a) v = static_cast<std::uint32_t>(rng.below(F.modulus()));
    for (auto& v : b.a) v = static_cast<std::uint32_t>(rng.below(F.modulus()));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            const std::uint64_t aik = a.at(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = F.add(m.at(i, j), static_cast<std::uint32_t>(aik * b.at(k, j) % F.modulus()));
        }
    return m;
}

std::int64_t dense_rank_of(const MatFp& m, std::uint32_t p) {
    std::vector<double> a(m.a.size());
    for (std::size_t i = 0; i < m.a.size(); ++i) a[i] = m.a[i];
    return dense_rank_fp(a, static_cast<std::int64_t>(m.rows), static_cast<std::int64_t>(m.cols), p);
}

std::int64_t sparse_rank_of(const MatFp& m, const PrimeField& F, double switch_density) {
    SparseFp s(static_cast<std::int64_t>(m.rows), static_cast<std::int64_t>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j)) s.add(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), m.at(i, j));
    return sparse_rank(std::move(s), F, nullptr, switch_density);
}

}  // namespace

TEST_CASE("dense blocked rank agrees with plain echelon rank") {
    const PrimeField F(65521);
    Rng rng(11);
    for (int t = 0; t < 12; ++t) {
        const std::size_t rows = 20 + rng.below(200);
        const std::size_t cols = 20 + rng.below(200);
        const std::size_t r = rng.below(std::min(rows, cols));
        const MatFp m = random_low_rank(rows, cols, r, F, rng);
        const std::size_t expect = rank(m, F);
        CHECK(dense_rank_of(m, F.modulus()) == static_cast<std::int64_t>(expect));
    }
}

TEST_CASE("sparse Markowitz rank agrees across switch policies") {
    const PrimeField F(32003);
    Rng rng(5);
    for (int t = 0; t < 8; ++t) {
        const std::size_t rows = 30 + rng.below(120);
        const std::size_t cols = 30 + rng.below(120);
        // sparse random matrix
        MatFp m(rows, cols);
        const std::size_t nnz = rows * cols / 12;
        for (std::size_t e = 0; e < nnz; ++e)
            m.at(rng.below(rows), rng.below(cols)) =
                static_cast<std::uint32_t>(rng.below(F.modulus()));
        const std::size_t expect = rank(m, F);
        CHECK(sparse_rank_of(m, F, 1.1) == static_cast<std::int64_t>(expect));   // never densify
        CHECK(sparse_rank_of(m, F, 0.0) == static_cast<std::int64_t>(expect));   // densify at once
        CHECK(sparse_rank_of(m, F, 0.10) == static_cast<std::int64_t>(expect));  // hybrid
    }
}

TEST_CASE("kernel basis spans the null space") {
    const PrimeField F(101);
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        const std::size_t rows = 5 + rng.below(20);
        const std::size_t cols = 5 + rng.below(20);
        const std::size_t r = rng.below(std::min(rows, cols));
        const MatFp m = random_low_rank(rows, cols, r, F, rng);
        const std::size_t rk = rank(m, F);
        const auto basis = kernel_basis(m, F);
        CHECK(basis.size() == cols - rk);
        for (const auto& v : basis)
            for (std::size_t i = 0; i < rows; ++i) {
                std::uint64_t acc = 0;
                for (std::size_t j = 0; j < cols; ++j)
                    acc = (acc + std::uint64_t(m.at(i, j)) * v[j]) % F.modulus();
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("rational rank on a known matrix") {
    MatQ m(3, 4);
    // rows: (1,2,3,4), (2,4,6,8), (0,1,1,0) -> rank 2
    const int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = vals[i][j];
    CHECK(rank(std::move(m)) == 2);
}
