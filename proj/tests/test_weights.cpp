#include <doctest.h>

#include "fanocalc/weights.hpp"
#include "oracles.hpp"

using fano::Int;
using fano::IntWeight;
using fano::Partition;

namespace {

Partition P(std::vector<std::int64_t> v) { return Partition(std::move(v)); }

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out{Partition{}};
    for (int w = 1; w <= max_weight; ++w) {
        // all partitions of w
        std::vector<std::int64_t> acc;
        const auto rec = [&](auto&& self, int rem, int maxp) -> void {
            if (rem == 0) {
                out.emplace_back(acc);
                return;
            }
            for (int p = std::min(rem, maxp); p >= 1; --p) {
                acc.push_back(p);
                self(self, rem - p, p);
                acc.pop_back();
            }
        };
        rec(rec, w, w);
    }
    return out;
}

}  // namespace

TEST_CASE("transpose examples") {
    CHECK(transpose(P({4})) == P({1, 1, 1, 1}));
    CHECK(transpose(P({2, 2})) == P({2, 2}));
    // (n-k+1, 0)' is a single column of length n-k+1; here n-k+1 = 4
    CHECK(transpose(P({4, 0})) == P({1, 1, 1, 1}));
    CHECK(transpose(P({3, 1})) == P({2, 1, 1}));
}

TEST_CASE("transpose is an involution") {
    for (const auto& p : partitions_up_to(9)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("LR: Pieri case") {
    const auto lr = fano::lr_coefficients(P({1}), P({1}));
    REQUIRE(lr.size() == 2);
    CHECK(lr.at(P({2})) == 1);
    CHECK(lr.at(P({1, 1})) == 1);
}

TEST_CASE("LR: (2,1) x (2,1) against the monomial-expansion oracle") {
    const auto lr = fano::lr_coefficients(P({2, 1}), P({2, 1}));

    // oracle: multiply the two Schur polynomials in 6 variables and
    // decompose
    const auto prod = oracles::mul(oracles::schur_monomials(P({2, 1}), 6),
                                   oracles::schur_monomials(P({2, 1}), 6));
    const auto expected = oracles::schur_decompose(prod, 6);
    CHECK(lr == expected);

    // frozen values computed by the oracle
    CHECK(lr.at(P({4, 2})) == 1);
    CHECK(lr.at(P({4, 1, 1})) == 1);
    CHECK(lr.at(P({3, 3})) == 1);
    CHECK(lr.at(P({3, 2, 1})) == 2);
    CHECK(lr.at(P({3, 1, 1, 1})) == 1);
    CHECK(lr.at(P({2, 2, 2})) == 1);
    CHECK(lr.at(P({2, 2, 1, 1})) == 1);
    CHECK(lr.size() == 7);
}

TEST_CASE("LR: symmetry in mu and nu") {
    const auto ps = partitions_up_to(4);
    for (const auto& mu : ps)
        for (const auto& nu : ps) CHECK(fano::lr_coefficients(mu, nu) == fano::lr_coefficients(nu, mu));
}

TEST_CASE("LR: oracle agreement on all pairs with |mu|+|nu| <= 6") {
    const auto ps = partitions_up_to(4);
    for (const auto& mu : ps)
        for (const auto& nu : ps) {
            if (mu.weight() + nu.weight() > 6 || mu.weight() + nu.weight() == 0) continue;
            const int n = static_cast<int>(mu.weight() + nu.weight());
            const auto prod = oracles::mul(oracles::schur_monomials(mu, n),
                                           oracles::schur_monomials(nu, n));
            CHECK(fano::lr_coefficients(mu, nu) == oracles::schur_decompose(prod, n));
        }
}

TEST_CASE("weyl_dim examples") {
    CHECK(fano::weyl_dim(IntWeight::zero(8), 8) == 1);
    CHECK(fano::weyl_dim(IntWeight({2, 1, 1, 1, 1, 1, 1, 0}), 8) == 63);  // sl(V)
    CHECK(fano::weyl_dim(IntWeight({2, 2, 0, 0, 0, 0, 0, 0}), 8) == 336);
    // a few classical ones
    CHECK(fano::weyl_dim(IntWeight({1, 0, 0, 0, 0, 0, 0, 0}), 8) == 8);
    CHECK(fano::weyl_dim(IntWeight({1, 1, 0, 0, 0, 0, 0, 0}), 8) == 28);
    CHECK(fano::weyl_dim(IntWeight({4, 0, 0, 0, 0, 0, 0, 0}), 8) == 330);  // S^4 C^8
    CHECK(fano::weyl_dim(IntWeight({8, 0, 0, 0, 0, 0, 0, 0}), 8) == 6435); // S^8 C^8
}

TEST_CASE("weyl_dim equals the number of SSYT") {
    for (const auto& p : partitions_up_to(6)) {
        for (int n : {3, 5}) {
            if (p.rows() > static_cast<std::size_t>(n)) continue;
            Int count = 0;
            for (const auto& [e, c] : oracles::schur_monomials(p, n)) count += c;
            CHECK(fano::weyl_dim(p, static_cast<std::size_t>(n)) == count);
        }
    }
}

TEST_CASE("weyl_dim is invariant under constant shifts") {
    const IntWeight lambda({5, 3, 2, 0});
    const Int d = fano::weyl_dim(lambda, 4);
    for (std::int64_t c : {-7, -1, 1, 4, 11}) CHECK(fano::weyl_dim(lambda.shifted(c), 4) == d);
}

TEST_CASE("LR dimension balance, exhaustive to |mu|+|nu| <= 8") {
    const auto ps = partitions_up_to(4);
    for (const auto& mu : ps)
        for (const auto& nu : ps) {
            if (mu.weight() + nu.weight() > 8) continue;
            for (std::size_t n : {5, 8}) {
                if (mu.rows() > n || nu.rows() > n) continue;
                Int total = 0;
                for (const auto& [lambda, c] : fano::lr_coefficients(mu, nu)) {
                    if (lambda.rows() > n) continue;
                    total += c * fano::weyl_dim(lambda, n);
                }
                CHECK(total == fano::weyl_dim(mu, n) * fano::weyl_dim(nu, n));
            }
        }
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS(IntWeight({1, 2}));
    CHECK_THROWS(Partition({2, 3}));
    CHECK_THROWS(Partition({-1}));
    CHECK_THROWS(fano::weyl_dim(IntWeight({1, 0}), 3));
}
