#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string>

#include "fanocalc/hodge.hpp"
#include "fanocalc/linalg.hpp"
#include "fanocalc/rng.hpp"

namespace fano::hodge {

FormFp random_form_fp(int n_vars, int degree, std::uint32_t p, std::uint64_t seed) {
    const MonomialTable table(n_vars, degree);
    FormFp f;
    f.n_vars = n_vars;
    f.degree = degree;
    f.p = p;
    f.coeff.resize(table.size());
    Rng rng(seed);
    for (auto& c : f.coeff) c = static_cast<std::uint32_t>(rng.below(p));
    return f;
}

namespace {

// coefficients of df/dx_j as a dense vector over the degree-(d-1) table
std::vector<std::uint32_t> partial(const FormFp& f, int j, const MonomialTable& table_d,
                                   const MonomialTable& table_dm1, const PrimeField& F) {
    std::vector<std::uint32_t> out(table_dm1.size(), 0);
    for (std::size_t i = 0; i < table_d.size(); ++i) {
        if (!f.coeff[i]) continue;
        const Monomial& m = table_d[i];
        const int e = m[static_cast<std::size_t>(j)];
        if (e == 0) continue;
        Monomial dm = m;
        --dm[static_cast<std::size_t>(j)];
        out[table_dm1.rank(dm)] =
            F.add(out[table_dm1.rank(dm)], F.mul(f.coeff[i], F.from_int(e)));
    }
    return out;
}

}  // namespace

namespace {

void require_octal_quartic(const FormFp& f, const char* who) {
    if (f.n_vars != 8 || f.degree != 4)
        throw std::invalid_argument(std::string(who) + ": expected a quartic in 8 variables");
    if (f.p <= 4 || !is_prime_u32(f.p))
        throw std::invalid_argument(std::string(who) + ": modulus must be a prime > 4");
}

}  // namespace

PhiRank griffiths_phi_rank(const FormFp& f) {
    require_octal_quartic(f, "griffiths_phi_rank");
    const PrimeField F(f.p);
    const int n = f.n_vars;
    const MonomialTable table_d(n, f.degree);
    const MonomialTable table_dm1(n, f.degree - 1);

    // columns: pairs (i, j) = x_i * df/dx_j; rows: degree-d monomials
    linalg::MatFp m(table_d.size(), static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        const auto dj = partial(f, j, table_d, table_dm1, F);
        for (int i = 0; i < n; ++i) {
            const std::size_t col = static_cast<std::size_t>(i) * n + j;
            for (std::size_t r = 0; r < table_dm1.size(); ++r) {
                if (!dj[r]) continue;
                Monomial mono = table_dm1[r];
                ++mono[static_cast<std::size_t>(i)];
                m.at(table_d.rank(mono), col) = dj[r];
            }
        }
    }
    PhiRank out;
    out.rank = static_cast<std::int64_t>(linalg::rank(std::move(m), F));
    out.kernel_psi = static_cast<std::int64_t>(table_d.size()) - out.rank;
    return out;
}

namespace {

linalg::SparseFp multiplication_matrix(const FormFp& f, int e) {
    const PrimeField F(f.p);
    const int n = f.n_vars;
    const int target = e + f.degree - 1;
    const MonomialTable table_d(n, f.degree);
    const MonomialTable table_dm1(n, f.degree - 1);
    const MonomialTable table_e(n, e);
    const MonomialTable table_t(n, target);

    // rows: monomials of the target degree; one generator row per column
    // would transpose poorly, so generators are stored as rows and the rank
    // is taken of the transpose-free row space (same rank).
    linalg::SparseFp m(static_cast<std::int64_t>(table_e.size()) * n,
                       static_cast<std::int64_t>(table_t.size()));
    std::int64_t r = 0;
    for (int j = 0; j < n; ++j) {
        const auto dj = partial(f, j, table_d, table_dm1, F);
        for (std::size_t q = 0; q < table_e.size(); ++q, ++r) {
            const Monomial& mq = table_e[q];
            for (std::size_t s = 0; s < table_dm1.size(); ++s) {
                if (!dj[s]) continue;
                Monomial prod = table_dm1[s];
                for (int v = 0; v < n; ++v)
                    prod[static_cast<std::size_t>(v)] =
                        static_cast<std::uint8_t>(prod[static_cast<std::size_t>(v)] +
                                                  mq[static_cast<std::size_t>(v)]);
                m.add(r, static_cast<std::int64_t>(table_t.rank(prod)), dj[s]);
            }
        }
    }
    for (auto& row : m.row) std::sort(row.begin(), row.end());
    return m;
}

}  // namespace

std::int64_t jacobian_multiplication_corank(const FormFp& f, int e) {
    const PrimeField F(f.p);
    linalg::SparseFp m = multiplication_matrix(f, e);
    const std::int64_t target_dim = m.cols;
    const std::int64_t rank = linalg::sparse_rank(std::move(m), F);
    return target_dim - rank;
}

std::int64_t griffiths_beta_corank(const FormFp& f) {
    require_octal_quartic(f, "griffiths_beta_corank");
    return jacobian_multiplication_corank(f, 5);
}

void dump_multiplication_matrix(const FormFp& f, int e, const std::string& path) {
    const linalg::SparseFp m = multiplication_matrix(f, e);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (std::size_t i = 0; i < m.row.size(); ++i)
        for (const auto& [c, v] : m.row[i]) out << i << ' ' << c << ' ' << v << '\n';
}

}  // namespace fano::hodge
