#include "fanocalc/bott.hpp"

#include <algorithm>
#include <stdexcept>

namespace fano::bott {

GrassmannianBundle::GrassmannianBundle(int N_, int m_, IntWeight alpha, IntWeight beta)
    : N(N_), m(m_), quotient_weight(std::move(alpha)), sub_weight(std::move(beta)) {
    if (m < 1 || m > N - 1) throw std::invalid_argument("GrassmannianBundle: need 1 <= m <= N-1");
    if (quotient_weight.length() != static_cast<std::size_t>(N - m))
        throw std::invalid_argument("GrassmannianBundle: quotient weight must have length N-m");
    if (sub_weight.length() != static_cast<std::size_t>(m))
        throw std::invalid_argument("GrassmannianBundle: sub weight must have length m");
}

BottResult cohomology(const GrassmannianBundle& b) {
    const std::size_t N = static_cast<std::size_t>(b.N);
    std::vector<std::int64_t> s(N);
    for (std::size_t i = 0; i < b.quotient_weight.length(); ++i) s[i] = b.quotient_weight[i];
    for (std::size_t i = 0; i < b.sub_weight.length(); ++i)
        s[b.quotient_weight.length() + i] = b.sub_weight[i];
    // rho = (N, N-1, ..., 1)
    for (std::size_t i = 0; i < N; ++i) s[i] += static_cast<std::int64_t>(N - i);

    int inversions = 0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            if (s[i] == s[j]) return BottResult::vanish();
            if (s[i] < s[j]) ++inversions;
        }

    std::sort(s.begin(), s.end(), std::greater<>());
    for (std::size_t i = 0; i < N; ++i) s[i] -= static_cast<std::int64_t>(N - i);

    BottResult r;
    r.vanishing = false;
    r.q = inversions;
    r.lambda = IntWeight(std::move(s));
    r.dim = weyl_dim(*r.lambda, N);
    return r;
}

BottResult cohomology_sub_rank2(int N, std::int64_t a, std::int64_t b) {
    return cohomology(GrassmannianBundle(
        N, 2, IntWeight::zero(static_cast<std::size_t>(N - 2)), IntWeight({a, b})));
}

std::optional<int> line_condition_q(std::int64_t a, std::int64_t b) {
    if (0 >= a && a >= b) return 0;
    if (a >= 7 && 1 >= b) return 6;
    if (a >= b && b >= 8) return 12;
    return std::nullopt;
}

std::vector<LineConditionCase> line_conditions_sweep(std::int64_t max_abs) {
    std::vector<LineConditionCase> out;
    for (std::int64_t a = -max_abs; a <= max_abs; ++a)
        for (std::int64_t b = -max_abs; b <= a; ++b) {
            LineConditionCase c;
            c.a = a;
            c.b = b;
            c.expected_q = line_condition_q(a, b);
            const BottResult r = cohomology_sub_rank2(8, a, b);
            c.computed_q = r.vanishing ? std::nullopt : std::optional<int>(r.q);
            c.pass = (c.expected_q == c.computed_q);
            out.push_back(c);
        }
    return out;
}

}  // namespace fano::bott
