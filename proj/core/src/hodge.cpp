#include "fanocalc/hodge.hpp"

#include <algorithm>
#include <stdexcept>

namespace fano::hodge {

TwistExpr twist_trivial(int N) {
    TwistExpr e;
    e[TwistLabel{IntWeight::zero(static_cast<std::size_t>(N - 2)), {0, 0}}] = 1;
    return e;
}

TwistExpr twist_sym_sub(int N, int d) {
    TwistExpr e;
    e[TwistLabel{IntWeight::zero(static_cast<std::size_t>(N - 2)), {d, 0}}] = 1;
    return e;
}

TwistExpr twist_cotangent(int N) {
    std::vector<std::int64_t> alpha(static_cast<std::size_t>(N - 2), 0);
    alpha.back() = -1;  // Q* = Sigma^{(0,...,0,-1)} Q
    TwistExpr e;
    e[TwistLabel{IntWeight(std::move(alpha)), {1, 0}}] = 1;
    return e;
}

KoszulPage koszul_page(int N, int d, const TwistExpr& twist) {
    KoszulPage page;
    page.N = N;
    page.section_sym_degree = d;
    for (int i = 0; i <= d + 1; ++i) {
        const schur::Rank2Expr ext = schur::rank2_ext_power(d, i);
        for (const auto& [tlabel, tmult] : twist) {
            // tensor the rank-2 parts; alpha passes through
            schur::Rank2Expr tw{{tlabel.beta, 1}};
            const schur::Rank2Expr prod = schur::rank2_tensor(ext, tw);
            for (const auto& [beta, mult] : prod) {
                const auto res = bott::cohomology(bott::GrassmannianBundle(
                    N, 2, tlabel.alpha, IntWeight({beta.first, beta.second})));
                if (res.vanishing) continue;
                auto& entry = page.grid[{i, res.q}];
                entry.groups[*res.lambda] += mult * tmult;
                entry.dim += res.dim * mult * tmult;
            }
        }
    }
    return page;
}

CollapseResult collapse_page(const KoszulPage& page) {
    CollapseResult out;
    std::vector<std::pair<int, int>> cells;
    for (const auto& [cell, entry] : page.grid)
        if (entry.dim != 0) cells.push_back(cell);
    for (std::size_t s = 0; s < cells.size(); ++s)
        for (std::size_t t = 0; t < cells.size(); ++t) {
            if (s == t) continue;
            const int di = cells[s].first - cells[t].first;   // source i - target i
            const int dq = cells[s].second - cells[t].second; // source q - target q
            if (di >= 1 && dq == di - 1) {
                out.ambiguous = true;
                out.ambiguous_degrees.emplace_back(cells[s].second - cells[s].first,
                                                   cells[t].second - cells[t].first);
            }
        }
    if (out.ambiguous) return out;
    for (const auto& cell : cells) {
        const auto& entry = page.grid.at(cell);
        out.h[cell.second - cell.first] += entry.dim;
    }
    return out;
}

HypersurfaceHodge hypersurface_hodge(int N, int d) {
    if (d < 2 || N < 2) throw std::invalid_argument("hypersurface_hodge: need N >= 2, d >= 2");
    HypersurfaceHodge out;
    out.N = N;
    out.d = d;
    // ((1 - t^{d-1}) / (1 - t))^{N+1} = (1 + t + ... + t^{d-2})^{N+1}
    std::vector<Int> series{1};
    for (int rep = 0; rep < N + 1; ++rep) {
        std::vector<Int> next(series.size() + static_cast<std::size_t>(d - 2), 0);
        for (std::size_t i = 0; i < series.size(); ++i)
            for (int j = 0; j <= d - 2; ++j) next[i + static_cast<std::size_t>(j)] += series[i];
        series = std::move(next);
    }
    out.jacobian_hilbert = series;

    auto coeff = [&](std::int64_t deg) -> Int {
        if (deg < 0 || deg >= static_cast<std::int64_t>(series.size())) return 0;
        return series[static_cast<std::size_t>(deg)];
    };
    for (int p = 1; p <= N; ++p) {
        Int h = coeff(static_cast<std::int64_t>(p) * d - N - 1);
        // the non-primitive middle class: (p,p) with p = (N-1)/2
        if ((N - 1) % 2 == 0 && N - p == p - 1) h += 1;
        out.hodge[{N - p, p - 1}] = h;
    }
    return out;
}

Gr2VanishingReport gr2_syml_vanishing(int n) {
    if (n < 3 || n > 6) throw std::invalid_argument("gr2_syml_vanishing: need 3 <= n <= 6");
    Gr2VanishingReport rep;
    rep.n = n;
    rep.pass = true;
    const int N = 2 * n;
    for (int t = 0; t <= n + 1; ++t) {
        const schur::Rank2Expr ext = schur::rank2_ext_power(n, t);
        for (const auto& [beta, mult] : ext) {
            const auto res = bott::cohomology_sub_rank2(N, beta.first, beta.second);
            if (res.vanishing) continue;
            rep.nonzero_groups.push_back({t, beta, res.q, res.dim * mult});
            if (t == 0) {
                if (res.q != 0 || res.dim != 1) rep.pass = false;
                continue;
            }
            // claim: only q in {2n-2, 4n-4} can occur, and never q <= t
            if (res.q != 2 * n - 2 && res.q != 4 * n - 4) rep.pass = false;
            if (res.q <= t) rep.pass = false;
        }
    }
    return rep;
}

QuarticFanoReport quartic_sixfold_fano(std::uint32_t prime, std::uint64_t seed, bool skip_matrix) {
    QuarticFanoReport rep;
    rep.prime = prime;
    rep.seed = seed;
    rep.skip_matrix = skip_matrix;

    rep.hypersurface = hypersurface_hodge(7, 4);

    // (ii) the structure sheaf page
    const KoszulPage of_page = koszul_page(8, 4, twist_trivial(8));
    const CollapseResult of_collapse = collapse_page(of_page);
    if (of_collapse.ambiguous)
        throw std::logic_error("quartic_sixfold_fano: unexpected ambiguity on the O_F page");
    for (int q = 0; q <= 7; ++q) {
        auto it = of_collapse.h.find(q);
        rep.h_i0[q] = it == of_collapse.h.end() ? Int(0) : it->second;
    }
    rep.of_top_weight = of_page.grid.at({5, 12}).groups.begin()->first;

    // (iii) h^{1,1}, h^{1,2} from the cotangent page through the conormal
    // sequence: the S^4T page has no entries with q - i <= 3, so
    // h^q(S^4T|_F) = 0 for q <= 3 and the low-degree cohomology of
    // Omega^1_G|_F transfers to Omega^1_F unchanged.
    const KoszulPage s4t_page = koszul_page(8, 4, twist_sym_sub(8, 4));
    for (const auto& [cell, entry] : s4t_page.grid)
        if (entry.dim != 0 && cell.second - cell.first <= 3)
            throw std::logic_error("quartic_sixfold_fano: S^4T page has low-degree entries");
    const KoszulPage om_page = koszul_page(8, 4, twist_cotangent(8));
    const CollapseResult om_collapse = collapse_page(om_page);
    if (om_collapse.ambiguous)
        throw std::logic_error("quartic_sixfold_fano: unexpected ambiguity on the Omega^1 page");
    rep.h11 = om_collapse.h.count(1) ? om_collapse.h.at(1) : Int(0);
    rep.h12 = om_collapse.h.count(2) ? om_collapse.h.at(2) : Int(0);

    // h^{1,3}(F) = h^4(F, S^4T|_F) and h^{2,2}(F) = h^{2,2}(G) + corank of
    // the quintic multiplication map. The S^4T page is ambiguous in degrees
    // 4/5; the resolving exact sequence is
    //   0 -> H^4(F, S^4T|_F) -> S^4V -> End(V) -> H^5(F, S^4T|_F) -> 0
    // with middle map of rank = rank(phi_f).
    const Int dim_s4v = s4t_page.grid.at({2, 6}).dim;  // = 330
    if (skip_matrix) {
        rep.series_route = true;
        rep.h13 = rep.hypersurface.hodge.at({4, 2});
        rep.h22 = Int(2) + (rep.hypersurface.hodge.at({3, 3}) - 1);
    } else {
        FormFp f = random_form_fp(8, 4, prime, seed);
        const PhiRank pr = griffiths_phi_rank(f);
        rep.phi_rank = pr.rank;
        rep.h13 = dim_s4v - pr.rank;
        rep.beta_corank = griffiths_beta_corank(f);
        rep.h22 = Int(2) + rep.beta_corank;
    }
    return rep;
}

}  // namespace fano::hodge
