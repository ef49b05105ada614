#include "berge/symmetrize.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

#include "berge/canonical.hpp"
#include "berge/detect.hpp"
#include "berge/reduction.hpp"

namespace berge {

red_blue_graph symmetrize_step(const red_blue_graph& rbg, int u, int v, int r, int k) {
    int n = rbg.vertex_count();
    require(u >= 0 && u < n && v >= 0 && v < n && u != v, errc::invalid_parameter,
            "need two distinct vertices");
    if (rbg.has_edge(u, v))
        require(rbg.color(u, v) == edge_color::blue, errc::forbidden_step,
                "cannot symmetrize across a red edge");
    red_blue_graph out = rbg;
    if (out.has_edge(u, v)) out.remove_edge(u, v);
    for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (out.has_edge(u, w)) out.remove_edge(u, w);
        if (out.has_edge(v, w)) out.add_edge(u, w, out.color(v, w));
    }
    require(!contains_subgraph(out.underlying(), family_spec::clique(k)),
            errc::internal_invariant, "symmetrize step created a K_k");
    require(!contains_subgraph(out.red_subgraph(), family_spec::clique(r)),
            errc::internal_invariant, "symmetrize step created a red K_r");
    return out;
}

bool is_mono_complete_multipartite(const red_blue_graph& g) {
    if (g.red_edge_count() != 0 && g.red_edge_count() != g.edge_count()) return false;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && g.underlying().neighbors(u) != g.underlying().neighbors(v))
                return false;
    return true;
}

symmetrize_result symmetrize_to_optimum(const red_blue_graph& rbg, int k, int r,
                                        const parallelism& ctx) {
    (void)ctx; // candidate evaluation is cheap at desk scale
    symmetrize_result res;
    res.final = rbg;
    res.initial_g_r = g_r_value(rbg, r);
    int n = rbg.vertex_count();
    long long budget = static_cast<long long>(n) * n * n + 16;
    std::unordered_set<std::string> visited;
    visited.insert(canonical_label_two(rbg.red_subgraph(), rbg.blue_subgraph()));

    while (!is_mono_complete_multipartite(res.final)) {
        require(static_cast<long long>(res.steps.size()) < budget, errc::step_budget_exceeded,
                "symmetrization exceeded its step budget without converging");
        long long cur = g_r_value(res.final, r);
        long long best_val = -1;
        int best_u = -1, best_v = -1;
        red_blue_graph best_graph;
        std::string best_code;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                if (res.final.has_edge(u, v) && res.final.color(u, v) == edge_color::red)
                    continue;
                red_blue_graph cand = symmetrize_step(res.final, u, v, r, k);
                if (cand == res.final) continue; // u already a twin of v
                long long val = g_r_value(cand, r);
                if (val < cur || val <= best_val) continue;
                std::string code = canonical_label_two(cand.red_subgraph(), cand.blue_subgraph());
                if (visited.count(code)) continue;
                best_val = val;
                best_u = u;
                best_v = v;
                best_graph = cand;
                best_code = code;
            }
        }
        if (best_u < 0) return res; // stalled; converged stays false
        symmetrize_step_record rec;
        rec.u = best_u;
        rec.v = best_v;
        rec.relation = res.final.has_edge(best_u, best_v) ? 'b' : 'n';
        rec.g_r_after = best_val;
        res.final = best_graph;
        visited.insert(best_code);
        res.steps.push_back(rec);
    }
    res.converged = true;
    return res;
}

namespace {

std::vector<long long> turan_part_sizes(int n, int p) {
    std::vector<long long> sizes(static_cast<std::size_t>(p), 0);
    for (int v = 0; v < n; ++v) ++sizes[static_cast<std::size_t>(v % p)];
    return sizes;
}

// e_r of the part sizes: number of K_r copies in the complete multipartite graph.
long long elementary_symmetric(const std::vector<long long>& sizes, int r) {
    std::vector<long long> e(static_cast<std::size_t>(r + 1), 0);
    e[0] = 1;
    for (long long s : sizes)
        for (int j = r; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * s;
    return e[static_cast<std::size_t>(r)];
}

} // namespace

threshold_report turan_threshold(int r, int k, int n) {
    require(2 <= r && r < k && k <= n, errc::invalid_parameter, "need 2 <= r < k <= n");
    threshold_report rep;
    rep.r = r;
    rep.k = k;
    rep.n = n;
    rep.blue_cliques = elementary_symmetric(turan_part_sizes(n, k - 1), r);
    auto red_sizes = turan_part_sizes(n, r - 1);
    long long inside = 0;
    for (long long s : red_sizes) inside += s * (s - 1) / 2;
    rep.red_edges = static_cast<long long>(n) * (n - 1) / 2 - inside;
    rep.dominant = rep.blue_cliques > rep.red_edges ? 1 : (rep.blue_cliques < rep.red_edges ? -1 : 0);
    return rep;
}

hypergraph clique_blowup_hypergraph(int n, int p, int r) {
    graph t = turan_graph(n, p);
    hypergraph h(r, n);
    std::vector<int> picked;
    // enumerate the r-cliques of t
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t cand) {
        if (static_cast<int>(picked.size()) == r) {
            h.add_edge(picked);
            return;
        }
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            picked.push_back(v);
            rec(cand & t.neighbors(v));
            picked.pop_back();
        }
    };
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    rec(all);
    return h;
}

} // namespace berge
