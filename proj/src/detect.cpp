#include "berge/detect.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace berge {

namespace {

long long clique_rec(const graph& g, std::uint64_t cand, int need) {
    if (need == 0) return 1;
    if (std::popcount(cand) < need) return 0;
    long long total = 0;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        total += clique_rec(g, cand & g.neighbors(v), need - 1);
    }
    return total;
}

} // namespace

long long count_cliques(const graph& g, int r) {
    require(r >= 1, errc::invalid_parameter, "clique size must be at least 1");
    int n = g.vertex_count();
    if (r > n) return 0;
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return clique_rec(g, all, r);
}

namespace {

// Pattern vertex visit order: BFS from the seeds, remaining components
// appended BFS-first from their lowest vertex. Every non-seed vertex is
// placed after at least one pattern neighbour whenever its component touches
// an earlier vertex, which is what the embedder prunes on.
std::vector<int> pattern_order(const graph& p, const std::vector<int>& seeds) {
    int n = p.vertex_count();
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    auto push = [&](int v) {
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            queue.push_back(v);
        }
    };
    for (int s : seeds) push(s);
    for (int start = 0; static_cast<int>(order.size()) < n; ++start) {
        if (queue.empty()) {
            while (seen[static_cast<std::size_t>(start)]) ++start;
            push(start);
        }
        while (!queue.empty()) {
            int v = queue.front();
            queue.erase(queue.begin());
            order.push_back(v);
            std::uint64_t nb = p.neighbors(v);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                push(w);
            }
        }
    }
    return order;
}

// Backtracking injective embedding of `pattern` into `host` along `order`,
// with the first `fixed` order positions pre-assigned in `map`. Calls
// accept(map) on every complete embedding until it returns true.
bool extend_embedding(const graph& host, const graph& pattern, const std::vector<int>& order,
                      std::vector<int>& map, std::uint64_t used, std::size_t pos,
                      const std::function<bool(const std::vector<int>&)>& accept) {
    if (pos == order.size()) return accept(map);
    int pv = order[pos];
    std::uint64_t earlier = 0;
    for (std::size_t i = 0; i < pos; ++i)
        if (pattern.has_edge(pv, order[i])) earlier |= std::uint64_t{1} << order[i];
    for (int w = 0; w < host.vertex_count(); ++w) {
        if ((used >> w) & 1u) continue;
        bool ok = true;
        std::uint64_t need = earlier;
        while (need) {
            int q = std::countr_zero(need);
            need &= need - 1;
            if (!host.has_edge(map[static_cast<std::size_t>(q)], w)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(pv)] = w;
        if (extend_embedding(host, pattern, order, map, used | (std::uint64_t{1} << w), pos + 1,
                             accept))
            return true;
        map[static_cast<std::size_t>(pv)] = -1;
    }
    return false;
}

std::optional<std::vector<int>> embed(const graph& host, const graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (pattern.edge_count() > host.edge_count()) return std::nullopt;
    auto order = pattern_order(pattern, {});
    std::vector<int> map(static_cast<std::size_t>(pattern.vertex_count()), -1);
    std::optional<std::vector<int>> out;
    extend_embedding(host, pattern, order, map, 0, 0, [&](const std::vector<int>& m) {
        out = m;
        return true;
    });
    return out;
}

// Simple path on target_len vertices extending `path`; vertices of a cycle
// search are restricted to ids above the anchor by the caller's mask.
bool path_dfs(const graph& g, std::vector<int>& path, std::uint64_t used, int target_len,
              bool close_cycle, int anchor) {
    if (static_cast<int>(path.size()) == target_len)
        return !close_cycle || g.has_edge(path.back(), anchor);
    std::uint64_t nb = g.neighbors(path.back()) & ~used;
    while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        path.push_back(w);
        if (path_dfs(g, path, used | (std::uint64_t{1} << w), target_len, close_cycle, anchor))
            return true;
        path.pop_back();
    }
    return false;
}

std::optional<std::vector<int>> find_cycle(const graph& g, int m) {
    if (g.vertex_count() < m) return std::nullopt;
    for (int u = 0; u < g.vertex_count(); ++u) {
        // u is the smallest vertex on the cycle
        std::uint64_t low = (std::uint64_t{1} << (u + 1)) - 1;
        std::vector<int> path{u};
        std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t used) -> bool {
            if (static_cast<int>(path.size()) == m) return g.has_edge(path.back(), u);
            std::uint64_t nb = g.neighbors(path.back()) & ~used & ~low;
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                path.push_back(w);
                if (dfs(used | (std::uint64_t{1} << w))) return true;
                path.pop_back();
            }
            return false;
        };
        if (dfs(std::uint64_t{1} << u)) return path;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_path(const graph& g, int m) {
    if (g.vertex_count() < m) return std::nullopt;
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::vector<int> path{u};
        if (path_dfs(g, path, std::uint64_t{1} << u, m, false, -1)) return path;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_clique(const graph& g, int m) {
    std::vector<int> picked;
    std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t cand) -> bool {
        if (static_cast<int>(picked.size()) == m) return true;
        if (std::popcount(cand) < m - static_cast<int>(picked.size())) return false;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            picked.push_back(v);
            if (dfs(cand & g.neighbors(v))) return true;
            picked.pop_back();
        }
        return false;
    };
    int n = g.vertex_count();
    if (n < m) return std::nullopt;
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    if (!dfs(all)) return std::nullopt;
    return picked;
}

} // namespace

std::optional<std::vector<int>> find_embedding(const graph& g, const graph& pattern) {
    return embed(g, pattern);
}

std::optional<std::vector<int>> contains_subgraph(const graph& g, const family_spec& f) {
    switch (f.family()) {
        case family_spec::kind::cycle: return find_cycle(g, f.size());
        case family_spec::kind::path: return find_path(g, f.size());
        case family_spec::kind::clique: return find_clique(g, f.size());
        case family_spec::kind::custom: return embed(g, f.pattern());
    }
    return std::nullopt;
}

namespace {

// Perfect matching of pattern edges onto distinct hyperedges containing
// their images; Kuhn's augmenting paths from the lowest edge index.
std::optional<std::vector<int>> representative_matching(const hypergraph& h,
                                                        const std::vector<vpair>& pattern_edges,
                                                        const std::vector<int>& map) {
    std::size_t k = pattern_edges.size();
    std::vector<std::vector<int>> cand(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t pair_mask = (std::uint64_t{1} << map[static_cast<std::size_t>(pattern_edges[i].u)]) |
                                  (std::uint64_t{1} << map[static_cast<std::size_t>(pattern_edges[i].v)]);
        for (int e = 0; e < h.edge_count(); ++e)
            if ((h.edge_mask(e) & pair_mask) == pair_mask) cand[i].push_back(e);
        if (cand[i].empty()) return std::nullopt;
    }
    std::vector<int> edge_of(static_cast<std::size_t>(h.edge_count()), -1);
    std::vector<int> rep(k, -1);
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t i) -> bool {
        for (int e : cand[i]) {
            if (seen[static_cast<std::size_t>(e)]) continue;
            seen[static_cast<std::size_t>(e)] = 1;
            if (edge_of[static_cast<std::size_t>(e)] < 0 ||
                augment(static_cast<std::size_t>(edge_of[static_cast<std::size_t>(e)]))) {
                edge_of[static_cast<std::size_t>(e)] = static_cast<int>(i);
                rep[i] = e;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < k; ++i) {
        seen.assign(static_cast<std::size_t>(h.edge_count()), 0);
        if (!augment(i)) return std::nullopt;
    }
    return rep;
}

std::optional<berge_witness> berge_search(const hypergraph& h, const graph& pattern,
                                          const graph& shadow, std::vector<int> seed_order,
                                          std::vector<int> seed_map, std::uint64_t seed_used) {
    if (pattern.edge_count() > h.edge_count()) return std::nullopt;
    if (pattern.vertex_count() > h.vertex_count()) return std::nullopt;
    auto pattern_edges = pattern.edges();
    auto order = pattern_order(pattern, seed_order);
    std::optional<berge_witness> out;
    extend_embedding(shadow, pattern, order, seed_map, seed_used,
                     static_cast<std::size_t>(seed_order.size()),
                     [&](const std::vector<int>& map) {
                         auto rep = representative_matching(h, pattern_edges, map);
                         if (!rep) return false;
                         out = berge_witness{map, *rep};
                         return true;
                     });
    return out;
}

} // namespace

std::optional<berge_witness> contains_berge(const hypergraph& h, const family_spec& f) {
    const graph& pattern = f.pattern();
    if (pattern.edge_count() == 0) {
        if (pattern.vertex_count() > h.vertex_count()) return std::nullopt;
        std::vector<int> map(static_cast<std::size_t>(pattern.vertex_count()));
        for (int i = 0; i < pattern.vertex_count(); ++i) map[static_cast<std::size_t>(i)] = i;
        return berge_witness{map, {}};
    }
    graph shadow = h.shadow();
    std::vector<int> map(static_cast<std::size_t>(pattern.vertex_count()), -1);
    return berge_search(h, pattern, shadow, {}, map, 0);
}

bool validate_witness(const hypergraph& h, const family_spec& f, const berge_witness& w) {
    const graph& pattern = f.pattern();
    if (static_cast<int>(w.core_map.size()) != pattern.vertex_count()) return false;
    std::uint64_t used = 0;
    for (int v : w.core_map) {
        if (v < 0 || v >= h.vertex_count()) return false;
        if ((used >> v) & 1u) return false;
        used |= std::uint64_t{1} << v;
    }
    auto pattern_edges = pattern.edges();
    if (w.assignment.size() != pattern_edges.size()) return false;
    std::vector<char> taken(static_cast<std::size_t>(h.edge_count()), 0);
    for (std::size_t i = 0; i < pattern_edges.size(); ++i) {
        int e = w.assignment[i];
        if (e < 0 || e >= h.edge_count() || taken[static_cast<std::size_t>(e)]) return false;
        taken[static_cast<std::size_t>(e)] = 1;
        std::uint64_t pair_mask =
            (std::uint64_t{1} << w.core_map[static_cast<std::size_t>(pattern_edges[i].u)]) |
            (std::uint64_t{1} << w.core_map[static_cast<std::size_t>(pattern_edges[i].v)]);
        if ((h.edge_mask(e) & pair_mask) != pair_mask) return false;
    }
    return true;
}

bool creates_berge(const hypergraph& h, const family_spec& f, int new_id,
                   const graph* shadow_hint) {
    const graph& pattern = f.pattern();
    if (pattern.edge_count() == 0 || pattern.edge_count() > h.edge_count()) return false;
    if (pattern.vertex_count() > h.vertex_count()) return false;
    graph local_shadow;
    const graph& shadow = shadow_hint ? *shadow_hint : (local_shadow = h.shadow());
    const auto& t = h.edge(new_id);
    auto pattern_edges = pattern.edges();
    // any new Berge copy uses the new hyperedge as a representative, so its
    // core contains one of the new hyperedge's pairs
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            int x = t[i], y = t[j];
            for (auto [a, b] : pattern_edges) {
                for (int flip = 0; flip < 2; ++flip) {
                    int ia = flip ? b : a, ib = flip ? a : b;
                    std::vector<int> map(static_cast<std::size_t>(pattern.vertex_count()), -1);
                    map[static_cast<std::size_t>(ia)] = x;
                    map[static_cast<std::size_t>(ib)] = y;
                    std::uint64_t used = (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
                    if (berge_search(h, pattern, shadow, {ia, ib}, map, used)) return true;
                }
            }
        }
    }
    return false;
}

bool creates_subgraph(const graph& g, const family_spec& f, vpair e) {
    require(g.has_edge(e), errc::missing_edge, "creates_subgraph needs the edge present");
    const graph& pattern = f.pattern();
    if (pattern.edge_count() == 0) return false;
    auto pattern_edges = pattern.edges();
    for (auto [a, b] : pattern_edges) {
        for (int flip = 0; flip < 2; ++flip) {
            int ia = flip ? b : a, ib = flip ? a : b;
            std::vector<int> map(static_cast<std::size_t>(pattern.vertex_count()), -1);
            map[static_cast<std::size_t>(ia)] = e.u;
            map[static_cast<std::size_t>(ib)] = e.v;
            std::uint64_t used = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
            auto order = pattern_order(pattern, {ia, ib});
            bool found = extend_embedding(g, pattern, order, map, used, 2,
                                          [](const std::vector<int>&) { return true; });
            if (found) return true;
        }
    }
    return false;
}

bool is_linear(const hypergraph& h) {
    for (int i = 0; i < h.edge_count(); ++i)
        for (int j = i + 1; j < h.edge_count(); ++j)
            if (std::popcount(h.edge_mask(i) & h.edge_mask(j)) > 1) return false;
    return true;
}

int edge_heaviness(const hypergraph& h, int u, int v) {
    require(u != v, errc::invalid_parameter, "heaviness needs two distinct vertices");
    require(u >= 0 && u < h.vertex_count() && v >= 0 && v < h.vertex_count(),
            errc::invalid_parameter, "vertex out of range");
    std::uint64_t pair_mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    int count = 0;
    for (int e = 0; e < h.edge_count(); ++e)
        if ((h.edge_mask(e) & pair_mask) == pair_mask) ++count;
    return count;
}

} // namespace berge
