// Test-side oracles, kept independent of the library's implementation paths.
#ifndef BERGE_TESTS_ORACLES_HPP
#define BERGE_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "berge/core.hpp"
#include "berge/detect.hpp"
#include "berge/matching.hpp"

namespace oracles {

// Clique count by direct enumeration of vertex subsets.
inline long long count_cliques(const berge::graph& g, int r) {
    int n = g.vertex_count();
    long long total = 0;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == r) {
            for (std::size_t i = 0; i < pick.size(); ++i)
                for (std::size_t j = i + 1; j < pick.size(); ++j)
                    if (!g.has_edge(pick[i], pick[j])) return;
            ++total;
            return;
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return total;
}

inline bool has_triangle(const berge::graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) return true;
    return false;
}

// Exhaustive maximum matching size by branching on the first A vertex.
inline int max_matching_size(const berge::bipartite_incidence& g) {
    std::vector<char> used_b(static_cast<std::size_t>(g.b_size), 0);
    std::function<int(int)> rec = [&](int a) -> int {
        if (a == g.a_size) return 0;
        int best = rec(a + 1);
        for (int b : g.adj_a[static_cast<std::size_t>(a)]) {
            if (used_b[static_cast<std::size_t>(b)]) continue;
            used_b[static_cast<std::size_t>(b)] = 1;
            best = std::max(best, 1 + rec(a + 1));
            used_b[static_cast<std::size_t>(b)] = 0;
        }
        return best;
    };
    return rec(0);
}

// Berge containment by enumerating hyperedge subsets of pattern size, the
// bijections onto pattern edges, then realizing the core by backtracking.
inline bool contains_berge(const berge::hypergraph& h, const berge::family_spec& f) {
    const berge::graph& pattern = f.pattern();
    auto pedges = pattern.edges();
    int k = static_cast<int>(pedges.size());
    if (k > h.edge_count()) return false;
    if (pattern.vertex_count() > h.vertex_count()) return false;
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
        if (idx == k) {
            std::vector<int> perm = subset;
            do {
                std::vector<int> img(static_cast<std::size_t>(pattern.vertex_count()), -1);
                std::uint64_t used = 0;
                std::function<bool(int)> place = [&](int pv) -> bool {
                    if (pv == pattern.vertex_count()) return true;
                    for (int w = 0; w < h.vertex_count(); ++w) {
                        if ((used >> w) & 1u) continue;
                        bool ok = true;
                        for (int i = 0; i < k && ok; ++i) {
                            berge::vpair e = pedges[static_cast<std::size_t>(i)];
                            std::uint64_t em = h.edge_mask(perm[static_cast<std::size_t>(i)]);
                            int a = e.u == pv ? w : img[static_cast<std::size_t>(e.u)];
                            int b = e.v == pv ? w : img[static_cast<std::size_t>(e.v)];
                            if (a >= 0 && !((em >> a) & 1u)) ok = false;
                            if (b >= 0 && !((em >> b) & 1u)) ok = false;
                        }
                        if (!ok) continue;
                        img[static_cast<std::size_t>(pv)] = w;
                        used |= std::uint64_t{1} << w;
                        if (place(pv + 1)) return true;
                        img[static_cast<std::size_t>(pv)] = -1;
                        used &= ~(std::uint64_t{1} << w);
                    }
                    return false;
                };
                if (place(0)) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        for (int e = from; e < h.edge_count(); ++e) {
            subset[static_cast<std::size_t>(idx)] = e;
            if (choose(idx + 1, e + 1)) return true;
        }
        return false;
    };
    std::sort(subset.begin(), subset.end());
    return choose(0, 0);
}

inline berge::graph petersen() {
    berge::graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

inline berge::graph complete_bipartite(int a, int b) {
    berge::graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

} // namespace oracles

#endif
