#include "berge/matching.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "berge/detect.hpp"

namespace berge {

bool bipartite_incidence::adjacent(int a, int b) const {
    const auto& row = adj_a[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
}

bipartite_incidence bipartite_incidence::from_edges(int a_size, int b_size,
                                                    const std::vector<std::pair<int, int>>& edges) {
    require(a_size >= 0 && b_size >= 0, errc::invalid_parameter, "negative side size");
    bipartite_incidence g;
    g.a_size = a_size;
    g.b_size = b_size;
    g.adj_a.assign(static_cast<std::size_t>(a_size), {});
    g.adj_b.assign(static_cast<std::size_t>(b_size), {});
    for (auto [a, b] : edges) {
        require(a >= 0 && a < a_size && b >= 0 && b < b_size, errc::invalid_parameter,
                "bipartite edge endpoint out of range");
        g.adj_a[static_cast<std::size_t>(a)].push_back(b);
        g.adj_b[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& row : g.adj_a) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    for (auto& row : g.adj_b) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return g;
}

bipartite_incidence build_incidence(const hypergraph& h2) {
    bipartite_incidence g;
    g.a_size = h2.edge_count();
    std::vector<vpair> pairs;
    for (int e = 0; e < h2.edge_count(); ++e) {
        const auto& verts = h2.edge(e);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                pairs.emplace_back(verts[i], verts[j]);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    g.b_pairs = pairs;
    g.b_size = static_cast<int>(pairs.size());
    g.adj_a.assign(static_cast<std::size_t>(g.a_size), {});
    g.adj_b.assign(static_cast<std::size_t>(g.b_size), {});
    for (int e = 0; e < h2.edge_count(); ++e) {
        const auto& verts = h2.edge(e);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                vpair p(verts[i], verts[j]);
                int b = static_cast<int>(std::lower_bound(pairs.begin(), pairs.end(), p) -
                                         pairs.begin());
                g.adj_a[static_cast<std::size_t>(e)].push_back(b);
                g.adj_b[static_cast<std::size_t>(b)].push_back(e);
            }
        }
    }
    for (auto& row : g.adj_a) std::sort(row.begin(), row.end());
    for (auto& row : g.adj_b) std::sort(row.begin(), row.end());
    return g;
}

int matching::size() const {
    int s = 0;
    for (int b : of_a)
        if (b >= 0) ++s;
    return s;
}

void validate_matching(const bipartite_incidence& g, const matching& m) {
    require(static_cast<int>(m.of_a.size()) == g.a_size &&
                static_cast<int>(m.of_b.size()) == g.b_size,
            errc::invalid_parameter, "matching size mismatch");
    for (int a = 0; a < g.a_size; ++a) {
        int b = m.of_a[static_cast<std::size_t>(a)];
        if (b < 0) continue;
        require(b < g.b_size && m.of_b[static_cast<std::size_t>(b)] == a, errc::invalid_parameter,
                "inconsistent matching maps");
        require(g.adjacent(a, b), errc::invalid_parameter, "matching pair is not an edge");
    }
    for (int b = 0; b < g.b_size; ++b) {
        int a = m.of_b[static_cast<std::size_t>(b)];
        if (a < 0) continue;
        require(a < g.a_size && m.of_a[static_cast<std::size_t>(a)] == b, errc::invalid_parameter,
                "inconsistent matching maps");
    }
}

namespace {

matching kuhn(const bipartite_incidence& g, const std::vector<int>& a_order,
              const std::vector<std::vector<int>>& adj_a) {
    matching m;
    m.of_a.assign(static_cast<std::size_t>(g.a_size), -1);
    m.of_b.assign(static_cast<std::size_t>(g.b_size), -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int a) -> bool {
        for (int b : adj_a[static_cast<std::size_t>(a)]) {
            if (seen[static_cast<std::size_t>(b)]) continue;
            seen[static_cast<std::size_t>(b)] = 1;
            if (m.of_b[static_cast<std::size_t>(b)] < 0 ||
                augment(m.of_b[static_cast<std::size_t>(b)])) {
                m.of_b[static_cast<std::size_t>(b)] = a;
                m.of_a[static_cast<std::size_t>(a)] = b;
                return true;
            }
        }
        return false;
    };
    for (int a : a_order) {
        seen.assign(static_cast<std::size_t>(g.b_size), 0);
        augment(a);
    }
    return m;
}

} // namespace

matching maximum_matching(const bipartite_incidence& g) {
    std::vector<int> order(static_cast<std::size_t>(g.a_size));
    std::iota(order.begin(), order.end(), 0);
    return kuhn(g, order, g.adj_a);
}

matching random_maximum_matching(const bipartite_incidence& g, rng& r) {
    std::vector<int> order(static_cast<std::size_t>(g.a_size));
    std::iota(order.begin(), order.end(), 0);
    r.shuffle(order);
    auto adj = g.adj_a;
    for (auto& row : adj) r.shuffle(row);
    return kuhn(g, order, adj);
}

namespace {

// Perfect matching of every listed A vertex into allowed B vertices;
// augmenting from the lowest index. Returns false if some vertex cannot be
// saturated.
bool saturate(const bipartite_incidence& g, const std::vector<int>& a_list,
              const std::vector<char>& b_allowed, matching& m) {
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int a) -> bool {
        for (int b : g.adj_a[static_cast<std::size_t>(a)]) {
            if (!b_allowed[static_cast<std::size_t>(b)] || seen[static_cast<std::size_t>(b)])
                continue;
            seen[static_cast<std::size_t>(b)] = 1;
            if (m.of_b[static_cast<std::size_t>(b)] < 0 ||
                augment(m.of_b[static_cast<std::size_t>(b)])) {
                m.of_b[static_cast<std::size_t>(b)] = a;
                m.of_a[static_cast<std::size_t>(a)] = b;
                return true;
            }
        }
        return false;
    };
    for (int a : a_list) {
        if (m.of_a[static_cast<std::size_t>(a)] >= 0) continue;
        seen.assign(static_cast<std::size_t>(g.b_size), 0);
        if (!augment(a)) return false;
    }
    return true;
}

} // namespace

// Partition machinery.
//
// By the Dulmage-Mendelsohn decomposition, everything outside the region
// reachable by alternating paths from the unmatched B vertices is absorbed
// cleanly into A2 for any maximum matching. Inside that region a partition
// corresponds to a choice of unmatched set F together with a tight set S of
// absorbed hyperedges:
//   - the region minus F must keep a perfect matching,
//   - S must avoid F-neighbours and satisfy |N(S)| = |S|,
//   - P3 holds exactly when S equals S_F = {a : no neighbour in F}.
// Tight sets below S_F are closed under union, so each F has a unique
// maximal absorbable S*; the search walks candidate F sets lexicographically
// (the caller's own free set first) and ranks the outcomes. An optional
// acceptance predicate on the resulting B1 lets the reduction pipeline ask
// for a red-clique-free certificate in the same search.
namespace {

struct partition_candidate {
    matching final_m;
    std::vector<char> in_a2, in_b2;
    bool p3_complete = false;
    bool filter_ok = false;
    int dropped_pairs = 0; // matched pairs given up to realize the candidate
    int rank() const {
        return (filter_ok ? 4 : 0) + (dropped_pairs == 0 ? 2 : 0) + (p3_complete ? 1 : 0);
    }
};

struct partition_request {
    bool require_p3 = true;
    const std::function<bool(const bipartite_incidence&, const std::vector<int>&)>* b1_accept =
        nullptr;
};

cel2_partition assemble(const bipartite_incidence& g, const matching& m_in,
                        partition_candidate&& cand) {
    cel2_partition out;
    out.final_m = std::move(cand.final_m);
    out.p3_complete = cand.p3_complete;
    int changed = 0;
    for (int a = 0; a < g.a_size; ++a)
        if (out.final_m.of_a[static_cast<std::size_t>(a)] !=
            m_in.of_a[static_cast<std::size_t>(a)])
            ++changed;
    out.rotations = changed;
    out.in_a2 = std::move(cand.in_a2);
    out.in_b2 = std::move(cand.in_b2);
    for (int a = 0; a < g.a_size; ++a)
        (out.in_a2[static_cast<std::size_t>(a)] ? out.a2 : out.a1).push_back(a);
    for (int b = 0; b < g.b_size; ++b) {
        if (!out.final_m.matched_b(b)) continue;
        out.b_prime.push_back(b);
        (out.in_b2[static_cast<std::size_t>(b)] ? out.b2 : out.b1).push_back(b);
    }
    // P1, P2, P4 are construction invariants; recheck them as a bug trap.
    for (int a : out.a1) {
        require(out.final_m.matched_a(a), errc::internal_invariant, "P4 violated");
        require(!out.in_b2[static_cast<std::size_t>(
                    out.final_m.of_a[static_cast<std::size_t>(a)])],
                errc::internal_invariant, "P1 violated");
        if (out.p3_complete) {
            bool has_free = false;
            for (int b : g.adj_a[static_cast<std::size_t>(a)])
                if (!out.final_m.matched_b(b)) has_free = true;
            require(has_free, errc::internal_invariant, "P3 violated");
        }
    }
    for (int a : out.a2)
        for (int b : g.adj_a[static_cast<std::size_t>(a)])
            require(out.in_b2[static_cast<std::size_t>(b)] && out.final_m.matched_b(b),
                    errc::internal_invariant, "P2 violated");
    return out;
}

cel2_partition partition_search(const bipartite_incidence& g, const matching& m_in,
                                const partition_request& req) {
    validate_matching(g, m_in);
    const int A = g.a_size;
    const int B = g.b_size;

    // absorbed-for-sure part: alternating reach from the unmatched A
    // vertices (this also validates maximality) ...
    std::vector<char> da_a(static_cast<std::size_t>(A), 0), da_b(static_cast<std::size_t>(B), 0);
    {
        std::vector<int> work;
        for (int a = 0; a < A; ++a)
            if (!m_in.matched_a(a)) {
                da_a[static_cast<std::size_t>(a)] = 1;
                work.push_back(a);
            }
        while (!work.empty()) {
            int a = work.back();
            work.pop_back();
            for (int b : g.adj_a[static_cast<std::size_t>(a)]) {
                if (da_b[static_cast<std::size_t>(b)]) continue;
                require(m_in.matched_b(b), errc::precondition_violation,
                        "matching is not maximum: an augmenting path exists");
                da_b[static_cast<std::size_t>(b)] = 1;
                int a2 = m_in.of_b[static_cast<std::size_t>(b)];
                if (!da_a[static_cast<std::size_t>(a2)]) {
                    da_a[static_cast<std::size_t>(a2)] = 1;
                    work.push_back(a2);
                }
            }
        }
    }

    // ... and the contested region: alternating reach from the unmatched B
    // vertices.
    std::vector<char> db_a(static_cast<std::size_t>(A), 0), db_b(static_cast<std::size_t>(B), 0);
    {
        std::vector<int> work;
        for (int b = 0; b < B; ++b)
            if (!m_in.matched_b(b)) {
                db_b[static_cast<std::size_t>(b)] = 1;
                work.push_back(b);
            }
        while (!work.empty()) {
            int b = work.back();
            work.pop_back();
            for (int a : g.adj_b[static_cast<std::size_t>(b)]) {
                if (db_a[static_cast<std::size_t>(a)]) continue;
                if (m_in.of_a[static_cast<std::size_t>(a)] == b) continue;
                db_a[static_cast<std::size_t>(a)] = 1;
                int b2 = m_in.of_a[static_cast<std::size_t>(a)];
                require(b2 >= 0, errc::internal_invariant, "free-free edge despite maximality");
                if (!db_b[static_cast<std::size_t>(b2)]) {
                    db_b[static_cast<std::size_t>(b2)] = 1;
                    work.push_back(b2);
                }
            }
        }
    }

    std::vector<int> region_a, region_b;
    for (int a = 0; a < A; ++a)
        if (db_a[static_cast<std::size_t>(a)]) region_a.push_back(a);
    for (int b = 0; b < B; ++b)
        if (db_b[static_cast<std::size_t>(b)]) region_b.push_back(b);
    int deficiency = static_cast<int>(region_b.size()) - static_cast<int>(region_a.size());

    std::vector<char> b_removed(static_cast<std::size_t>(B), 0);
    int removed = 0;

    // Evaluates the complete F held in b_removed. Returns the candidate rank
    // (0 when the region cannot be re-matched at all, which the saturation
    // prune normally rules out).
    partition_candidate best;
    int best_rank = -1;

    // finishes a candidate: blue side, filter, ranking
    auto finish_candidate = [&](partition_candidate&& cand, const std::vector<char>& absorbed) {
        cand.in_a2.assign(static_cast<std::size_t>(A), 0);
        cand.in_b2.assign(static_cast<std::size_t>(B), 0);
        for (int a = 0; a < A; ++a)
            if (!db_a[static_cast<std::size_t>(a)] || absorbed[static_cast<std::size_t>(a)])
                cand.in_a2[static_cast<std::size_t>(a)] = 1;
        for (int a = 0; a < A; ++a)
            if (cand.in_a2[static_cast<std::size_t>(a)])
                for (int b : g.adj_a[static_cast<std::size_t>(a)])
                    cand.in_b2[static_cast<std::size_t>(b)] = 1;
        if (req.b1_accept && *req.b1_accept) {
            std::vector<int> b1;
            for (int b = 0; b < B; ++b)
                if (cand.final_m.matched_b(b) && !cand.in_b2[static_cast<std::size_t>(b)])
                    b1.push_back(b);
            cand.filter_ok = (*req.b1_accept)(g, b1);
        } else {
            cand.filter_ok = true;
        }
        int rank = cand.rank();
        if (rank > best_rank) {
            best_rank = rank;
            best = std::move(cand);
        }
        return rank;
    };

    auto evaluate = [&]() -> int {
        // S_F = region vertices with no neighbour in F
        std::vector<int> sf;
        std::vector<char> in_sf(static_cast<std::size_t>(A), 0);
        for (int a : region_a) {
            bool hit = false;
            for (int b : g.adj_a[static_cast<std::size_t>(a)])
                if (b_removed[static_cast<std::size_t>(b)]) hit = true;
            if (!hit) {
                sf.push_back(a);
                in_sf[static_cast<std::size_t>(a)] = 1;
            }
        }
        std::vector<char> nsf(static_cast<std::size_t>(B), 0);
        std::vector<int> nsf_list;
        for (int a : sf)
            for (int b : g.adj_a[static_cast<std::size_t>(a)])
                if (db_b[static_cast<std::size_t>(b)] && !nsf[static_cast<std::size_t>(b)]) {
                    nsf[static_cast<std::size_t>(b)] = 1;
                    nsf_list.push_back(b);
                }
        std::sort(nsf_list.begin(), nsf_list.end());
        int rank_here = -1;

        // keep the caller's pairs wherever they fit a block structure
        auto seed_into = [&](matching& blocks, const std::vector<int>& a_list,
                             const std::vector<char>& allowed) {
            for (int a : a_list) {
                int b = m_in.of_a[static_cast<std::size_t>(a)];
                if (b >= 0 && allowed[static_cast<std::size_t>(b)] &&
                    blocks.of_b[static_cast<std::size_t>(b)] < 0) {
                    blocks.of_a[static_cast<std::size_t>(a)] = b;
                    blocks.of_b[static_cast<std::size_t>(b)] = a;
                }
            }
        };

        // Plan A (the matching stays maximum): absorb the maximal tight
        // subset S* of S_F; everything stays matched.
        if (removed == deficiency) rank_here = [&]() -> int {
        matching sub;
        sub.of_a.assign(static_cast<std::size_t>(A), -1);
        sub.of_b.assign(static_cast<std::size_t>(B), -1);
        if (!saturate(g, sf, nsf, sub)) return -1; // cannot happen when saturable
        // drop everything alternating-reachable from the surplus of N(S_F)
        std::vector<char> bad_a(static_cast<std::size_t>(A), 0),
            seen_b(static_cast<std::size_t>(B), 0);
        std::vector<int> work;
        for (int b = 0; b < B; ++b)
            if (nsf[static_cast<std::size_t>(b)] && sub.of_b[static_cast<std::size_t>(b)] < 0) {
                seen_b[static_cast<std::size_t>(b)] = 1;
                work.push_back(b);
            }
        while (!work.empty()) {
            int b = work.back();
            work.pop_back();
            for (int a : g.adj_b[static_cast<std::size_t>(b)]) {
                if (!in_sf[static_cast<std::size_t>(a)] || bad_a[static_cast<std::size_t>(a)])
                    continue;
                bad_a[static_cast<std::size_t>(a)] = 1;
                int b2 = sub.of_a[static_cast<std::size_t>(a)];
                if (b2 >= 0 && !seen_b[static_cast<std::size_t>(b2)]) {
                    seen_b[static_cast<std::size_t>(b2)] = 1;
                    work.push_back(b2);
                }
            }
        }
        std::vector<int> star, t_list;
        for (int a : region_a) {
            if (in_sf[static_cast<std::size_t>(a)] && !bad_a[static_cast<std::size_t>(a)])
                star.push_back(a);
            else
                t_list.push_back(a);
        }
        std::vector<char> n_star(static_cast<std::size_t>(B), 0);
        int n_star_count = 0;
        for (int a : star)
            for (int b : g.adj_a[static_cast<std::size_t>(a)])
                if (db_b[static_cast<std::size_t>(b)] && !n_star[static_cast<std::size_t>(b)]) {
                    n_star[static_cast<std::size_t>(b)] = 1;
                    ++n_star_count;
                }
        require(n_star_count == static_cast<int>(star.size()), errc::internal_invariant,
                "maximal tight subset is not tight");

        matching blocks;
        blocks.of_a.assign(static_cast<std::size_t>(A), -1);
        blocks.of_b.assign(static_cast<std::size_t>(B), -1);
        std::vector<char> allow_t(static_cast<std::size_t>(B), 0);
        for (int b : region_b)
            if (!n_star[static_cast<std::size_t>(b)] && !b_removed[static_cast<std::size_t>(b)])
                allow_t[static_cast<std::size_t>(b)] = 1;
        seed_into(blocks, star, n_star);
        seed_into(blocks, t_list, allow_t);
        if (!saturate(g, star, n_star, blocks)) return -1;
        if (!saturate(g, t_list, allow_t, blocks)) return -1;

        partition_candidate cand;
        cand.final_m = m_in;
        for (int b : region_b) cand.final_m.of_b[static_cast<std::size_t>(b)] = -1;
        for (int a : region_a) {
            int b = blocks.of_a[static_cast<std::size_t>(a)];
            cand.final_m.of_a[static_cast<std::size_t>(a)] = b;
            cand.final_m.of_b[static_cast<std::size_t>(b)] = a;
        }
        cand.p3_complete = star.size() == sf.size();
        std::vector<char> absorbed(static_cast<std::size_t>(A), 0);
        for (int a : star) absorbed[static_cast<std::size_t>(a)] = 1;
        return finish_candidate(std::move(cand), absorbed);
        }();

        // Plan B (a few matched pairs given up): absorb all of S_F, with
        // N(S_F) saturated from S_F alone and the leftovers unmatched. Only
        // tried when an acceptance filter is pressing.
        if (req.b1_accept && *req.b1_accept && best_rank < 7) {
            do {
                matching sub;
                sub.of_a.assign(static_cast<std::size_t>(A), -1);
                sub.of_b.assign(static_cast<std::size_t>(B), -1);
                seed_into(sub, sf, nsf);
                bool ok = true;
                std::vector<char> seen;
                std::function<bool(int)> augment_b = [&](int b) -> bool {
                    for (int a : g.adj_b[static_cast<std::size_t>(b)]) {
                        if (!in_sf[static_cast<std::size_t>(a)] ||
                            seen[static_cast<std::size_t>(a)])
                            continue;
                        seen[static_cast<std::size_t>(a)] = 1;
                        int prev = sub.of_a[static_cast<std::size_t>(a)];
                        if (prev < 0 || augment_b(prev)) {
                            sub.of_a[static_cast<std::size_t>(a)] = b;
                            sub.of_b[static_cast<std::size_t>(b)] = a;
                            return true;
                        }
                    }
                    return false;
                };
                for (int b : nsf_list) {
                    if (sub.of_b[static_cast<std::size_t>(b)] >= 0) continue;
                    seen.assign(static_cast<std::size_t>(A), 0);
                    if (!augment_b(b)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
                std::vector<int> t_list;
                for (int a : region_a)
                    if (!in_sf[static_cast<std::size_t>(a)]) t_list.push_back(a);
                std::vector<char> allow_t(static_cast<std::size_t>(B), 0);
                for (int b : region_b)
                    if (!nsf[static_cast<std::size_t>(b)] &&
                        !b_removed[static_cast<std::size_t>(b)])
                        allow_t[static_cast<std::size_t>(b)] = 1;
                seed_into(sub, t_list, allow_t);
                if (!saturate(g, t_list, allow_t, sub)) break;
                partition_candidate cand;
                cand.final_m = m_in;
                for (int b : region_b) cand.final_m.of_b[static_cast<std::size_t>(b)] = -1;
                int drops = 0;
                for (int a : region_a) {
                    int b = sub.of_a[static_cast<std::size_t>(a)];
                    cand.final_m.of_a[static_cast<std::size_t>(a)] = b;
                    if (b >= 0)
                        cand.final_m.of_b[static_cast<std::size_t>(b)] = a;
                    else
                        ++drops;
                }
                cand.p3_complete = true; // A1 members keep their F neighbours
                cand.dropped_pairs = drops;
                std::vector<char> absorbed(static_cast<std::size_t>(A), 0);
                for (int a : sf) absorbed[static_cast<std::size_t>(a)] = 1;
                rank_here = std::max(rank_here, finish_candidate(std::move(cand), absorbed));
            } while (false);
        }
        return rank_here;
    };

    const int top_rank = 7; // filter satisfied, no pairs dropped, P3 complete
    if (region_b.empty()) {
        evaluate();
    } else {
        // matched pairs the region can still hold under the current removals
        auto region_capacity = [&]() {
            std::vector<char> allowed(static_cast<std::size_t>(B), 0);
            for (int b : region_b)
                if (!b_removed[static_cast<std::size_t>(b)])
                    allowed[static_cast<std::size_t>(b)] = 1;
            matching probe;
            probe.of_a.assign(static_cast<std::size_t>(A), -1);
            probe.of_b.assign(static_cast<std::size_t>(B), -1);
            int count = 0;
            for (int a : region_a)
                if (saturate(g, {a}, allowed, probe)) ++count;
            return count;
        };

        // the caller's own unmatched set first
        for (int b : region_b)
            if (!m_in.matched_b(b)) {
                b_removed[static_cast<std::size_t>(b)] = 1;
                ++removed;
            }
        evaluate();
        long long nodes = 0;
        const long long node_cap = 4'000'000;
        int max_extra = req.b1_accept && *req.b1_accept ? 3 : 0;
        for (int extra = 0; extra <= max_extra && best_rank < top_rank; ++extra) {
            int target = deficiency + extra;
            if (target > static_cast<int>(region_b.size())) break;
            if (extra > 0 && best_rank >= 4) break; // filter already satisfied
            b_removed.assign(static_cast<std::size_t>(B), 0);
            removed = 0;
            std::function<bool(std::size_t)> dfs = [&](std::size_t idx) -> bool {
                require(++nodes <= node_cap, errc::internal_invariant,
                        "partition free-set search exceeded its node cap");
                if (removed == target) return evaluate() >= top_rank;
                if (idx >= region_b.size()) return false;
                if (region_b.size() - idx < static_cast<std::size_t>(target - removed))
                    return false;
                int b = region_b[idx];
                b_removed[static_cast<std::size_t>(b)] = 1;
                ++removed;
                if (region_capacity() >= static_cast<int>(region_a.size()) - extra &&
                    dfs(idx + 1))
                    return true;
                b_removed[static_cast<std::size_t>(b)] = 0;
                --removed;
                return dfs(idx + 1);
            };
            dfs(0);
        }
    }

    require(best_rank >= 0, errc::internal_invariant, "partition search found no candidate");
    if (req.require_p3)
        require(best.p3_complete && best.dropped_pairs == 0, errc::no_valid_partition,
                "no maximum matching admits the P1-P4 partition on this instance");
    return assemble(g, m_in, std::move(best));
}

} // namespace

cel2_partition cel2_partition_of(const bipartite_incidence& g, const matching& m_in) {
    partition_request req;
    req.require_p3 = true;
    return partition_search(g, m_in, req);
}

cel2_partition cel2_partition_total(const bipartite_incidence& g, const matching& m_in) {
    partition_request req;
    req.require_p3 = false;
    return partition_search(g, m_in, req);
}

cel2_partition cel2_partition_filtered(
    const bipartite_incidence& g, const matching& m_in,
    const std::function<bool(const bipartite_incidence&, const std::vector<int>&)>& b1_accept) {
    partition_request req;
    req.require_p3 = false;
    req.b1_accept = &b1_accept;
    return partition_search(g, m_in, req);
}

matching heavy_constrained_matching(const bipartite_incidence& g, const hypergraph& h) {
    require(g.b_size == static_cast<int>(g.b_pairs.size()), errc::invalid_parameter,
            "incidence lacks pair labels");
    matching m = maximum_matching(g);
    std::vector<char> heavy1(static_cast<std::size_t>(g.b_size), 0);
    for (int b = 0; b < g.b_size; ++b) {
        vpair p = g.b_pairs[static_cast<std::size_t>(b)];
        heavy1[static_cast<std::size_t>(b)] = edge_heaviness(h, p.u, p.v) == 1 ? 1 : 0;
    }
    for (int a = 0; a < g.a_size; ++a) {
        if (!m.matched_a(a)) continue;
        if (heavy1[static_cast<std::size_t>(m.of_a[static_cast<std::size_t>(a)])]) continue;
        for (int b : g.adj_a[static_cast<std::size_t>(a)]) {
            if (!heavy1[static_cast<std::size_t>(b)]) continue;
            // a 1-heavy pair has a unique neighbour, so it is free or ours
            require(m.of_b[static_cast<std::size_t>(b)] < 0 ||
                        m.of_b[static_cast<std::size_t>(b)] == a,
                    errc::internal_invariant, "1-heavy pair matched to a foreign hyperedge");
            int old = m.of_a[static_cast<std::size_t>(a)];
            m.of_b[static_cast<std::size_t>(old)] = -1;
            m.of_a[static_cast<std::size_t>(a)] = b;
            m.of_b[static_cast<std::size_t>(b)] = a;
            break;
        }
    }
    return m;
}

std::vector<vpair> shared_pair_designation(const bipartite_incidence& g, const hypergraph& h1) {
    require(g.b_size == static_cast<int>(g.b_pairs.size()), errc::invalid_parameter,
            "incidence lacks pair labels");
    std::vector<vpair> b0(static_cast<std::size_t>(g.a_size));
    for (int a = 0; a < g.a_size; ++a) {
        bool found = false;
        for (int b : g.adj_a[static_cast<std::size_t>(a)]) {
            vpair p = g.b_pairs[static_cast<std::size_t>(b)];
            std::uint64_t pm = (std::uint64_t{1} << p.u) | (std::uint64_t{1} << p.v);
            for (int e = 0; e < h1.edge_count() && !found; ++e) {
                if ((h1.edge_mask(e) & pm) == pm) {
                    b0[static_cast<std::size_t>(a)] = p;
                    found = true;
                }
            }
            if (found) break;
        }
        require(found, errc::pipeline_order,
                "hyperedge shares no pair with the linear part; split the input first");
    }
    return b0;
}

namespace {

int shared_vertices(vpair a, vpair b) {
    int c = 0;
    if (a.u == b.u || a.u == b.v) ++c;
    if (a.v == b.u || a.v == b.v) ++c;
    return c;
}

} // namespace

matching adjust_matching(const bipartite_incidence& g, const matching& m0, const hypergraph& h1) {
    validate_matching(g, m0);
    auto b0 = shared_pair_designation(g, h1);
    matching m = m0;
    std::vector<char> changed(static_cast<std::size_t>(g.a_size), 0);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int a = 0; a < g.a_size; ++a) {
            if (changed[static_cast<std::size_t>(a)] || !m.matched_a(a)) continue;
            vpair anchor = b0[static_cast<std::size_t>(a)];
            vpair cur = g.b_pairs[static_cast<std::size_t>(m.of_a[static_cast<std::size_t>(a)])];
            if (shared_vertices(cur, anchor) == 1) continue;
            for (int b : g.adj_a[static_cast<std::size_t>(a)]) {
                if (m.matched_b(b)) continue;
                if (shared_vertices(g.b_pairs[static_cast<std::size_t>(b)], anchor) != 1) continue;
                int old = m.of_a[static_cast<std::size_t>(a)];
                m.of_b[static_cast<std::size_t>(old)] = -1;
                m.of_a[static_cast<std::size_t>(a)] = b;
                m.of_b[static_cast<std::size_t>(b)] = a;
                changed[static_cast<std::size_t>(a)] = 1;
                progress = true;
                break;
            }
        }
    }
    return m;
}

} // namespace berge
