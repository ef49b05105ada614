#include "berge/reduction.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "berge/rng.hpp"

namespace berge {

linear_split greedy_linear_split(const hypergraph& h, const std::vector<int>& order) {
    int m = h.edge_count();
    require(static_cast<int>(order.size()) == m, errc::invalid_parameter,
            "order must be a permutation of hyperedge ids");
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int id : order) {
        require(id >= 0 && id < m && !seen[static_cast<std::size_t>(id)], errc::invalid_parameter,
                "order must be a permutation of hyperedge ids");
        seen[static_cast<std::size_t>(id)] = 1;
    }

    linear_split out;
    out.h1 = hypergraph(h.uniformity(), h.vertex_count());
    out.h2 = hypergraph(h.uniformity(), h.vertex_count());
    out.insertion_order = order;
    std::vector<std::uint64_t> h1_masks;
    for (int id : order) {
        std::uint64_t mask = h.edge_mask(id);
        bool shares = false;
        for (std::uint64_t m1 : h1_masks) {
            if (std::popcount(m1 & mask) >= 2) {
                shares = true;
                break;
            }
        }
        if (shares) {
            out.h2.add_edge(h.edge(id));
            out.h2_ids.push_back(id);
        } else {
            out.h1.add_edge(h.edge(id));
            out.h1_ids.push_back(id);
            h1_masks.push_back(mask);
        }
    }
    return out;
}

linear_split greedy_linear_split(const hypergraph& h) {
    std::vector<int> order(static_cast<std::size_t>(h.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    return greedy_linear_split(h, order);
}

long long g_r_value(const red_blue_graph& rbg, int r) {
    require(r >= 2, errc::invalid_parameter, "g_r needs r >= 2");
    return rbg.red_edge_count() + count_cliques(rbg.blue_subgraph(), r);
}

namespace {

std::string witness_summary(const berge_witness& w) {
    std::ostringstream out;
    out << "core:";
    for (int v : w.core_map) out << ' ' << v;
    out << "; hyperedges:";
    for (int e : w.assignment) out << ' ' << e;
    return out.str();
}

red_blue_graph paint_partition(int n, const bipartite_incidence& gamma,
                               const cel2_partition& part) {
    red_blue_graph rbg(n);
    for (int b : part.b1) {
        vpair p = gamma.b_pairs[static_cast<std::size_t>(b)];
        rbg.add_edge(p.u, p.v, edge_color::red);
    }
    for (int b : part.b2) {
        vpair p = gamma.b_pairs[static_cast<std::size_t>(b)];
        rbg.add_edge(p.u, p.v, edge_color::blue);
    }
    return rbg;
}

} // namespace

reduction_certificate red_blue_reduce(const hypergraph& h, const family_spec& f) {
    int r = h.uniformity();
    if (auto w = contains_berge(h, f))
        fail(errc::input_not_admissible,
             "input contains a Berge-" + f.name() + " (" + witness_summary(*w) + ")");

    reduction_certificate cert;
    cert.split = greedy_linear_split(h);
    cert.gamma = build_incidence(cert.split.h2);

    matching m = heavy_constrained_matching(cert.gamma, h);
    m = adjust_matching(cert.gamma, m, cert.split.h1);
    // partition with a clique-free red side, found within the same search
    auto red_side_clique_free = [&](const bipartite_incidence& gamma,
                                    const std::vector<int>& b1) {
        graph red(h.vertex_count());
        for (int b : b1) {
            vpair p = gamma.b_pairs[static_cast<std::size_t>(b)];
            red.add_edge(p.u, p.v);
        }
        return !contains_subgraph(red, family_spec::clique(r));
    };
    cert.partition = cel2_partition_filtered(cert.gamma, m, red_side_clique_free);
    cert.m = cert.partition.final_m;
    cert.rbg = paint_partition(h.vertex_count(), cert.gamma, cert.partition);
    require(!contains_subgraph(cert.rbg.red_subgraph(), family_spec::clique(r)),
            errc::internal_invariant, "no red-clique-free certificate was found");

    require(!contains_subgraph(cert.rbg.underlying(), f), errc::internal_invariant,
            "reduction output graph contains the forbidden pattern");
    for (int a : cert.partition.a2) {
        for (int b : cert.gamma.adj_a[static_cast<std::size_t>(a)])
            require(cert.partition.in_b2[static_cast<std::size_t>(b)], errc::internal_invariant,
                    "A2 hyperedge with a pair outside B2");
    }
    cert.g_r = g_r_value(cert.rbg, r);
    require(cert.split.h2.edge_count() ==
                static_cast<int>(cert.partition.a1.size() + cert.partition.a2.size()),
            errc::internal_invariant, "partition does not cover A");
    require(cert.split.h2.edge_count() <= cert.g_r, errc::internal_invariant,
            "|H2| exceeds g_r");
    return cert;
}

halving_outcome random_halving(int n, halving_mode mode, std::uint64_t seed) {
    require(n >= 0 && n <= max_vertices, errc::invalid_parameter, "vertex count out of range");
    halving_outcome out;
    out.n = n;
    out.mode = mode;
    out.seed = seed;
    rng r(seed);
    if (mode == halving_mode::independent) {
        for (int v = 0; v < n; ++v) {
            if (r.coin())
                out.v1 |= std::uint64_t{1} << v;
            else
                out.v2 |= std::uint64_t{1} << v;
        }
    } else {
        require(n % 2 == 0, errc::invalid_parameter,
                "paired halving needs an even vertex count; add a dummy vertex first");
        std::vector<int> verts(static_cast<std::size_t>(n));
        std::iota(verts.begin(), verts.end(), 0);
        r.shuffle(verts);
        for (int i = 0; i < n; i += 2) {
            int x = verts[static_cast<std::size_t>(i)];
            int y = verts[static_cast<std::size_t>(i + 1)];
            out.pairing.emplace_back(x, y);
            if (r.coin()) std::swap(x, y);
            out.v1 |= std::uint64_t{1} << x;
            out.v2 |= std::uint64_t{1} << y;
        }
        std::sort(out.pairing.begin(), out.pairing.end());
    }
    return out;
}

namespace {

bool survives(std::uint64_t edge_mask, std::uint64_t pair_mask, std::uint64_t v1,
              std::uint64_t v2) {
    std::uint64_t rest = edge_mask & ~pair_mask;
    return ((pair_mask & ~v1) == 0 && (rest & ~v2) == 0) ||
           ((pair_mask & ~v2) == 0 && (rest & ~v1) == 0);
}

} // namespace

halving_outcome survivor_graph(const reduction_certificate& cert, halving_outcome halving) {
    require(halving.n == cert.split.h2.vertex_count(), errc::invalid_parameter,
            "halving and certificate refer to different vertex sets");
    halving.survivors.clear();
    halving.g_prime = graph(halving.n);
    for (int a = 0; a < cert.gamma.a_size; ++a) {
        if (!cert.m.matched_a(a)) continue;
        vpair p = cert.gamma.b_pairs[static_cast<std::size_t>(cert.m.of_a[static_cast<std::size_t>(a)])];
        std::uint64_t pm = (std::uint64_t{1} << p.u) | (std::uint64_t{1} << p.v);
        if (survives(cert.split.h2.edge_mask(a), pm, halving.v1, halving.v2)) {
            halving.survivors.push_back(a);
            if (!halving.g_prime.has_edge(p.u, p.v)) halving.g_prime.add_edge(p.u, p.v);
        }
    }
    halving.survivors_filled = true;
    return halving;
}

bool check_claim(const halving_outcome& halving, const family_spec& f0) {
    require(halving.survivors_filled, errc::pipeline_order,
            "survivor graph not filled; run survivor_graph first");
    return !contains_subgraph(halving.g_prime, f0);
}

const char* retention_case_name(retention_case c) {
    switch (c) {
        case retention_case::matched: return "matched";
        case retention_case::distinct_pairs: return "distinct-pairs";
        case retention_case::own_pair_matched: return "own-pair-matched";
        case retention_case::own_pair_other: return "own-pair-other";
    }
    return "unknown";
}

retention_report retention_statistics(const reduction_certificate& cert, halving_mode mode,
                                      long long trials, std::uint64_t seed,
                                      const parallelism& ctx) {
    require(trials >= 1, errc::invalid_parameter, "need at least one trial");
    int n = cert.split.h2.vertex_count();
    if (mode == halving_mode::paired)
        require(n % 2 == 0, errc::invalid_parameter,
                "paired retention needs an even vertex count");

    const int cases = 4;
    int a_count = cert.gamma.a_size;
    std::vector<int> matched_ids;
    for (int a = 0; a < a_count; ++a)
        if (cert.m.matched_a(a)) matched_ids.push_back(a);

    int workers = std::max(1, ctx.workers);
    std::vector<std::vector<long long>> trial_counts(
        static_cast<std::size_t>(workers),
        std::vector<long long>(static_cast<std::size_t>(a_count * cases), 0));
    std::vector<std::vector<long long>> kept_counts = trial_counts;

    long long chunk = (trials + workers - 1) / workers;
    parallel_for(static_cast<std::size_t>(workers), ctx, [&](std::size_t w) {
        auto& tc = trial_counts[w];
        auto& kc = kept_counts[w];
        long long lo = static_cast<long long>(w) * chunk;
        long long hi = std::min(trials, lo + chunk);
        for (long long t = lo; t < hi; ++t) {
            halving_outcome hv = random_halving(n, mode, seed ^ static_cast<std::uint64_t>(t));
            for (int a : matched_ids) {
                std::uint64_t em = cert.split.h2.edge_mask(a);
                vpair p = cert.gamma.b_pairs[static_cast<std::size_t>(
                    cert.m.of_a[static_cast<std::size_t>(a)])];
                std::uint64_t pm = (std::uint64_t{1} << p.u) | (std::uint64_t{1} << p.v);
                retention_case rc = retention_case::matched;
                if (mode == halving_mode::paired) {
                    rc = retention_case::distinct_pairs;
                    for (const vpair& u : hv.pairing) {
                        std::uint64_t um = (std::uint64_t{1} << u.u) | (std::uint64_t{1} << u.v);
                        if ((em & um) == um) {
                            rc = um == pm ? retention_case::own_pair_matched
                                          : retention_case::own_pair_other;
                            break;
                        }
                    }
                }
                std::size_t slot = static_cast<std::size_t>(a * cases + static_cast<int>(rc));
                ++tc[slot];
                if (survives(em, pm, hv.v1, hv.v2)) ++kc[slot];
            }
        }
    });

    retention_report rep;
    rep.mode = mode;
    rep.trials = trials;
    rep.seed = seed;
    rep.per_hyperedge.assign(static_cast<std::size_t>(a_count), {});
    std::vector<long long> agg_trials(cases, 0), agg_kept(cases, 0);
    for (int a = 0; a < a_count; ++a) {
        for (int c = 0; c < cases; ++c) {
            long long t = 0, k = 0;
            for (int w = 0; w < workers; ++w) {
                t += trial_counts[static_cast<std::size_t>(w)][static_cast<std::size_t>(a * cases + c)];
                k += kept_counts[static_cast<std::size_t>(w)][static_cast<std::size_t>(a * cases + c)];
            }
            if (t == 0) continue;
            rep.per_hyperedge[static_cast<std::size_t>(a)].push_back(
                {static_cast<retention_case>(c), retention_bucket{t, k}});
            agg_trials[static_cast<std::size_t>(c)] += t;
            agg_kept[static_cast<std::size_t>(c)] += k;
        }
    }
    for (int c = 0; c < cases; ++c) {
        if (agg_trials[static_cast<std::size_t>(c)] == 0) continue;
        rep.aggregate.push_back({static_cast<retention_case>(c),
                                 retention_bucket{agg_trials[static_cast<std::size_t>(c)],
                                                  agg_kept[static_cast<std::size_t>(c)]}});
    }
    return rep;
}

} // namespace berge
