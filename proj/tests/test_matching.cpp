#include <doctest.h>

#include <bit>

#include "berge/core.hpp"
#include "berge/detect.hpp"
#include "berge/matching.hpp"
#include "berge/rng.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

bipartite_incidence random_bipartite(rng& r, int max_side) {
    int a = 1 + r.index(max_side);
    int b = 1 + r.index(max_side);
    int density = 5 + r.index(90);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (r.index(100) < density) edges.emplace_back(i, j);
    return bipartite_incidence::from_edges(a, b, edges);
}

// P1-P4 for a partition against its final matching.
void check_partition(const bipartite_incidence& g, const cel2_partition& part) {
    const matching& m = part.final_m;
    for (int a : part.a1) {
        REQUIRE(m.matched_a(a));
        CHECK(!part.in_b2[static_cast<std::size_t>(m.of_a[static_cast<std::size_t>(a)])]); // P1
        bool free_nb = false;
        for (int b : g.adj_a[static_cast<std::size_t>(a)])
            if (!m.matched_b(b)) free_nb = true;
        CHECK(free_nb); // P3
    }
    for (int a : part.a2)
        for (int b : g.adj_a[static_cast<std::size_t>(a)])
            CHECK(part.in_b2[static_cast<std::size_t>(b)]); // P2
    for (int a = 0; a < g.a_size; ++a)
        if (!m.matched_a(a)) CHECK(part.in_a2[static_cast<std::size_t>(a)]); // P4
    CHECK(part.a1.size() == part.b1.size());
    long long matched_a2 = 0;
    for (int a : part.a2)
        if (m.matched_a(a)) ++matched_a2;
    CHECK(static_cast<long long>(part.b2.size()) == matched_a2);
}

} // namespace

TEST_CASE("build_incidence examples") {
    hypergraph one(3, 4);
    one.add_edge({1, 2, 3});
    auto g1 = build_incidence(one);
    CHECK(g1.a_size == 1);
    CHECK(g1.b_size == 3);
    CHECK(g1.adj_a[0].size() == 3);

    hypergraph two(3, 5);
    two.add_edge({1, 2, 3});
    two.add_edge({1, 2, 4});
    auto g2 = build_incidence(two);
    CHECK(g2.a_size == 2);
    CHECK(g2.b_size == 5); // pair {1,2} shared
    CHECK(g2.adjacent(0, 0));

    auto g0 = build_incidence(hypergraph(3, 4));
    CHECK(g0.a_size == 0);
    CHECK(g0.b_size == 0);
}

TEST_CASE("maximum matching examples and oracle") {
    std::vector<std::pair<int, int>> k33;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) k33.emplace_back(i, j);
    CHECK(maximum_matching(bipartite_incidence::from_edges(3, 3, k33)).size() == 3);

    auto shared = bipartite_incidence::from_edges(2, 1, {{0, 0}, {1, 0}});
    CHECK(maximum_matching(shared).size() == 1);

    rng r(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_bipartite(r, 12);
        matching m = maximum_matching(g);
        validate_matching(g, m);
        CHECK(m.size() == oracles::max_matching_size(g));
        rng r2 = rng::for_trial(31, static_cast<std::uint64_t>(trial));
        matching rm = random_maximum_matching(g, r2);
        validate_matching(g, rm);
        CHECK(rm.size() == m.size());
    }
}

TEST_CASE("matching size is invariant under relabeling") {
    rng r(88);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_bipartite(r, 10);
        std::vector<int> pa(static_cast<std::size_t>(g.a_size)), pb(static_cast<std::size_t>(g.b_size));
        for (int i = 0; i < g.a_size; ++i) pa[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < g.b_size; ++i) pb[static_cast<std::size_t>(i)] = i;
        r.shuffle(pa);
        r.shuffle(pb);
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < g.a_size; ++a)
            for (int b : g.adj_a[static_cast<std::size_t>(a)])
                edges.emplace_back(pa[static_cast<std::size_t>(a)], pb[static_cast<std::size_t>(b)]);
        auto h = bipartite_incidence::from_edges(g.a_size, g.b_size, edges);
        CHECK(maximum_matching(h).size() == maximum_matching(g).size());
    }
}

TEST_CASE("cel2 partition worked examples") {
    // single edge a-b, M = {ab}: the stall rule absorbs a
    auto g1 = bipartite_incidence::from_edges(1, 1, {{0, 0}});
    auto p1 = cel2_partition_of(g1, maximum_matching(g1));
    CHECK(p1.a2 == std::vector<int>{0});
    CHECK(p1.b2 == std::vector<int>{0});
    CHECK(p1.a1.empty());
    CHECK(p1.b1.empty());

    // a1 ~ b1, a1 ~ b2, M = {a1 b1}: a1 keeps its free neighbour
    auto g2 = bipartite_incidence::from_edges(1, 2, {{0, 0}, {0, 1}});
    auto p2 = cel2_partition_of(g2, maximum_matching(g2));
    CHECK(p2.a1 == std::vector<int>{0});
    CHECK(p2.b1 == std::vector<int>{0});
    CHECK(p2.a2.empty());
    CHECK(p2.b2.empty());

    // A = {a1, a2}, B = {b}, both adjacent: the unmatched seed pulls in b
    auto g3 = bipartite_incidence::from_edges(2, 1, {{0, 0}, {1, 0}});
    auto p3 = cel2_partition_of(g3, maximum_matching(g3));
    CHECK(p3.a2 == std::vector<int>{0, 1});
    CHECK(p3.b2 == std::vector<int>{0});
    CHECK(p3.a1.empty());
    CHECK(p3.b1.empty());
}

TEST_CASE("cel2 rejects a non-maximum matching") {
    // edges a0-b0, a0-b1, a1-b0; matching {a1-b0} misses the augmenting path
    auto g = bipartite_incidence::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 0}});
    matching m;
    m.of_a = {-1, 0};
    m.of_b = {1, -1};
    CHECK_THROWS_AS(cel2_partition_of(g, m), error);
    try {
        cel2_partition_of(g, m);
    } catch (const error& e) {
        CHECK(e.code() == errc::precondition_violation);
    }
}

TEST_CASE("cel2 may rotate the matching to honor P3") {
    // a0 matched with every neighbour matched, chain leads to a free vertex:
    // edges a0-b0, a0-b1, a1-b1, a1-b2; M = {a0-b0, a1-b1} stalls on a0
    auto g = bipartite_incidence::from_edges(2, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
    matching m;
    m.of_a = {0, 1};
    m.of_b = {0, 1, -1};
    validate_matching(g, m);
    auto part = cel2_partition_of(g, m);
    CHECK(part.rotations >= 1);
    CHECK(part.final_m.size() == 2);
    check_partition(g, part);
}

TEST_CASE("cel2 partition properties on random instances") {
    rng r(20240);
    for (int trial = 0; trial < 1000; ++trial) {
        auto g = random_bipartite(r, 20);
        matching m;
        if (trial % 2 == 0) {
            m = maximum_matching(g);
        } else {
            rng r2 = rng::for_trial(20240, static_cast<std::uint64_t>(trial));
            m = random_maximum_matching(g, r2);
        }
        auto part = cel2_partition_of(g, m);
        CHECK(part.final_m.size() == m.size());
        check_partition(g, part);
    }
}

TEST_CASE("heavy constrained matching") {
    // pair (4,5) is 1-heavy: only {1,4,5} covers it; (1,4) is 2-heavy
    hypergraph h(3, 6);
    h.add_edge({1, 4, 5});
    h.add_edge({1, 2, 3});
    h.add_edge({1, 2, 4});
    auto g = build_incidence(h);
    matching m0 = maximum_matching(g);
    matching m = heavy_constrained_matching(g, h);
    CHECK(m.size() == m0.size());
    for (int a = 0; a < g.a_size; ++a) {
        if (!m.matched_a(a)) continue;
        bool has_heavy = false;
        for (int b : g.adj_a[static_cast<std::size_t>(a)]) {
            vpair p = g.b_pairs[static_cast<std::size_t>(b)];
            if (edge_heaviness(h, p.u, p.v) == 1) has_heavy = true;
        }
        if (has_heavy) {
            vpair mp = g.b_pairs[static_cast<std::size_t>(m.of_a[static_cast<std::size_t>(a)])];
            CHECK(edge_heaviness(h, mp.u, mp.v) == 1);
        }
    }

    // disjoint hyperedges: everything 1-heavy, any maximum matching qualifies
    hypergraph lin(3, 6);
    lin.add_edge({0, 1, 2});
    lin.add_edge({3, 4, 5});
    auto gl = build_incidence(lin);
    CHECK(heavy_constrained_matching(gl, lin).size() == 2);
}

TEST_CASE("heavy constrained matching keeps maximum size on random inputs") {
    rng r(606);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 5 + r.index(3);
        hypergraph h(3, n);
        for (int tries = 0; tries < 16 && h.edge_count() < 8; ++tries) {
            std::vector<int> e;
            while (static_cast<int>(e.size()) < 3) {
                int v = r.index(n);
                if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
            }
            if (!h.contains_edge(e)) h.add_edge(e);
        }
        auto g = build_incidence(h);
        matching m = heavy_constrained_matching(g, h);
        validate_matching(g, m);
        CHECK(m.size() == oracles::max_matching_size(g));
        for (int a = 0; a < g.a_size; ++a) {
            if (!m.matched_a(a)) continue;
            bool has_heavy = false;
            for (int b : g.adj_a[static_cast<std::size_t>(a)]) {
                vpair p = g.b_pairs[static_cast<std::size_t>(b)];
                if (edge_heaviness(h, p.u, p.v) == 1) has_heavy = true;
            }
            if (has_heavy) {
                vpair mp = g.b_pairs[static_cast<std::size_t>(m.of_a[static_cast<std::size_t>(a)])];
                CHECK(edge_heaviness(h, mp.u, mp.v) == 1);
            }
        }
    }
}

TEST_CASE("adjust matching worked examples") {
    // the rule fires once: b0 = (1,2), M0(a) = (1,2), pair (1,3) free
    hypergraph h2(3, 5);
    h2.add_edge({1, 2, 3});
    hypergraph h1(3, 5);
    h1.add_edge({1, 2, 4});
    auto g = build_incidence(h2);
    matching m0 = maximum_matching(g); // matches a0 to (1,2)
    REQUIRE(g.b_pairs[static_cast<std::size_t>(m0.of_a[0])] == vpair(1, 2));
    matching m = adjust_matching(g, m0, h1);
    CHECK(m.size() == 1);
    CHECK(g.b_pairs[static_cast<std::size_t>(m.of_a[0])] == vpair(1, 3));

    // the "not possible" branch: both candidate pairs matched elsewhere
    hypergraph h2b(3, 8);
    h2b.add_edge({1, 2, 3});
    h2b.add_edge({1, 3, 4});
    h2b.add_edge({2, 3, 5});
    hypergraph h1b(3, 8);
    h1b.add_edge({1, 2, 6});
    h1b.add_edge({1, 4, 7});
    h1b.add_edge({2, 5, 7});
    auto gb = build_incidence(h2b);
    matching m0b;
    m0b.of_a.assign(3, -1);
    m0b.of_b.assign(gb.b_size, -1);
    auto match_pair = [&](int a, vpair p) {
        int b = static_cast<int>(std::lower_bound(gb.b_pairs.begin(), gb.b_pairs.end(), p) -
                                 gb.b_pairs.begin());
        m0b.of_a[static_cast<std::size_t>(a)] = b;
        m0b.of_b[static_cast<std::size_t>(b)] = a;
    };
    match_pair(0, {1, 2});
    match_pair(1, {1, 3});
    match_pair(2, {2, 3});
    validate_matching(gb, m0b);
    matching mb = adjust_matching(gb, m0b, h1b);
    CHECK(mb.of_a == m0b.of_a); // a0 cannot move; a1, a2 already share one vertex
}

TEST_CASE("adjust matching postcondition on random pipelines") {
    rng r(999);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 5 + r.index(3);
        hypergraph h(3, n);
        for (int tries = 0; tries < 20 && h.edge_count() < 7; ++tries) {
            std::vector<int> e;
            while (static_cast<int>(e.size()) < 3) {
                int v = r.index(n);
                if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
            }
            if (!h.contains_edge(e)) h.add_edge(e);
        }
        if (h.edge_count() == 0) continue;
        // split so that every h2 hyperedge shares a pair with h1
        std::vector<int> order(static_cast<std::size_t>(h.edge_count()));
        for (int i = 0; i < h.edge_count(); ++i) order[static_cast<std::size_t>(i)] = i;
        hypergraph h1(3, n), h2(3, n);
        std::vector<std::uint64_t> h1_masks;
        for (int id : order) {
            bool shares = false;
            for (auto mm : h1_masks)
                if (std::popcount(mm & h.edge_mask(id)) >= 2) shares = true;
            if (shares) {
                h2.add_edge(h.edge(id));
            } else {
                h1.add_edge(h.edge(id));
                h1_masks.push_back(h.edge_mask(id));
            }
        }
        if (h2.edge_count() == 0) continue;
        auto g = build_incidence(h2);
        matching m0 = heavy_constrained_matching(g, h);
        matching m = adjust_matching(g, m0, h1);
        CHECK(m.size() == m0.size());
        auto b0 = shared_pair_designation(g, h1);
        for (int a = 0; a < g.a_size; ++a) {
            if (!m.matched_a(a)) continue;
            vpair anchor = b0[static_cast<std::size_t>(a)];
            vpair cur = g.b_pairs[static_cast<std::size_t>(m.of_a[static_cast<std::size_t>(a)])];
            auto shared = [&](vpair x) {
                int c = 0;
                if (x.u == anchor.u || x.u == anchor.v) ++c;
                if (x.v == anchor.u || x.v == anchor.v) ++c;
                return c;
            };
            if (shared(cur) == 1) continue;
            for (int b : g.adj_a[static_cast<std::size_t>(a)]) {
                if (shared(g.b_pairs[static_cast<std::size_t>(b)]) != 1) continue;
                CHECK(m.matched_b(b));
                CHECK(m.of_b[static_cast<std::size_t>(b)] != a);
            }
        }
    }
}

TEST_CASE("adjust matching needs the linear part") {
    hypergraph h2(3, 4);
    h2.add_edge({0, 1, 2});
    hypergraph h1(3, 4); // empty: no shared pair exists
    auto g = build_incidence(h2);
    matching m0 = maximum_matching(g);
    CHECK_THROWS_AS(adjust_matching(g, m0, h1), error);
    try {
        adjust_matching(g, m0, h1);
    } catch (const error& e) {
        CHECK(e.code() == errc::pipeline_order);
    }
}
