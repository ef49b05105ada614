#include <doctest.h>

#include <bit>
#include <cmath>

#include "berge/core.hpp"
#include "berge/detect.hpp"
#include "berge/reduction.hpp"
#include "berge/rng.hpp"
#include "berge/search.hpp"
#include "oracles.hpp"

using namespace berge;

TEST_CASE("greedy linear split examples") {
    hypergraph lin(3, 7);
    lin.add_edge({0, 1, 2});
    lin.add_edge({2, 3, 4});
    lin.add_edge({4, 5, 6});
    auto s1 = greedy_linear_split(lin);
    CHECK(s1.h1.edge_count() == 3);
    CHECK(s1.h2.edge_count() == 0);

    hypergraph pairshare(3, 5);
    pairshare.add_edge({1, 2, 3});
    pairshare.add_edge({1, 2, 4});
    auto s2 = greedy_linear_split(pairshare);
    CHECK(s2.h1.edge_count() == 1);
    CHECK(s2.h2.edge_count() == 1);
    CHECK(s2.h1.contains_edge({1, 2, 3}));
    CHECK(s2.h2.contains_edge({1, 2, 4}));

    hypergraph three(3, 7);
    three.add_edge({1, 2, 3});
    three.add_edge({1, 2, 4});
    three.add_edge({4, 5, 6});
    auto s3 = greedy_linear_split(three);
    CHECK(s3.h1.contains_edge({1, 2, 3}));
    CHECK(s3.h1.contains_edge({4, 5, 6}));
    CHECK(s3.h2.contains_edge({1, 2, 4}));

    CHECK_THROWS_AS(greedy_linear_split(three, {0, 0, 1}), error);
    CHECK_THROWS_AS(greedy_linear_split(three, {0, 1}), error);
}

TEST_CASE("greedy linear split invariants on random inputs") {
    rng r(1234);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 5 + r.index(4);
        hypergraph h(3, n);
        for (int tries = 0; tries < 25 && h.edge_count() < 12; ++tries) {
            std::vector<int> e;
            while (static_cast<int>(e.size()) < 3) {
                int v = r.index(n);
                if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
            }
            if (!h.contains_edge(e)) h.add_edge(e);
        }
        std::vector<int> order(static_cast<std::size_t>(h.edge_count()));
        for (int i = 0; i < h.edge_count(); ++i) order[static_cast<std::size_t>(i)] = i;
        r.shuffle(order);
        auto split = greedy_linear_split(h, order);
        CHECK(is_linear(split.h1));
        CHECK(split.h1.edge_count() + split.h2.edge_count() == h.edge_count());
        for (int e = 0; e < split.h2.edge_count(); ++e) {
            bool shares = false;
            for (int e1 = 0; e1 < split.h1.edge_count(); ++e1)
                if (std::popcount(split.h2.edge_mask(e) & split.h1.edge_mask(e1)) >= 2)
                    shares = true;
            CHECK(shares);
        }
    }
}

TEST_CASE("g_r value examples") {
    red_blue_graph red7(graph::cycle(7), edge_color::red);
    CHECK(g_r_value(red7, 3) == 7);
    CHECK(g_r_value(red_blue_graph(turan_graph(10, 4), edge_color::blue), 4) == 36);
    CHECK(g_r_value(red_blue_graph(oracles::complete_bipartite(3, 3), edge_color::blue), 3) == 0);
    CHECK_THROWS_AS(g_r_value(red7, 1), error);
}

TEST_CASE("red_blue_reduce on tiny inputs") {
    auto empty_cert = red_blue_reduce(hypergraph(3, 4), family_spec::cycle(5));
    CHECK(empty_cert.g_r == 0);
    CHECK(empty_cert.split.h2.edge_count() == 0);

    hypergraph one(3, 4);
    one.add_edge({1, 2, 3});
    auto cert = red_blue_reduce(one, family_spec::cycle(5));
    CHECK(cert.split.h1.edge_count() == 1);
    CHECK(cert.split.h2.edge_count() == 0);
    CHECK(cert.g_r == 0);
}

TEST_CASE("red_blue_reduce rejects inadmissible input") {
    // dense 3-graph on 5 vertices has a Berge-C5
    hypergraph h(3, 5);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) h.add_edge({a, b, c});
    CHECK(contains_berge(h, family_spec::cycle(5)).has_value());
    CHECK_THROWS_AS(red_blue_reduce(h, family_spec::cycle(5)), error);
    try {
        red_blue_reduce(h, family_spec::cycle(5));
    } catch (const error& e) {
        CHECK(e.code() == errc::input_not_admissible);
    }
}

TEST_CASE("reduction certificates on random maximal instances") {
    family_spec c5 = family_spec::cycle(5);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + trial % 4;
        hypergraph h = random_maximal_berge_free(n, 3, c5, 9000 + static_cast<std::uint64_t>(trial));
        auto cert = red_blue_reduce(h, c5);
        CHECK(cert.split.h2.edge_count() ==
              static_cast<int>(cert.partition.a1.size() + cert.partition.a2.size()));
        CHECK(cert.split.h2.edge_count() <= cert.g_r);
        CHECK(!contains_subgraph(cert.rbg.underlying(), c5));
        CHECK(!contains_subgraph(cert.rbg.red_subgraph(), family_spec::clique(3)));
        CHECK(static_cast<long long>(cert.partition.a2.size()) <=
              count_cliques(cert.rbg.blue_subgraph(), 3));
    }
}

TEST_CASE("random halving shapes and determinism") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto h = random_halving(10, halving_mode::paired, seed);
        CHECK(std::popcount(h.v1) == 5);
        CHECK(std::popcount(h.v2) == 5);
        CHECK((h.v1 & h.v2) == 0);
        CHECK((h.v1 | h.v2) == (std::uint64_t{1} << 10) - 1);
        CHECK(h.pairing.size() == 5);
        for (auto [u, v] : h.pairing) CHECK((((h.v1 >> u) & 1u) != ((h.v1 >> v) & 1u)));
    }

    double total = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed)
        total += std::popcount(random_halving(10, halving_mode::independent, seed).v1);
    CHECK(std::abs(total / 10000.0 - 5.0) <= 0.2);

    auto a = random_halving(4, halving_mode::paired, 42);
    auto b = random_halving(4, halving_mode::paired, 42);
    CHECK(a.v1 == b.v1);
    CHECK(a.pairing == b.pairing);

    CHECK_THROWS_AS(random_halving(5, halving_mode::paired, 1), error);
}

TEST_CASE("survivor rule verbatim") {
    // pipeline on {{0,1,2},{0,1,3}}: h2 = {{0,1,3}}, M(a) = (0,3) (1-heavy)
    hypergraph h(3, 4);
    h.add_edge({0, 1, 2});
    h.add_edge({0, 1, 3});
    auto cert = red_blue_reduce(h, family_spec::cycle(5));
    REQUIRE(cert.split.h2.edge_count() == 1);
    REQUIRE(cert.m.matched_a(0));
    vpair mp = cert.gamma.b_pairs[static_cast<std::size_t>(cert.m.of_a[0])];
    CHECK(mp == vpair(0, 3));

    halving_outcome hv;
    hv.n = 4;
    hv.mode = halving_mode::independent;
    hv.v1 = 0b1001; // {0,3}
    hv.v2 = 0b0110;
    auto filled = survivor_graph(cert, hv);
    CHECK(filled.survivors == std::vector<int>{0});
    CHECK(filled.g_prime.has_edge(0, 3));

    hv.v1 = 0b0011; // {0,1}: M(a) split across sides
    hv.v2 = 0b1100;
    filled = survivor_graph(cert, hv);
    CHECK(filled.survivors.empty());
    CHECK(filled.g_prime.edge_count() == 0);
}

TEST_CASE("unmatched hyperedges never survive") {
    rng r(2024);
    family_spec c5 = family_spec::cycle(5);
    for (int trial = 0; trial < 20; ++trial) {
        hypergraph h = random_maximal_berge_free(6 + trial % 3, 3, c5,
                                                 777 + static_cast<std::uint64_t>(trial));
        auto cert = red_blue_reduce(h, c5);
        auto hv = survivor_graph(
            cert, random_halving(h.vertex_count(), halving_mode::independent, r.next_u64()));
        for (int a : hv.survivors) CHECK(cert.m.matched_a(a));
        // survivor graph edges never cross the parts
        for (auto [u, v] : hv.g_prime.edges())
            CHECK(((hv.v1 >> u) & 1u) == ((hv.v1 >> v) & 1u));
    }
}

TEST_CASE("check_claim probe") {
    halving_outcome empty;
    empty.n = 5;
    empty.g_prime = graph(5);
    empty.survivors_filled = true;
    CHECK(check_claim(empty, family_spec::cycle(4)));

    // a corrupted pipeline is detectable: feed a survivor graph containing C4
    halving_outcome bad;
    bad.n = 5;
    bad.g_prime = graph::cycle(4); // pretend the pipeline emitted this
    bad.g_prime = [] {
        graph g(5);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 0);
        return g;
    }();
    bad.survivors_filled = true;
    CHECK(!check_claim(bad, family_spec::cycle(4)));

    halving_outcome unfilled;
    CHECK_THROWS_AS(check_claim(unfilled, family_spec::cycle(4)), error);
}

TEST_CASE("claim holds along randomized pipelines") {
    for (int trial = 0; trial < 40; ++trial) {
        bool c7 = trial % 2 == 1;
        family_spec f = family_spec::cycle(c7 ? 7 : 5);
        family_spec f0 = family_spec::cycle(c7 ? 6 : 4);
        halving_mode mode = (trial / 2) % 2 == 0 ? halving_mode::independent : halving_mode::paired;
        int n = mode == halving_mode::paired ? 8 : 7;
        hypergraph h = random_maximal_berge_free(n, 3, f, 5000 + static_cast<std::uint64_t>(trial));
        auto cert = red_blue_reduce(h, f);
        auto hv = survivor_graph(cert, random_halving(n, mode, 100 + static_cast<std::uint64_t>(trial)));
        CHECK(check_claim(hv, f0));
    }
}

TEST_CASE("paired survivor graph splits into the two sides") {
    family_spec c5 = family_spec::cycle(5);
    long long ex4c4 = exact_ex_graph(4, family_spec::cycle(4)).value; // = 4
    CHECK(ex4c4 == 4);
    for (int trial = 0; trial < 15; ++trial) {
        hypergraph h = random_maximal_berge_free(8, 3, c5, 31337 + static_cast<std::uint64_t>(trial));
        auto cert = red_blue_reduce(h, c5);
        auto hv = survivor_graph(cert, random_halving(8, halving_mode::paired,
                                                      900 + static_cast<std::uint64_t>(trial)));
        CHECK(hv.g_prime.edge_count() <= 2 * ex4c4);
    }
}

TEST_CASE("retention statistics shapes and determinism") {
    family_spec c5 = family_spec::cycle(5);
    hypergraph h = random_maximal_berge_free(8, 3, c5, 0xBEE);
    auto cert = red_blue_reduce(h, c5);

    auto rep1 = retention_statistics(cert, halving_mode::paired, 600, 77);
    auto rep2 = retention_statistics(cert, halving_mode::paired, 600, 77);
    for (std::size_t i = 0; i < rep1.aggregate.size(); ++i) {
        CHECK(rep1.aggregate[i].first == rep2.aggregate[i].first);
        CHECK(rep1.aggregate[i].second.kept == rep2.aggregate[i].second.kept);
    }
    parallelism two{2};
    auto rep3 = retention_statistics(cert, halving_mode::paired, 600, 77, two);
    for (std::size_t i = 0; i < rep1.aggregate.size(); ++i)
        CHECK(rep1.aggregate[i].second.kept == rep3.aggregate[i].second.kept);

    for (const auto& [c, bucket] : rep1.aggregate) {
        if (c == retention_case::own_pair_matched) CHECK(bucket.kept == 0);
        if (c == retention_case::distinct_pairs)
            CHECK(std::abs(bucket.frequency() - 0.25) < 0.08);
        if (c == retention_case::own_pair_other)
            CHECK(std::abs(bucket.frequency() - 0.50) < 0.08);
    }

    auto ind = retention_statistics(cert, halving_mode::independent, 600, 78);
    for (const auto& [c, bucket] : ind.aggregate) CHECK(bucket.frequency() > 0.25 - 0.08);
    CHECK_THROWS_AS(retention_statistics(cert, halving_mode::paired, 0, 1), error);
}
