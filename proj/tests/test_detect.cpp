#include <doctest.h>

#include "berge/core.hpp"
#include "berge/detect.hpp"
#include "berge/rng.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

graph random_graph(rng& r, int n, int percent) {
    graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (r.index(100) < percent) g.add_edge(u, v);
    return g;
}

hypergraph random_hypergraph(rng& r, int n, int edges) {
    hypergraph h(3, n);
    for (int tries = 0; tries < edges * 3 && h.edge_count() < edges; ++tries) {
        std::vector<int> e;
        while (static_cast<int>(e.size()) < 3) {
            int v = r.index(n);
            if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        if (!h.contains_edge(e)) h.add_edge(e);
    }
    return h;
}

} // namespace

TEST_CASE("count_cliques examples") {
    CHECK(count_cliques(turan_graph(10, 4), 4) == 36);
    CHECK(count_cliques(turan_graph(10, 4), 4) == oracles::count_cliques(turan_graph(10, 4), 4));
    CHECK(count_cliques(oracles::complete_bipartite(3, 3), 3) == 0);
    CHECK(count_cliques(graph::complete(4), 3) == 4);
    CHECK(count_cliques(graph::complete(3), 7) == 0); // r > n
    CHECK(count_cliques(graph(5), 1) == 5);
    CHECK_THROWS_AS(count_cliques(graph(3), 0), error);
}

TEST_CASE("count_cliques at r = 2 is the edge count") {
    rng r(99);
    for (int trial = 0; trial < 50; ++trial) {
        graph g = random_graph(r, 2 + r.index(9), r.index(100));
        CHECK(count_cliques(g, 2) == g.edge_count());
        CHECK(count_cliques(g, 3) == oracles::count_cliques(g, 3));
    }
}

TEST_CASE("contains_subgraph examples") {
    CHECK(contains_subgraph(graph::complete(4), family_spec::cycle(4)).has_value());
    graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(!contains_subgraph(star, family_spec::path(4)));
    CHECK(!contains_subgraph(oracles::petersen(), family_spec::cycle(3)));
    CHECK(!oracles::has_triangle(oracles::petersen()));
    CHECK(contains_subgraph(oracles::petersen(), family_spec::cycle(5)).has_value());
}

TEST_CASE("embeddings returned are genuine") {
    rng r(4242);
    std::vector<family_spec> fams = {family_spec::cycle(4), family_spec::path(5),
                                     family_spec::clique(3)};
    for (int trial = 0; trial < 100; ++trial) {
        graph g = random_graph(r, 3 + r.index(7), 55);
        for (const auto& f : fams) {
            auto emb = contains_subgraph(g, f);
            if (!emb) continue;
            const graph& p = f.pattern();
            for (auto [a, b] : p.edges())
                CHECK(g.has_edge((*emb)[static_cast<std::size_t>(a)],
                                 (*emb)[static_cast<std::size_t>(b)]));
        }
    }
}

TEST_CASE("specialized detectors agree with the generic embedder") {
    rng r(1000);
    std::vector<family_spec> fams;
    for (int m = 3; m <= 6; ++m) fams.push_back(family_spec::cycle(m));
    for (int m = 2; m <= 6; ++m) fams.push_back(family_spec::path(m));
    for (int m = 3; m <= 5; ++m) fams.push_back(family_spec::clique(m));
    for (int trial = 0; trial < 1000; ++trial) {
        graph g = random_graph(r, 1 + r.index(10), r.index(100));
        for (const auto& f : fams) {
            bool fast = contains_subgraph(g, f).has_value();
            bool generic = find_embedding(g, f.pattern()).has_value();
            CHECK(fast == generic);
        }
    }
}

TEST_CASE("contains_berge examples") {
    hypergraph h(3, 9);
    h.add_edge({1, 2, 6});
    h.add_edge({2, 3, 7});
    h.add_edge({1, 3, 8});
    auto w = contains_berge(h, family_spec::clique(3));
    REQUIRE(w.has_value());
    CHECK(validate_witness(h, family_spec::clique(3), *w));
    std::vector<int> core = w->core_map;
    std::sort(core.begin(), core.end());
    CHECK(core == std::vector<int>{1, 2, 3});

    hypergraph sunflower(3, 6);
    sunflower.add_edge({1, 2, 3});
    sunflower.add_edge({1, 2, 4});
    sunflower.add_edge({1, 2, 5});
    CHECK(!contains_berge(sunflower, family_spec::clique(3)));
    CHECK(!oracles::contains_berge(sunflower, family_spec::clique(3)));

    hypergraph empty(3, 5);
    CHECK(!contains_berge(empty, family_spec::cycle(5)));
}

TEST_CASE("contains_berge matches the subset oracle on random inputs") {
    rng r(321);
    std::vector<family_spec> fams = {family_spec::clique(3), family_spec::cycle(4),
                                     family_spec::cycle(5), family_spec::path(4)};
    for (int trial = 0; trial < 250; ++trial) {
        hypergraph h = random_hypergraph(r, 4 + r.index(3), r.index(6));
        for (const auto& f : fams) {
            auto w = contains_berge(h, f);
            CHECK(w.has_value() == oracles::contains_berge(h, f));
            if (w) CHECK(validate_witness(h, f, *w));
        }
    }
}

TEST_CASE("creates_berge is consistent with the full check") {
    rng r(555);
    family_spec f = family_spec::cycle(4);
    for (int trial = 0; trial < 150; ++trial) {
        hypergraph full = random_hypergraph(r, 5 + r.index(2), 6);
        hypergraph h(3, full.vertex_count());
        bool contained = false;
        for (int e = 0; e < full.edge_count(); ++e) {
            int id = h.add_edge(full.edge(e));
            bool incremental = creates_berge(h, f, id);
            if (!contained) {
                CHECK(incremental == contains_berge(h, f).has_value());
                contained = incremental;
            }
        }
        CHECK(contained == contains_berge(full, f).has_value());
    }
}

TEST_CASE("is_linear and heaviness") {
    hypergraph a(3, 6);
    a.add_edge({1, 2, 3});
    a.add_edge({3, 4, 5});
    CHECK(is_linear(a));

    hypergraph b(3, 5);
    b.add_edge({1, 2, 3});
    b.add_edge({1, 2, 4});
    CHECK(!is_linear(b));
    CHECK(edge_heaviness(b, 1, 2) == 2);
    CHECK(edge_heaviness(b, 3, 4) == 0);

    hypergraph c(3, 4);
    c.add_edge({1, 2, 3});
    CHECK(edge_heaviness(c, 1, 3) == 1);
    CHECK(is_linear(hypergraph(3, 5)));
    CHECK_THROWS_AS(edge_heaviness(c, 2, 2), error);
}

TEST_CASE("linearity equals bounded heaviness") {
    rng r(777);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + r.index(4);
        hypergraph h = random_hypergraph(r, n, r.index(8));
        int max_heavy = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                max_heavy = std::max(max_heavy, edge_heaviness(h, u, v));
        CHECK(is_linear(h) == (max_heavy <= 1));
    }
}
