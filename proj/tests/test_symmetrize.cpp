#include <doctest.h>

#include "berge/core.hpp"
#include "berge/detect.hpp"
#include "berge/reduction.hpp"
#include "berge/rng.hpp"
#include "berge/symmetrize.hpp"

using namespace berge;

namespace {

red_blue_graph random_rbg(rng& r, int n, int percent) {
    red_blue_graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (r.index(100) < percent)
                g.add_edge(u, v, r.coin() ? edge_color::red : edge_color::blue);
    return g;
}

} // namespace

TEST_CASE("symmetrize step copies the incidences") {
    red_blue_graph g(5);
    g.add_edge(1, 2, edge_color::blue);
    g.add_edge(1, 3, edge_color::blue);
    g.add_edge(1, 4, edge_color::blue);
    // vertex 0 is isolated; copy vertex 1 onto it
    red_blue_graph out = symmetrize_step(g, 0, 1, 3, 5);
    CHECK(out.has_edge(0, 2));
    CHECK(out.has_edge(0, 3));
    CHECK(out.has_edge(0, 4));
    CHECK(out.color(0, 2) == edge_color::blue);
    CHECK(!out.has_edge(0, 1));
    CHECK(out.edge_count() == 6);
}

TEST_CASE("symmetrize step is idempotent on twins") {
    red_blue_graph g(4);
    g.add_edge(0, 2, edge_color::red);
    g.add_edge(1, 2, edge_color::red);
    g.add_edge(0, 3, edge_color::blue);
    g.add_edge(1, 3, edge_color::blue);
    // 0 and 1 are non-adjacent twins
    CHECK(symmetrize_step(g, 0, 1, 3, 5) == g);
}

TEST_CASE("symmetrize step refuses red edges") {
    red_blue_graph g(3);
    g.add_edge(0, 1, edge_color::red);
    CHECK_THROWS_AS(symmetrize_step(g, 0, 1, 3, 5), error);
    try {
        symmetrize_step(g, 0, 1, 3, 5);
    } catch (const error& e) {
        CHECK(e.code() == errc::forbidden_step);
    }
    CHECK_THROWS_AS(symmetrize_step(g, 1, 1, 3, 5), error);
}

TEST_CASE("legal steps preserve red clique freeness") {
    rng r(808);
    int done = 0;
    while (done < 200) {
        int n = 4 + r.index(4); // n <= 7
        red_blue_graph g = random_rbg(r, n, 50);
        if (contains_subgraph(g.red_subgraph(), family_spec::clique(3))) continue;
        if (contains_subgraph(g.underlying(), family_spec::clique(5))) continue;
        int u = r.index(n), v = r.index(n);
        if (u == v) continue;
        if (g.has_edge(u, v) && g.color(u, v) == edge_color::red) continue;
        red_blue_graph out = symmetrize_step(g, u, v, 3, 5);
        CHECK(!contains_subgraph(out.red_subgraph(), family_spec::clique(3)));
        CHECK(!contains_subgraph(out.underlying(), family_spec::clique(5)));
        ++done;
    }
}

TEST_CASE("mono Turan graphs are fixpoints") {
    red_blue_graph blue(turan_graph(6, 4), edge_color::blue);
    auto rb = symmetrize_to_optimum(blue, 5, 3);
    CHECK(rb.converged);
    CHECK(rb.steps.empty());
    CHECK(rb.final == blue);

    red_blue_graph red(turan_graph(6, 2), edge_color::red);
    auto rr = symmetrize_to_optimum(red, 5, 3);
    CHECK(rr.converged);
    CHECK(rr.steps.empty());
    CHECK(rr.final == red);
}

TEST_CASE("mono complete multipartite detection") {
    CHECK(is_mono_complete_multipartite(red_blue_graph(turan_graph(7, 3), edge_color::blue)));
    CHECK(is_mono_complete_multipartite(red_blue_graph(5)));
    CHECK(is_mono_complete_multipartite(red_blue_graph(graph::complete(4), edge_color::red)));
    red_blue_graph mixed(turan_graph(6, 2), edge_color::blue);
    mixed.add_edge(0, 2, edge_color::red); // two colors now
    CHECK(!is_mono_complete_multipartite(mixed));
    red_blue_graph path(graph::path(3), edge_color::blue);
    CHECK(!is_mono_complete_multipartite(path));
}

TEST_CASE("exhaustive symmetrization at n = 4") {
    std::vector<vpair> slots;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) slots.emplace_back(u, v);
    long long cap = std::max(count_cliques(turan_graph(4, 4), 3),
                             static_cast<long long>(turan_graph(4, 2).edge_count()));
    int instances = 0;
    for (long long code = 0; code < 729; ++code) {
        long long c = code;
        red_blue_graph g(4);
        for (auto e : slots) {
            int state = static_cast<int>(c % 3);
            c /= 3;
            if (state == 1) g.add_edge(e.u, e.v, edge_color::red);
            if (state == 2) g.add_edge(e.u, e.v, edge_color::blue);
        }
        if (contains_subgraph(g.red_subgraph(), family_spec::clique(3))) continue;
        ++instances;
        auto res = symmetrize_to_optimum(g, 5, 3);
        CHECK(res.converged);
        CHECK(is_mono_complete_multipartite(res.final));
        long long prev = res.initial_g_r;
        for (const auto& st : res.steps) {
            CHECK(st.g_r_after >= prev);
            prev = st.g_r_after;
        }
        CHECK(g_r_value(res.final, 3) >= res.initial_g_r);
        CHECK(g_r_value(res.final, 3) <= cap);
    }
    CHECK(instances > 200);
}

TEST_CASE("turan threshold") {
    auto t10 = turan_threshold(4, 5, 10);
    CHECK(t10.blue_cliques == 36);
    CHECK(t10.red_edges == 33);
    CHECK(t10.dominant == 1);

    auto t9 = turan_threshold(4, 5, 9);
    CHECK(t9.blue_cliques == 24);
    CHECK(t9.red_edges == 27);
    CHECK(t9.dominant == -1);

    auto t4 = turan_threshold(2, 3, 4);
    CHECK(t4.blue_cliques == 4); // edges of T(4,2)
    CHECK(t4.red_edges == 0);    // edges of T(4,1)
    CHECK(t4.dominant == 1);

    CHECK_THROWS_AS(turan_threshold(5, 4, 10), error);
    CHECK_THROWS_AS(turan_threshold(4, 5, 4), error);

    // the (4,5) flip sits exactly between n = 9 and n = 10
    for (int n = 5; n <= 9; ++n) CHECK(turan_threshold(4, 5, n).dominant == -1);
    for (int n = 10; n <= 24; ++n) CHECK(turan_threshold(4, 5, n).dominant == 1);
}

TEST_CASE("clique blowup hypergraphs avoid Berge cliques") {
    for (int n = 4; n <= 7; ++n) {
        hypergraph h = clique_blowup_hypergraph(n, 3, 3); // K_3 copies of T(n,3)
        CHECK(h.edge_count() == count_cliques(turan_graph(n, 3), 3));
        CHECK(!contains_berge(h, family_spec::clique(4)));
    }
    for (int n = 5; n <= 8; ++n) {
        hypergraph h = clique_blowup_hypergraph(n, 4, 4);
        CHECK(h.edge_count() == count_cliques(turan_graph(n, 4), 4));
        CHECK(!contains_berge(h, family_spec::clique(5)));
    }
}
