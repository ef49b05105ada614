#include "berge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "berge/bounds.hpp"
#include "berge/canonical.hpp"
#include "berge/cli.hpp"
#include "berge/core.hpp"
#include "berge/detect.hpp"
#include "berge/matching.hpp"
#include "berge/reduction.hpp"
#include "berge/search.hpp"
#include "berge/symmetrize.hpp"

namespace berge {

namespace {

using clock_type = std::chrono::steady_clock;

struct suite_run {
    suite_result res;
    clock_type::time_point start = clock_type::now();

    explicit suite_run(std::string name, double budget) {
        res.name = std::move(name);
        res.budget_seconds = budget;
    }
    void check(bool ok, const std::string& what) {
        ++res.checks;
        if (!ok) {
            ++res.violations;
            if (res.details.size() < 25) res.details.push_back("violation: " + what);
        }
    }
    void note(const std::string& line) { res.details.push_back(line); }
    suite_result finish() {
        res.seconds = std::chrono::duration<double>(clock_type::now() - start).count();
        res.pass = res.violations == 0 &&
                   (res.budget_seconds <= 0.0 || res.seconds < res.budget_seconds);
        if (res.budget_seconds > 0.0 && res.seconds >= res.budget_seconds)
            res.details.push_back("time budget exceeded");
        return res;
    }
};

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

// ------------------------------------------------------------- suite: cel2

suite_result suite_cel2(const suite_params& p) {
    long long trials = p.trials > 0 ? p.trials : 1000;
    suite_run run("cel2", 10.0);
    rng master(p.seed);
    for (long long t = 0; t < trials; ++t) {
        bipartite_incidence g = random_bipartite(master, 20);
        matching m;
        if (t % 2 == 0) {
            m = maximum_matching(g);
        } else {
            rng r2 = rng::for_trial(p.seed, static_cast<std::uint64_t>(t));
            m = random_maximum_matching(g, r2);
        }
        cel2_partition part;
        try {
            part = cel2_partition_of(g, m);
        } catch (const error& e) {
            run.check(false, std::string("partition raised: ") + e.what());
            continue;
        }
        const matching& fm = part.final_m;
        run.check(fm.size() == m.size(), "rotation changed the matching size");
        bool ok = true;
        for (int a : part.a1) {
            if (!fm.matched_a(a)) ok = false;
            else if (part.in_b2[static_cast<std::size_t>(fm.of_a[static_cast<std::size_t>(a)])])
                ok = false; // P1
            bool free_nb = false;
            for (int b : g.adj_a[static_cast<std::size_t>(a)])
                if (!fm.matched_b(b)) free_nb = true;
            if (!free_nb) ok = false; // P3
        }
        for (int a : part.a2)
            for (int b : g.adj_a[static_cast<std::size_t>(a)])
                if (!part.in_b2[static_cast<std::size_t>(b)]) ok = false; // P2
        for (int a = 0; a < g.a_size; ++a)
            if (!fm.matched_a(a) && !part.in_a2[static_cast<std::size_t>(a)]) ok = false; // P4
        run.check(ok, "P1-P4 violated at trial " + std::to_string(t));
        run.check(part.a1.size() == part.b1.size(), "|A1| != |B1|");
        long long matched_a2 = 0;
        for (int a : part.a2)
            if (fm.matched_a(a)) ++matched_a2;
        run.check(static_cast<long long>(part.b2.size()) == matched_a2,
                  "|B2| != matched |A2|");
    }
    run.note("trials: " + std::to_string(trials));
    return run.finish();
}

// -------------------------------------------------------- suite: reduction

suite_result suite_reduction(const suite_params& p) {
    long long c5 = 200, c7 = 100;
    if (p.trials > 0) {
        c5 = (p.trials * 2) / 3;
        c7 = p.trials - c5;
    }
    suite_run run("reduction", 300.0);
    auto exercise = [&](const family_spec& f, long long count, int n_lo, int n_hi,
                        std::uint64_t salt) {
        for (long long i = 0; i < count; ++i) {
            int n = n_lo + static_cast<int>(i % (n_hi - n_lo + 1));
            std::uint64_t seed = p.seed ^ salt ^ static_cast<std::uint64_t>(i) << 8;
            hypergraph h = random_maximal_berge_free(n, 3, f, seed);
            try {
                reduction_certificate cert = red_blue_reduce(h, f);
                run.check(cert.split.h2.edge_count() <= cert.g_r, "|H2| > g_r");
                run.check(!contains_subgraph(cert.rbg.underlying(), f),
                          "output graph contains " + f.name());
                run.check(!contains_subgraph(cert.rbg.red_subgraph(), family_spec::clique(3)),
                          "red subgraph contains K_3");
                run.check(cert.split.h1.edge_count() + cert.split.h2.edge_count() ==
                              h.edge_count(),
                          "split loses hyperedges");
            } catch (const error& e) {
                run.check(false, std::string("reduce raised: ") + e.what());
            }
        }
    };
    exercise(family_spec::cycle(5), c5, 5, 8, 0x5150);
    exercise(family_spec::cycle(7), c7, 6, 8, 0x7150);
    run.note("instances: " + std::to_string(c5 + c7));
    return run.finish();
}

// ------------------------------------------------------------ suite: claim

suite_result suite_claim(const suite_params& p) {
    long long trials = p.trials > 0 ? p.trials : 500;
    suite_run run("claim", 300.0);
    for (long long t = 0; t < trials; ++t) {
        bool use_c7 = (t % 2) == 1;
        family_spec f = family_spec::cycle(use_c7 ? 7 : 5);
        family_spec f0 = family_spec::cycle(use_c7 ? 6 : 4);
        halving_mode mode = ((t / 2) % 2) == 0 ? halving_mode::independent : halving_mode::paired;
        int n = mode == halving_mode::paired ? (t % 4 < 2 ? 6 : 8) : 5 + static_cast<int>(t % 4);
        std::uint64_t seed = p.seed ^ (static_cast<std::uint64_t>(t) << 10);
        hypergraph h = random_maximal_berge_free(n, 3, f, seed);
        try {
            reduction_certificate cert = red_blue_reduce(h, f);
            halving_outcome hv = random_halving(n, mode, seed ^ 0xABCD);
            hv = survivor_graph(cert, hv);
            for (auto [u, v] : hv.g_prime.edges())
                run.check(((hv.v1 >> u) & 1u) == ((hv.v1 >> v) & 1u),
                          "survivor graph has a V1-V2 edge");
            run.check(check_claim(hv, f0),
                      "survivor graph contains " + f0.name() + " at trial " + std::to_string(t));
        } catch (const error& e) {
            run.check(false, std::string("pipeline raised: ") + e.what());
        }
    }
    run.note("trials: " + std::to_string(trials));
    return run.finish();
}

// -------------------------------------------------------- suite: retention

suite_result suite_retention(const suite_params& p) {
    long long trials = p.trials > 0 ? p.trials : 10000;
    suite_run run("retention", 120.0);
    family_spec f = family_spec::cycle(5);
    hypergraph h = random_maximal_berge_free(8, 3, f, p.seed ^ 0x8E7E);
    reduction_certificate cert = red_blue_reduce(h, f);
    long long matched = cert.m.size();
    run.check(matched > 0, "certificate has no matched hyperedges");

    retention_report ind = retention_statistics(cert, halving_mode::independent, trials,
                                                p.seed ^ 0x11D, p.ctx);
    for (std::size_t a = 0; a < ind.per_hyperedge.size(); ++a)
        for (const auto& [c, bucket] : ind.per_hyperedge[a])
            run.check(bucket.frequency() >= 0.25 - 0.02,
                      "independent retention below 0.23 for hyperedge " + std::to_string(a));

    retention_report par =
        retention_statistics(cert, halving_mode::paired, trials, p.seed ^ 0x22D, p.ctx);
    for (const auto& [c, bucket] : par.aggregate) {
        double freq = bucket.frequency();
        std::ostringstream what;
        what << retention_case_name(c) << " aggregate frequency " << freq;
        switch (c) {
            case retention_case::distinct_pairs:
                run.check(std::abs(freq - 0.25) <= 0.02, what.str());
                break;
            case retention_case::own_pair_matched:
                run.check(bucket.kept == 0, what.str());
                break;
            case retention_case::own_pair_other:
                run.check(std::abs(freq - 0.50) <= 0.02, what.str());
                break;
            case retention_case::matched: break;
        }
    }
    run.note("matched hyperedges: " + std::to_string(matched));
    run.note("trials per mode: " + std::to_string(trials));
    return run.finish();
}

// --------------------------------------------------------- suite: sandwich

suite_result suite_sandwich(const suite_params& p) {
    suite_run run("sandwich", 600.0);
    family_spec c5 = family_spec::cycle(5);
    search_options opt;
    opt.workers = p.ctx.workers > 0 ? p.ctx.workers : 1;
    for (int n = 5; n <= 7; ++n) {
        search_options o = opt;
        if (n == 7 && o.workers < 4) o.workers = 4;
        auto t0 = clock_type::now();
        auto kr = exact_generalized_ex(n, 3, c5, o);
        auto berge = exact_ex_berge(n, 3, c5, false, o);
        auto exg = exact_ex_graph(n, c5, o);
        double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
        run.check(kr.value <= berge.value, "lower sandwich fails at n=" + std::to_string(n));
        run.check(berge.value <= kr.value + exg.value,
                  "upper sandwich fails at n=" + std::to_string(n));
        std::ostringstream line;
        line << "n=" << n << ": ex(n,K3,C5)=" << kr.value << " <= ex_3(n,Berge-C5)="
             << berge.value << " <= " << kr.value << "+" << exg.value << "; " << secs << "s";
        run.note(line.str());
        if (n == 7)
            run.check(secs < 600.0, "n=7 Berge search exceeded 10 minutes on 4 workers");
    }
    return run.finish();
}

// --------------------------------------------------- suite: bound-direction

suite_result suite_bound_direction(const suite_params& p) {
    suite_run run("bound-direction", 0.0);
    search_options opt;
    opt.workers = p.ctx.workers > 0 ? p.ctx.workers : 1;

    auto check_family = [&](int k, const std::vector<int>& ns) {
        family_spec f = family_spec::cycle(2 * k + 1);
        family_spec f0 = family_spec::cycle(2 * k);
        auto hyp = check_hypotheses(f0.pattern(), f.pattern(),
                                    family_spec::path(2 * k).pattern());
        run.check(hyp.ok, "hypotheses fail for k=" + std::to_string(k));
        for (int n : ns) {
            long long exact = exact_ex_berge(n, 3, f, false, opt).value;
            theorem1_quantities q;
            q.ex_kr_f = static_cast<double>(exact_generalized_ex(n, 3, f, opt).value);
            q.has_ex_kr_f = true;
            q.ex_f0 = static_cast<double>(exact_ex_graph(n, f0, opt).value);
            q.has_ex_f0 = true;
            q.ex_lin = static_cast<double>(exact_ex_berge(n, 3, f, true, opt).value);
            q.has_ex_lin = true;
            q.c = static_cast<double>(k - 1); // Erdos-Gallai: ex(n,P_2k) <= (k-1)n
            q.has_c = true;
            q.assumptions = {"quantities exact from search", "c from Erdos-Gallai"};
            auto b1 = theorem1_bound("i", n, 3, q);
            auto b2 = theorem1_bound("ii", n, 3, q);
            auto b3 = theorem2_bound(n, k, bound_source::exact, 0.0, opt);
            std::ostringstream line;
            line << "k=" << k << " n=" << n << ": exact=" << exact << " t1i=" << b1.value
                 << " t1ii=" << b2.value << " t2=" << b3.value;
            run.note(line.str());
            run.check(b1.value >= static_cast<double>(exact),
                      "theorem1(i) below exact at n=" + std::to_string(n));
            run.check(b2.value >= static_cast<double>(exact),
                      "theorem1(ii) below exact at n=" + std::to_string(n));
            run.check(b3.value >= static_cast<double>(exact),
                      "theorem2 below exact at n=" + std::to_string(n));
        }
    };
    check_family(2, {6, 7, 8});
    check_family(3, {7});
    return run.finish();
}

// -------------------------------------------------------- suite: threshold

suite_result suite_threshold(const suite_params& p) {
    (void)p;
    suite_run run("threshold", 5.0);
    for (int n = 5; n <= 9; ++n)
        run.check(turan_threshold(4, 5, n).dominant == -1,
                  "expected red dominance at n=" + std::to_string(n));
    for (int n = 10; n <= 40; ++n)
        run.check(turan_threshold(4, 5, n).dominant == 1,
                  "expected blue dominance at n=" + std::to_string(n));
    auto t10 = turan_threshold(4, 5, 10);
    run.check(t10.blue_cliques == 36 && t10.red_edges == 33, "T(10,4)/T(10,3) counts wrong");
    auto t9 = turan_threshold(4, 5, 9);
    run.check(t9.blue_cliques == 24 && t9.red_edges == 27, "T(9,4)/T(9,3) counts wrong");
    return run.finish();
}

// ---------------------------------------------------- suite: symmetrization

suite_result suite_symmetrization(const suite_params& p) {
    (void)p;
    suite_run run("symmetrization", 600.0);
    long long instances = 0;
    for (int n = 1; n <= 5; ++n) {
        std::vector<vpair> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        long long total = 1;
        for (std::size_t i = 0; i < slots.size(); ++i) total *= 3;
        long long blue_cap = count_cliques(turan_graph(n, std::min(4, n)), 3);
        long long red_cap = turan_graph(n, std::min(2, n)).edge_count();
        long long cap = std::max(blue_cap, red_cap);
        for (long long code = 0; code < total; ++code) {
            long long c = code;
            red_blue_graph rbg(n);
            for (const auto& e : slots) {
                int state = static_cast<int>(c % 3);
                c /= 3;
                if (state == 1) rbg.add_edge(e.u, e.v, edge_color::red);
                if (state == 2) rbg.add_edge(e.u, e.v, edge_color::blue);
            }
            if (contains_subgraph(rbg.red_subgraph(), family_spec::clique(3))) continue;
            if (n >= 5 && contains_subgraph(rbg.underlying(), family_spec::clique(5))) continue;
            ++instances;
            try {
                symmetrize_result sr = symmetrize_to_optimum(rbg, 5, 3);
                bool monotone = true;
                long long prev = sr.initial_g_r;
                for (const auto& st : sr.steps) {
                    if (st.g_r_after < prev) monotone = false;
                    prev = st.g_r_after;
                }
                long long final_gr = g_r_value(sr.final, 3);
                if (!sr.converged || !monotone || final_gr > cap ||
                    !is_mono_complete_multipartite(sr.final)) {
                    run.check(false, "symmetrization failed on instance " + std::to_string(code) +
                                         " at n=" + std::to_string(n));
                } else {
                    ++run.res.checks;
                }
            } catch (const error& e) {
                run.check(false, std::string("symmetrize raised: ") + e.what());
            }
        }
    }
    run.note("instances: " + std::to_string(instances));
    return run.finish();
}

// ----------------------------------------------------------- suite: oracle

// Independent Berge oracle: enumerate hyperedge subsets of pattern size and
// all bijections onto the pattern's edges, then try to realize the core.
bool naive_contains_berge(const hypergraph& h, const family_spec& f) {
    const graph& pattern = f.pattern();
    auto pedges = pattern.edges();
    int k = static_cast<int>(pedges.size());
    if (k > h.edge_count()) return false;
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
        if (idx == k) {
            std::vector<int> perm = subset;
            std::sort(perm.begin(), perm.end());
            do {
                // realize: pattern edge i gets hyperedge perm[i]
                std::vector<int> img(static_cast<std::size_t>(pattern.vertex_count()), -1);
                std::uint64_t used = 0;
                std::function<bool(int)> place = [&](int pv) -> bool {
                    if (pv == pattern.vertex_count()) return true;
                    for (int w = 0; w < h.vertex_count(); ++w) {
                        if ((used >> w) & 1u) continue;
                        bool ok = true;
                        for (int i = 0; i < k && ok; ++i) {
                            vpair e = pedges[static_cast<std::size_t>(i)];
                            int a = img[static_cast<std::size_t>(e.u)];
                            int b = img[static_cast<std::size_t>(e.v)];
                            int cand_a = e.u == pv ? w : a;
                            int cand_b = e.v == pv ? w : b;
                            std::uint64_t em = h.edge_mask(perm[static_cast<std::size_t>(i)]);
                            if (cand_a >= 0 && !((em >> cand_a) & 1u)) ok = false;
                            if (cand_b >= 0 && !((em >> cand_b) & 1u)) ok = false;
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
    return choose(0, 0);
}

// No-pruning references for the search engines.
long long enumerate_ex_graph(int n, const family_spec& f) {
    std::vector<vpair> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1u) g.add_edge(slots[i]);
        if (!find_embedding(g, f.pattern())) best = std::max<long long>(best, g.edge_count());
    }
    return best;
}

long long enumerate_generalized(int n, int r, const family_spec& f) {
    std::vector<vpair> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1u) g.add_edge(slots[i]);
        if (!find_embedding(g, f.pattern())) best = std::max(best, count_cliques(g, r));
    }
    return best;
}

long long enumerate_ex_berge(int n, const family_spec& f, bool linear_only) {
    std::vector<std::vector<int>> slots;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) slots.push_back({a, b, c});
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        hypergraph h(3, n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1u) h.add_edge(slots[i]);
        if (linear_only && !is_linear(h)) continue;
        if (!naive_contains_berge(h, f)) best = std::max<long long>(best, h.edge_count());
    }
    return best;
}

suite_result suite_oracle(const suite_params& p) {
    suite_run run("oracle", 0.0);
    search_options opt;
    opt.workers = p.ctx.workers > 0 ? p.ctx.workers : 1;

    std::vector<family_spec> graph_fams = {family_spec::cycle(3),  family_spec::cycle(4),
                                           family_spec::cycle(5),  family_spec::path(3),
                                           family_spec::path(4),   family_spec::clique(4)};
    for (int n = 4; n <= 5; ++n) {
        for (const auto& f : graph_fams) {
            long long ref = enumerate_ex_graph(n, f);
            long long got = exact_ex_graph(n, f, opt).value;
            run.check(got == ref, "ex_graph mismatch for " + f.name() + " n=" + std::to_string(n));
        }
        for (const auto& f : {family_spec::cycle(4), family_spec::cycle(5), family_spec::clique(4)}) {
            long long ref = enumerate_generalized(n, 3, f);
            long long got = exact_generalized_ex(n, 3, f, opt).value;
            run.check(got == ref,
                      "generalized mismatch for " + f.name() + " n=" + std::to_string(n));
        }
        for (const auto& f : {family_spec::clique(3), family_spec::cycle(4), family_spec::cycle(5),
                              family_spec::path(4)}) {
            for (bool lin : {false, true}) {
                long long ref = enumerate_ex_berge(n, f, lin);
                search_options dfs_opt = opt;
                dfs_opt.engine = search_options::engine_kind::dfs;
                search_options cls_opt = opt;
                cls_opt.engine = search_options::engine_kind::classes;
                long long got_dfs = exact_ex_berge(n, 3, f, lin, dfs_opt).value;
                long long got_cls = exact_ex_berge(n, 3, f, lin, cls_opt).value;
                run.check(got_dfs == ref, "berge dfs mismatch for " + f.name() +
                                              (lin ? " linear" : "") + " n=" + std::to_string(n));
                run.check(got_cls == ref, "berge classes mismatch for " + f.name() +
                                              (lin ? " linear" : "") + " n=" + std::to_string(n));
            }
        }
    }

    // contains_berge against the subset-enumeration oracle on every
    // 3-uniform hypergraph with at most 5 hyperedges on 6 vertices
    std::vector<std::vector<int>> triples;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) triples.push_back({a, b, c});
    std::vector<family_spec> berge_fams = {family_spec::clique(3), family_spec::cycle(4),
                                           family_spec::cycle(5), family_spec::path(4)};
    std::vector<int> pick;
    long long hypergraphs = 0;
    std::function<void(std::size_t)> enumerate = [&](std::size_t from) {
        hypergraph h(3, 6);
        for (int i : pick) h.add_edge(triples[static_cast<std::size_t>(i)]);
        ++hypergraphs;
        for (const auto& f : berge_fams) {
            bool naive = naive_contains_berge(h, f);
            auto witness = contains_berge(h, f);
            bool got = witness.has_value();
            if (got != naive) {
                run.check(false, "contains_berge disagrees with the oracle on " + f.name());
                return;
            }
            ++run.res.checks;
            if (witness) {
                run.check(validate_witness(h, f, *witness), "witness fails re-validation");
            }
        }
        if (pick.size() == 5) return;
        for (std::size_t i = from; i < triples.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            enumerate(i + 1);
            pick.pop_back();
        }
    };
    enumerate(0);
    run.note("hypergraphs checked: " + std::to_string(hypergraphs));
    return run.finish();
}

// --------------------------------------- suite: dashboard-regression

suite_result suite_dashboard_regression(const suite_params& p) {
    (void)p;
    suite_run run("dashboard-regression", 60.0);
    auto run_bounds = [&](int threads) {
        std::ostringstream out, err;
        std::vector<std::string> args = {"berge",          "bounds",
                                         "--k",            "2..5",
                                         "--n-range",      "10..200:10",
                                         "--source",       "formula",
                                         "--format",       "csv",
                                         "--threads",      std::to_string(threads)};
        int rc = run_cli(args, out, err);
        run.check(rc == 0, "bounds invocation failed rc=" + std::to_string(rc));
        return out.str();
    };
    std::string first = run_bounds(1);
    std::string second = run_bounds(1);
    run.check(first == second, "two single-threaded runs differ");
    std::string eight = run_bounds(8);
    run.check(first == eight, "1-thread and 8-thread runs differ");
    run.check(!first.empty(), "dashboard output empty");
    return run.finish();
}

} // namespace

std::vector<std::string> suite_names() {
    return {"cel2",     "reduction",       "claim",     "retention",
            "sandwich", "bound-direction", "threshold", "symmetrization",
            "oracle",   "dashboard-regression"};
}

suite_result run_suite(const std::string& name, const suite_params& p) {
    if (name == "cel2") return suite_cel2(p);
    if (name == "reduction") return suite_reduction(p);
    if (name == "claim") return suite_claim(p);
    if (name == "retention") return suite_retention(p);
    if (name == "sandwich") return suite_sandwich(p);
    if (name == "bound-direction") return suite_bound_direction(p);
    if (name == "threshold") return suite_threshold(p);
    if (name == "symmetrization") return suite_symmetrization(p);
    if (name == "oracle") return suite_oracle(p);
    if (name == "dashboard-regression") return suite_dashboard_regression(p);
    fail(errc::invalid_parameter, "unknown suite: " + name);
}

} // namespace berge
