#ifndef BERGE_SYMMETRIZE_HPP
#define BERGE_SYMMETRIZE_HPP

#include <vector>

#include "berge/core.hpp"
#include "berge/parallel.hpp"

namespace berge {

struct symmetrize_step_record {
    int u = 0, v = 0;
    char relation = 'n'; // 'n' non-adjacent, 'b' blue edge
    long long g_r_after = 0;
};

struct symmetrize_result {
    red_blue_graph final;
    std::vector<symmetrize_step_record> steps;
    long long initial_g_r = 0;
    bool converged = false; // reached a monochromatic complete multipartite graph
};

// Replace u's incidences by a copy of v's (uv itself removed when present).
// Legal when uv is non-adjacent or blue; a red uv is a forbidden step.
// Never creates a K_k or a red K_r when the input is free of them.
red_blue_graph symmetrize_step(const red_blue_graph& rbg, int u, int v, int r, int k);

// Greedy g_r-non-decreasing symmetrization: among legal steps that change
// the graph and do not revisit an earlier state, take the one maximizing the
// resulting g_r, ties broken by lexicographic (u, v). Step budget n^3 + 16.
symmetrize_result symmetrize_to_optimum(const red_blue_graph& rbg, int k, int r,
                                        const parallelism& ctx = {});

bool is_mono_complete_multipartite(const red_blue_graph& g);

struct threshold_report {
    int r = 0, k = 0, n = 0;
    long long blue_cliques = 0; // N(K_r, T(n, k-1))
    long long red_edges = 0;    // |E(T(n, r-1))|
    int dominant = 0;           // +1 blue, -1 red, 0 tie
};

// Compares K_r copies in T(n,k-1) against edges of T(n,r-1); blue dominance
// certifies the sharp Berge-K_k extremal value at this n.
threshold_report turan_threshold(int r, int k, int n);

// Hyperedges = vertex sets of the K_r copies of T(n, p); Berge-K_{p+1}-free
// by construction.
hypergraph clique_blowup_hypergraph(int n, int p, int r);

} // namespace berge

#endif
