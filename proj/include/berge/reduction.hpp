#ifndef BERGE_REDUCTION_HPP
#define BERGE_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "berge/core.hpp"
#include "berge/detect.hpp"
#include "berge/matching.hpp"
#include "berge/parallel.hpp"

namespace berge {

struct linear_split {
    hypergraph h1; // greedy linear part
    hypergraph h2; // remainder; every hyperedge shares a pair with h1
    std::vector<int> insertion_order; // ids in scan order
    std::vector<int> h1_ids, h2_ids;  // original ids, in scan order
};

// Scan in the given order, taking a hyperedge iff it shares no pair with the
// part built so far.
linear_split greedy_linear_split(const hypergraph& h, const std::vector<int>& order);
linear_split greedy_linear_split(const hypergraph& h); // input order

// g_r of a red-blue graph: red edges plus blue r-cliques.
long long g_r_value(const red_blue_graph& rbg, int r);

struct reduction_certificate {
    linear_split split;
    bipartite_incidence gamma;
    matching m; // final matching (heavy rule, adjusted, possibly rotated)
    cel2_partition partition;
    red_blue_graph rbg; // red = B1 pairs, blue = B2 pairs
    long long g_r = 0;
};

// Full reduction pipeline for a Berge-f-free r-graph; verifies freeness of
// the input (error carries a witness through the exception text) and the
// certificate invariants |H2| = |A1| + |A2| <= g_r, rbg f-free, red
// subgraph K_r-free.
reduction_certificate red_blue_reduce(const hypergraph& h, const family_spec& f);

enum class halving_mode { independent, paired };

struct halving_outcome {
    int n = 0;
    std::uint64_t v1 = 0, v2 = 0;
    halving_mode mode = halving_mode::independent;
    std::vector<vpair> pairing; // paired mode only
    std::uint64_t seed = 0;
    bool survivors_filled = false;
    std::vector<int> survivors; // ids into the certificate's A side
    graph g_prime;
};

// Independent: each vertex joins v1 with probability 1/2. Paired: uniform
// random perfect pairing, one vertex of each pair per side (n must be even).
halving_outcome random_halving(int n, halving_mode mode, std::uint64_t seed);

// Keeps a iff M(a) lies inside one side and the rest of a inside the other;
// g_prime consists of the matched pairs of the survivors.
halving_outcome survivor_graph(const reduction_certificate& cert, halving_outcome halving);

// True iff g_prime is f0-free.
bool check_claim(const halving_outcome& halving, const family_spec& f0);

enum class retention_case {
    matched,          // independent mode
    distinct_pairs,   // paired: the r vertices meet r distinct pairs
    own_pair_matched, // paired: a contains a pairing pair equal to M(a)
    own_pair_other,   // paired: a contains a pairing pair different from M(a)
};

struct retention_bucket {
    long long trials = 0;
    long long kept = 0;
    double frequency() const { return trials == 0 ? 0.0 : static_cast<double>(kept) / static_cast<double>(trials); }
};

struct retention_report {
    halving_mode mode = halving_mode::independent;
    long long trials = 0;
    std::uint64_t seed = 0;
    // indexed by hyperedge id on the A side; only matched ids are populated
    std::vector<std::vector<std::pair<retention_case, retention_bucket>>> per_hyperedge;
    std::vector<std::pair<retention_case, retention_bucket>> aggregate;
};

const char* retention_case_name(retention_case c);

// Monte Carlo over derived per-trial seeds; deterministic for a given seed
// independent of the worker count.
retention_report retention_statistics(const reduction_certificate& cert, halving_mode mode,
                                      long long trials, std::uint64_t seed,
                                      const parallelism& ctx = {});

} // namespace berge

#endif
