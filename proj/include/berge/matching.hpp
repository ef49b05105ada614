#ifndef BERGE_MATCHING_HPP
#define BERGE_MATCHING_HPP

#include <functional>
#include <vector>

#include "berge/core.hpp"
#include "berge/rng.hpp"

namespace berge {

// Auxiliary bipartite graph: side A indexes hyperedges, side B indexes the
// vertex pairs they cover. Also usable as a plain bipartite graph (b_pairs
// empty) for the partition machinery on its own.
struct bipartite_incidence {
    int a_size = 0;
    int b_size = 0;
    std::vector<std::vector<int>> adj_a; // a -> ascending b ids
    std::vector<std::vector<int>> adj_b; // b -> ascending a ids
    std::vector<vpair> b_pairs;          // pair behind each b id (lex order)

    bool adjacent(int a, int b) const;

    static bipartite_incidence from_edges(int a_size, int b_size,
                                          const std::vector<std::pair<int, int>>& edges);
};

// B is exactly the set of pairs covered by h2; a ~ b iff the pair lies
// inside the hyperedge.
bipartite_incidence build_incidence(const hypergraph& h2);

struct matching {
    std::vector<int> of_a; // a -> b or -1
    std::vector<int> of_b; // b -> a or -1

    int size() const;
    bool matched_a(int a) const { return of_a[static_cast<std::size_t>(a)] >= 0; }
    bool matched_b(int b) const { return of_b[static_cast<std::size_t>(b)] >= 0; }
};

// Deterministic Kuhn augmentation from the lowest A index.
matching maximum_matching(const bipartite_incidence& g);

// Maximum matching with randomized augmentation order; used by property
// suites to exercise arbitrary maximum matchings.
matching random_maximum_matching(const bipartite_incidence& g, rng& r);

// Checks that m is a valid matching along the edges of g.
void validate_matching(const bipartite_incidence& g, const matching& m);

struct cel2_partition {
    std::vector<int> a1, a2;     // disjoint cover of A
    std::vector<int> b1, b2;     // disjoint cover of B' (matched B vertices)
    std::vector<int> b_prime;    // matched B vertices of final_m
    std::vector<char> in_a2, in_b2;
    matching final_m;        // the input matching, re-paired where necessary
    int rotations = 0;       // hyperedges whose match differs from the input
    bool p3_complete = true; // false when only P1/P2/P4 could be realized
};

// Alternating closure from the unmatched A vertices, stalled vertices with
// all neighbours matched absorbed one at a time. Output satisfies
//   P1: a in A1 and matched  =>  M(a) in B1
//   P2: neighbours of A2 lie in B2
//   P3: every a in A1 has an unmatched neighbour
//   P4: unmatched A vertices lie in A2
// for final_m, which may re-pair the input matching inside the region
// reachable from unmatched B vertices (size is always preserved). Reaching
// an unmatched B vertex from an unmatched A seed means an augmenting path
// exists and m was not maximum. Instances where no maximum matching
// realizes P1-P4 exist; they raise no-valid-partition.
cel2_partition cel2_partition_of(const bipartite_incidence& g, const matching& m);

// Same, but falls back to the best achievable P1/P2/P4 partition when P3
// has no solution; never raises no-valid-partition.
cel2_partition cel2_partition_total(const bipartite_incidence& g, const matching& m);

// cel2_partition_total with an acceptance predicate on the resulting B1 ids;
// the search prefers candidates the predicate accepts, then P3-complete
// ones. Used by the reduction pipeline to keep the red side clique-free.
cel2_partition cel2_partition_filtered(
    const bipartite_incidence& g, const matching& m,
    const std::function<bool(const bipartite_incidence&, const std::vector<int>&)>& b1_accept);

// Maximum matching in which every matched a containing a pair that is
// 1-heavy in h is matched to such a pair (heaviness measured in the full h;
// g must be built from the non-linear part of h).
matching heavy_constrained_matching(const bipartite_incidence& g, const hypergraph& h);

// Greedy rewiring to a fixpoint: prefer M(a) sharing exactly one vertex with
// the designated pair b0(a) = lexicographically least pair of a shared with
// an h1 hyperedge; each a is rewired at most once, only onto currently
// unmatched pairs.
matching adjust_matching(const bipartite_incidence& g, const matching& m0, const hypergraph& h1);

// b0 designation used by adjust_matching; errc::pipeline_order if some a
// shares no pair with h1.
std::vector<vpair> shared_pair_designation(const bipartite_incidence& g, const hypergraph& h1);

} // namespace berge

#endif
