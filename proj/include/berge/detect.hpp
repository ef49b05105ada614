#ifndef BERGE_DETECT_HPP
#define BERGE_DETECT_HPP

#include <optional>
#include <vector>

#include "berge/core.hpp"

namespace berge {

// Exact number of r-vertex complete subgraphs.
long long count_cliques(const graph& g, int r);

// Embedding of f into g as a (not necessarily induced) subgraph;
// entry i is the image of pattern vertex i. Cycles, paths and cliques take
// specialized search paths; they agree with find_embedding by construction
// and by the property suite.
std::optional<std::vector<int>> contains_subgraph(const graph& g, const family_spec& f);

// Generic backtracking embedder, also usable on explicit patterns.
std::optional<std::vector<int>> find_embedding(const graph& g, const graph& pattern);

struct berge_witness {
    std::vector<int> core_map;   // pattern vertex -> hypergraph vertex
    std::vector<int> assignment; // pattern edge index (lex order) -> hyperedge id
};

// First Berge-f witness in deterministic enumeration order, if any: embeds
// the core with shadow pruning, then matches core edges to distinct
// hyperedges by augmenting paths.
std::optional<berge_witness> contains_berge(const hypergraph& h, const family_spec& f);

bool validate_witness(const hypergraph& h, const family_spec& f, const berge_witness& w);

// True iff h plus nothing else contains a Berge-f whose core uses a pair of
// hyperedge new_id. Sound as an incremental freeness check: any Berge copy
// created by adding that hyperedge must use it as a representative.
// Pass the shadow of h to skip recomputing it.
bool creates_berge(const hypergraph& h, const family_spec& f, int new_id,
                   const graph* shadow_hint = nullptr);

// True iff g contains a copy of f using edge e (g must already contain e).
bool creates_subgraph(const graph& g, const family_spec& f, vpair e);

bool is_linear(const hypergraph& h);

// Number of hyperedges containing both u and v.
int edge_heaviness(const hypergraph& h, int u, int v);

} // namespace berge

#endif
