#ifndef BERGE_CANONICAL_HPP
#define BERGE_CANONICAL_HPP

#include <string>

#include "berge/core.hpp"

namespace berge {

inline constexpr int canonical_label_default_cap = 10;

// Lexicographically minimal adjacency bit string over all vertex
// permutations, read incrementally (cells involving position j appear when j
// is assigned). Equal labels iff isomorphic. Above the cap the caller must
// fall back to a hash-only dedup path, so we refuse loudly.
std::string canonical_label(const graph& g, int cap = canonical_label_default_cap);

// Same minimisation over pair states 0/1/2 (absent / in `one` / in `two`).
// `one` and `two` must be edge-disjoint graphs on the same vertex set.
std::string canonical_label_two(const graph& one, const graph& two);

std::string canonical_code(const hypergraph& h);

// Pair (chosen, rejected) of edge-disjoint uniform hypergraphs, used as an
// isomorph-rejection key by the search DFS.
std::string canonical_code_two(const hypergraph& chosen, const hypergraph& rejected);

// Rebuilds the canonical representative encoded by canonical_code.
hypergraph decode_canonical_code(const std::string& code);

// Rebuilds the canonical representative encoded by canonical_label.
graph decode_graph_label(const std::string& label);

bool is_isomorphic(const graph& a, const graph& b);
bool is_isomorphic(const hypergraph& a, const hypergraph& b);

} // namespace berge

#endif
