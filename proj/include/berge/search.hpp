#ifndef BERGE_SEARCH_HPP
#define BERGE_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "berge/core.hpp"
#include "berge/parallel.hpp"

namespace berge {

struct search_options {
    int workers = 1;
    int witness_cap = 4;
    int iso_memo_depth = 3; // colored canonical memo applied at DFS depths <= this
    enum class engine_kind { automatic, dfs, classes };
    engine_kind engine = engine_kind::automatic;
};

struct search_result {
    long long value = 0;
    std::vector<std::string> witnesses; // canonical representatives, text format
    long long nodes_explored = 0;
    bool exhaustive = false;
    double wall_seconds = 0.0;
};

// Maximum edge count of an f-free graph on n vertices (n <= 10).
search_result exact_ex_graph(int n, const family_spec& f, const search_options& opt = {});

// Maximum number of K_r copies over f-free graphs on n vertices (n <= 9).
search_result exact_generalized_ex(int n, int r, const family_spec& f,
                                   const search_options& opt = {});

// Maximum hyperedge count of a Berge-f-free (optionally linear) r-graph on
// n vertices; r = 3 up to n = 8, r = 4 up to n = 7. The DFS engine walks
// r-set slots in lexicographic order with incremental freeness pruning; the
// classes engine runs an isomorph-free breadth-first generation and is the
// default from n = 7 up.
search_result exact_ex_berge(int n, int r, const family_spec& f, bool linear_only,
                             const search_options& opt = {});

// Seeded greedy maximal Berge-f-free r-graph; maximality is audited before
// returning.
hypergraph random_maximal_berge_free(int n, int r, const family_spec& f, std::uint64_t seed);

} // namespace berge

#endif
