#ifndef BERGE_CORE_HPP
#define BERGE_CORE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "berge/error.hpp"

namespace berge {

// Dense vertex ids 0..n-1, adjacency held as 64-bit rows. Desk scale only.
inline constexpr int max_vertices = 64;

struct vpair {
    int u = 0, v = 0; // normalized u < v

    vpair() = default;
    vpair(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    bool operator==(const vpair&) const = default;
    auto operator<=>(const vpair&) const = default;
};

class graph {
public:
    graph() = default;
    explicit graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    bool has_edge(vpair e) const { return has_edge(e.u, e.v); }
    void add_edge(int u, int v);
    void add_edge(vpair e) { add_edge(e.u, e.v); }
    void remove_edge(int u, int v);
    std::uint64_t neighbors(int v) const;
    int degree(int v) const;
    std::vector<vpair> edges() const; // lexicographic
    std::vector<int> degree_sequence() const; // sorted ascending

    graph permuted(const std::vector<int>& perm) const; // vertex v goes to perm[v]

    bool operator==(const graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    static graph complete(int n);
    static graph cycle(int m); // m >= 3
    static graph path(int m);  // m vertices, m >= 2

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
    void check_vertex(int v) const;
};

// Complete p-partite Turan graph; parts assigned round-robin (vertex mod p).
graph turan_graph(int n, int p);

// Replace edge e = uv by u-w and v-w through the new last vertex w = n.
graph subdivide_edge(const graph& g, vpair e);

// Drop vertex v, renumbering indices above it down by one.
graph delete_vertex(const graph& g, int v);

class hypergraph {
public:
    hypergraph() = default;
    hypergraph(int r, int n);

    int uniformity() const { return r_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Vertices of hyperedge id i, sorted.
    const std::vector<int>& edge(int i) const { return edges_[i]; }
    std::uint64_t edge_mask(int i) const { return masks_[i]; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    // Rejects wrong arity, out-of-range vertices and duplicates.
    int add_edge(std::vector<int> vertices);
    void remove_last_edge(); // stack discipline for search code
    bool contains_edge(const std::vector<int>& vertices) const;

    // Pairs {u,v} covered by at least one hyperedge, as an adjacency graph.
    graph shadow() const;

    bool operator==(const hypergraph& o) const;

private:
    int r_ = 0;
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<std::uint64_t> masks_;
};

enum class edge_color : std::uint8_t { red, blue };

// Graph with a total red/blue edge coloring.
class red_blue_graph {
public:
    red_blue_graph() = default;
    explicit red_blue_graph(int n) : g_(n), red_(static_cast<std::size_t>(n), 0) {}
    red_blue_graph(const graph& g, edge_color all);

    int vertex_count() const { return g_.vertex_count(); }
    int edge_count() const { return g_.edge_count(); }
    const graph& underlying() const { return g_; }

    void add_edge(int u, int v, edge_color c);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    edge_color color(int u, int v) const;

    std::uint64_t red_neighbors(int v) const { return red_[static_cast<std::size_t>(v)]; }
    std::uint64_t blue_neighbors(int v) const { return g_.neighbors(v) & ~red_[static_cast<std::size_t>(v)]; }

    graph red_subgraph() const;
    graph blue_subgraph() const;
    int red_edge_count() const;

    bool operator==(const red_blue_graph& o) const { return g_ == o.g_ && red_ == o.red_; }

private:
    graph g_;
    std::vector<std::uint64_t> red_;
};

// Names the forbidden patterns used throughout: cycles C_m, paths P_m
// (m counts vertices), cliques K_m, or an explicit graph.
class family_spec {
public:
    enum class kind : std::uint8_t { cycle, path, clique, custom };

    static family_spec cycle(int m);
    static family_spec path(int m);
    static family_spec clique(int m);
    static family_spec custom(graph g, std::string name = "custom");
    static family_spec parse(const std::string& token); // "C5" | "P4" | "K3"

    kind family() const { return kind_; }
    int size() const { return m_; }
    const std::string& name() const { return name_; }
    const graph& pattern() const { return pattern_; }

private:
    family_spec() = default;
    kind kind_ = kind::custom;
    int m_ = 0;
    std::string name_;
    graph pattern_;
};

// Text formats: one object per file, '#' starts a comment.
std::string emit_text(const graph& g);
std::string emit_text(const hypergraph& h);
std::string emit_text(const red_blue_graph& g);
graph parse_graph(const std::string& text);
hypergraph parse_hypergraph(const std::string& text);
red_blue_graph parse_red_blue(const std::string& text);

// Dispatch on the header keyword.
enum class object_kind { graph, hypergraph, red_blue };
object_kind peek_kind(const std::string& text);

} // namespace berge

#endif
