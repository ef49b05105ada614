#include "berge/core.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace berge {

const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_parameter: return "invalid-parameter";
        case errc::missing_edge: return "missing-edge";
        case errc::size_limit: return "size-limit";
        case errc::input_not_admissible: return "input-not-admissible";
        case errc::no_valid_partition: return "no-valid-partition";
        case errc::precondition_violation: return "precondition-violation";
        case errc::pipeline_order: return "pipeline-order";
        case errc::forbidden_step: return "forbidden-step";
        case errc::step_budget_exceeded: return "step-budget-exceeded";
        case errc::internal_invariant: return "internal-invariant";
        case errc::incomplete_input: return "incomplete-input";
        case errc::out_of_domain: return "out-of-domain";
        case errc::parse_error: return "parse-error";
        case errc::io_error: return "io-error";
    }
    return "unknown";
}

graph::graph(int n) {
    require(n >= 0 && n <= max_vertices, errc::invalid_parameter,
            "vertex count must be in [0, 64]");
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void graph::check_vertex(int v) const {
    require(v >= 0 && v < n_, errc::invalid_parameter, "vertex out of range");
}

bool graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    require(u != v, errc::invalid_parameter, "loops are not allowed");
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    ++m_;
}

void graph::remove_edge(int u, int v) {
    require(has_edge(u, v), errc::missing_edge, "edge not present");
    adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    --m_;
}

std::uint64_t graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<vpair> graph::edges() const {
    std::vector<vpair> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

std::vector<int> graph::degree_sequence() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

graph graph::permuted(const std::vector<int>& perm) const {
    require(static_cast<int>(perm.size()) == n_, errc::invalid_parameter,
            "permutation size mismatch");
    graph out(n_);
    for (auto [u, v] : edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

graph graph::complete(int n) {
    graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

graph graph::cycle(int m) {
    require(m >= 3, errc::invalid_parameter, "cycle needs at least 3 vertices");
    graph g(m);
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    return g;
}

graph graph::path(int m) {
    require(m >= 2, errc::invalid_parameter, "path needs at least 2 vertices");
    graph g(m);
    for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
    return g;
}

graph turan_graph(int n, int p) {
    require(p >= 1 && p <= n, errc::invalid_parameter, "need 1 <= p <= n");
    graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u % p != v % p) g.add_edge(u, v);
    return g;
}

graph subdivide_edge(const graph& g, vpair e) {
    require(g.has_edge(e), errc::missing_edge, "cannot subdivide an absent edge");
    int n = g.vertex_count();
    graph out(n + 1);
    for (auto f : g.edges())
        if (!(f == e)) out.add_edge(f);
    out.add_edge(e.u, n);
    out.add_edge(e.v, n);
    return out;
}

graph delete_vertex(const graph& g, int v) {
    require(v >= 0 && v < g.vertex_count(), errc::invalid_parameter, "vertex out of range");
    graph out(g.vertex_count() - 1);
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        out.add_edge(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return out;
}

hypergraph::hypergraph(int r, int n) : r_(r), n_(n) {
    require(r >= 2, errc::invalid_parameter, "uniformity must be at least 2");
    require(n >= 0 && n <= max_vertices, errc::invalid_parameter,
            "vertex count must be in [0, 64]");
}

int hypergraph::add_edge(std::vector<int> vertices) {
    require(static_cast<int>(vertices.size()) == r_, errc::invalid_parameter,
            "hyperedge arity mismatch");
    std::sort(vertices.begin(), vertices.end());
    std::uint64_t mask = 0;
    for (int v : vertices) {
        require(v >= 0 && v < n_, errc::invalid_parameter, "hyperedge vertex out of range");
        mask |= std::uint64_t{1} << v;
    }
    require(std::popcount(mask) == r_, errc::invalid_parameter,
            "hyperedge vertices must be distinct");
    for (const auto& m : masks_)
        require(m != mask, errc::invalid_parameter, "duplicate hyperedge");
    edges_.push_back(std::move(vertices));
    masks_.push_back(mask);
    return static_cast<int>(edges_.size()) - 1;
}

void hypergraph::remove_last_edge() {
    require(!edges_.empty(), errc::invalid_parameter, "no hyperedge to remove");
    edges_.pop_back();
    masks_.pop_back();
}

bool hypergraph::contains_edge(const std::vector<int>& vertices) const {
    std::uint64_t mask = 0;
    for (int v : vertices) {
        if (v < 0 || v >= n_) return false;
        mask |= std::uint64_t{1} << v;
    }
    if (std::popcount(mask) != r_) return false;
    return std::find(masks_.begin(), masks_.end(), mask) != masks_.end();
}

graph hypergraph::shadow() const {
    graph g(n_);
    for (const auto& e : edges_)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                if (!g.has_edge(e[i], e[j])) g.add_edge(e[i], e[j]);
    return g;
}

bool hypergraph::operator==(const hypergraph& o) const {
    if (r_ != o.r_ || n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
    auto a = masks_;
    auto b = o.masks_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

red_blue_graph::red_blue_graph(const graph& g, edge_color all) : g_(g) {
    red_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    if (all == edge_color::red)
        for (int v = 0; v < g.vertex_count(); ++v) red_[static_cast<std::size_t>(v)] = g.neighbors(v);
}

void red_blue_graph::add_edge(int u, int v, edge_color c) {
    g_.add_edge(u, v);
    if (c == edge_color::red) {
        red_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        red_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    } else {
        red_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        red_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    }
}

void red_blue_graph::remove_edge(int u, int v) {
    g_.remove_edge(u, v);
    red_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    red_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

edge_color red_blue_graph::color(int u, int v) const {
    require(g_.has_edge(u, v), errc::missing_edge, "edge not present");
    return ((red_[static_cast<std::size_t>(u)] >> v) & 1u) ? edge_color::red : edge_color::blue;
}

graph red_blue_graph::red_subgraph() const {
    graph out(g_.vertex_count());
    for (auto [u, v] : g_.edges())
        if (color(u, v) == edge_color::red) out.add_edge(u, v);
    return out;
}

graph red_blue_graph::blue_subgraph() const {
    graph out(g_.vertex_count());
    for (auto [u, v] : g_.edges())
        if (color(u, v) == edge_color::blue) out.add_edge(u, v);
    return out;
}

int red_blue_graph::red_edge_count() const {
    int c = 0;
    for (const auto& row : red_) c += std::popcount(row);
    return c / 2;
}

family_spec family_spec::cycle(int m) {
    require(m >= 3, errc::invalid_parameter, "cycle family needs m >= 3");
    family_spec f;
    f.kind_ = kind::cycle;
    f.m_ = m;
    f.name_ = "C" + std::to_string(m);
    f.pattern_ = graph::cycle(m);
    return f;
}

family_spec family_spec::path(int m) {
    require(m >= 2, errc::invalid_parameter, "path family needs m >= 2");
    family_spec f;
    f.kind_ = kind::path;
    f.m_ = m;
    f.name_ = "P" + std::to_string(m);
    f.pattern_ = graph::path(m);
    return f;
}

family_spec family_spec::clique(int m) {
    require(m >= 3, errc::invalid_parameter, "clique family needs m >= 3");
    family_spec f;
    f.kind_ = kind::clique;
    f.m_ = m;
    f.name_ = "K" + std::to_string(m);
    f.pattern_ = graph::complete(m);
    return f;
}

family_spec family_spec::custom(graph g, std::string name) {
    family_spec f;
    f.kind_ = kind::custom;
    f.m_ = g.vertex_count();
    f.name_ = std::move(name);
    f.pattern_ = std::move(g);
    return f;
}

family_spec family_spec::parse(const std::string& token) {
    require(token.size() >= 2, errc::invalid_parameter, "family token too short: " + token);
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    int m = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
        require(std::isdigit(static_cast<unsigned char>(token[i])) != 0, errc::invalid_parameter,
                "bad family token: " + token);
        m = m * 10 + (token[i] - '0');
    }
    switch (c) {
        case 'C': return cycle(m);
        case 'P': return path(m);
        case 'K': return clique(m);
        default: fail(errc::invalid_parameter, "unknown family prefix in: " + token);
    }
}

namespace {

// Strips '#' comments and splits remaining text into tokens.
std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) out.push_back(tok);
    }
    return out;
}

int parse_int(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        require(used == tok.size(), errc::parse_error, std::string("bad ") + what);
        return v;
    } catch (const error&) {
        throw;
    } catch (...) {
        fail(errc::parse_error, std::string("bad ") + what + ": " + tok);
    }
}

} // namespace

std::string emit_text(const graph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string emit_text(const hypergraph& h) {
    std::ostringstream out;
    out << "hypergraph " << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count()
        << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

std::string emit_text(const red_blue_graph& g) {
    std::ostringstream out;
    out << "rbgraph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.underlying().edges())
        out << u << ' ' << v << ' ' << (g.color(u, v) == edge_color::red ? 'r' : 'b') << '\n';
    return out.str();
}

graph parse_graph(const std::string& text) {
    auto toks = tokenize(text);
    require(!toks.empty() && toks[0] == "graph", errc::parse_error, "expected 'graph' header");
    require(toks.size() >= 3, errc::parse_error, "truncated graph header");
    int n = parse_int(toks[1], "vertex count");
    int m = parse_int(toks[2], "edge count");
    require(static_cast<int>(toks.size()) == 3 + 2 * m, errc::parse_error,
            "graph body does not match edge count");
    graph g(n);
    for (int i = 0; i < m; ++i) {
        int u = parse_int(toks[static_cast<std::size_t>(3 + 2 * i)], "edge endpoint");
        int v = parse_int(toks[static_cast<std::size_t>(4 + 2 * i)], "edge endpoint");
        require(!g.has_edge(u, v), errc::parse_error, "duplicate edge in input");
        g.add_edge(u, v);
    }
    return g;
}

hypergraph parse_hypergraph(const std::string& text) {
    auto toks = tokenize(text);
    require(!toks.empty() && toks[0] == "hypergraph", errc::parse_error,
            "expected 'hypergraph' header");
    require(toks.size() >= 4, errc::parse_error, "truncated hypergraph header");
    int r = parse_int(toks[1], "uniformity");
    int n = parse_int(toks[2], "vertex count");
    int m = parse_int(toks[3], "hyperedge count");
    require(static_cast<int>(toks.size()) == 4 + r * m, errc::parse_error,
            "hypergraph body does not match counts");
    hypergraph h(r, n);
    std::size_t pos = 4;
    for (int i = 0; i < m; ++i) {
        std::vector<int> e;
        e.reserve(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) e.push_back(parse_int(toks[pos++], "hyperedge vertex"));
        h.add_edge(std::move(e));
    }
    return h;
}

red_blue_graph parse_red_blue(const std::string& text) {
    auto toks = tokenize(text);
    require(!toks.empty() && toks[0] == "rbgraph", errc::parse_error, "expected 'rbgraph' header");
    require(toks.size() >= 3, errc::parse_error, "truncated rbgraph header");
    int n = parse_int(toks[1], "vertex count");
    int m = parse_int(toks[2], "edge count");
    require(static_cast<int>(toks.size()) == 3 + 3 * m, errc::parse_error,
            "rbgraph body does not match edge count");
    red_blue_graph g(n);
    std::size_t pos = 3;
    for (int i = 0; i < m; ++i) {
        int u = parse_int(toks[pos++], "edge endpoint");
        int v = parse_int(toks[pos++], "edge endpoint");
        const std::string& c = toks[pos++];
        require(c == "r" || c == "b", errc::parse_error, "edge color must be r or b");
        require(!g.has_edge(u, v), errc::parse_error, "duplicate edge in input");
        g.add_edge(u, v, c == "r" ? edge_color::red : edge_color::blue);
    }
    return g;
}

object_kind peek_kind(const std::string& text) {
    auto toks = tokenize(text);
    require(!toks.empty(), errc::parse_error, "empty input");
    if (toks[0] == "graph") return object_kind::graph;
    if (toks[0] == "hypergraph") return object_kind::hypergraph;
    if (toks[0] == "rbgraph") return object_kind::red_blue;
    fail(errc::parse_error, "unknown object header: " + toks[0]);
}

} // namespace berge
