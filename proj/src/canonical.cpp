#include "berge/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace berge {

namespace {

// Guard against pathological survivor growth in the minimisation below.
constexpr std::size_t survivor_limit = 2'000'000;

// Breadth-first minimisation of the cell-value string over all vertex
// permutations. Cells are the r-subsets of positions, revealed in the level
// of their largest position and ordered lexicographically inside a level, so
// the string grows by a fixed segment per assigned position and greedy
// per-level minimisation yields the global lexicographic minimum.
//
// value_of receives r original vertex ids (the assigned vertices of a cell)
// and must return 0..9. Candidates that are interchangeable with an already
// kept candidate by a transposition automorphism are collapsed.
template <typename ValueFn>
std::string minimize_code(int n, int r, ValueFn&& value_of) {
    if (n == 0) return std::string();

    // swap_ok[u][v]: transposing u and v is an automorphism.
    std::vector<std::vector<char>> swap_ok(static_cast<std::size_t>(n),
                                           std::vector<char>(static_cast<std::size_t>(n), 0));
    {
        std::vector<int> set(static_cast<std::size_t>(r));
        std::vector<int> swapped(static_cast<std::size_t>(r));
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                bool ok = true;
                // iterate all r-subsets containing u xor v; compare with image
                std::vector<int> idx(static_cast<std::size_t>(r));
                for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
                for (;;) {
                    bool has_u = false, has_v = false;
                    for (int i = 0; i < r; ++i) {
                        if (idx[static_cast<std::size_t>(i)] == u) has_u = true;
                        if (idx[static_cast<std::size_t>(i)] == v) has_v = true;
                    }
                    if (has_u != has_v) {
                        for (int i = 0; i < r; ++i) {
                            int x = idx[static_cast<std::size_t>(i)];
                            set[static_cast<std::size_t>(i)] = x;
                            swapped[static_cast<std::size_t>(i)] = x == u ? v : (x == v ? u : x);
                        }
                        std::sort(swapped.begin(), swapped.end());
                        if (value_of(set.data()) != value_of(swapped.data())) {
                            ok = false;
                            break;
                        }
                    }
                    int i = r - 1;
                    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
                    if (i < 0) break;
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < r; ++j)
                        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                }
                swap_ok[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = ok ? 1 : 0;
                swap_ok[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = ok ? 1 : 0;
            }
        }
    }

    std::vector<std::vector<int>> survivors{{}};
    std::string code;
    std::vector<int> cell(static_cast<std::size_t>(r));

    for (int level = 0; level < n; ++level) {
        // (r-1)-subsets of {0..level-1}, lexicographic; empty when level < r-1.
        std::vector<std::vector<int>> tails;
        if (level >= r - 1) {
            std::vector<int> idx(static_cast<std::size_t>(r - 1));
            for (int i = 0; i < r - 1; ++i) idx[static_cast<std::size_t>(i)] = i;
            for (;;) {
                tails.push_back(idx);
                int i = r - 2;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == level - (r - 1) + i) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < r - 1; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }

        std::string best_seg;
        bool have_best = false;
        std::vector<std::vector<int>> next;
        std::string seg(tails.size(), '0');

        for (const auto& prefix : survivors) {
            std::uint64_t used = 0;
            for (int x : prefix) used |= std::uint64_t{1} << x;
            std::vector<int> kept;
            for (int c = 0; c < n; ++c) {
                if ((used >> c) & 1u) continue;
                bool dup = false;
                for (int k : kept) {
                    if (swap_ok[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]) {
                        dup = true;
                        break;
                    }
                }
                if (dup) continue;
                kept.push_back(c);
                for (std::size_t t = 0; t < tails.size(); ++t) {
                    for (int i = 0; i < r - 1; ++i)
                        cell[static_cast<std::size_t>(i)] =
                            prefix[static_cast<std::size_t>(tails[t][static_cast<std::size_t>(i)])];
                    cell[static_cast<std::size_t>(r - 1)] = c;
                    std::sort(cell.begin(), cell.end());
                    seg[t] = static_cast<char>('0' + value_of(cell.data()));
                }
                if (!have_best || seg < best_seg) {
                    best_seg = seg;
                    have_best = true;
                    next.clear();
                }
                if (seg == best_seg) {
                    next.push_back(prefix);
                    next.back().push_back(c);
                }
            }
        }
        require(next.size() <= survivor_limit, errc::internal_invariant,
                "canonical labeling survivor set exploded");
        survivors = std::move(next);
        code += best_seg;
    }
    return code;
}

std::string with_header(int n, int r, std::string code) {
    std::ostringstream out;
    out << n << ',' << r << ':' << code;
    return out.str();
}

} // namespace

std::string canonical_label(const graph& g, int cap) {
    require(g.vertex_count() <= cap, errc::size_limit,
            "canonical_label capped at " + std::to_string(cap) + " vertices");
    std::string code = minimize_code(g.vertex_count(), 2, [&](const int* s) {
        return g.has_edge(s[0], s[1]) ? 1 : 0;
    });
    return with_header(g.vertex_count(), 2, std::move(code));
}

std::string canonical_label_two(const graph& one, const graph& two) {
    require(one.vertex_count() == two.vertex_count(), errc::invalid_parameter,
            "vertex count mismatch");
    std::string code = minimize_code(one.vertex_count(), 2, [&](const int* s) {
        if (one.has_edge(s[0], s[1])) return 1;
        return two.has_edge(s[0], s[1]) ? 2 : 0;
    });
    return with_header(one.vertex_count(), 2, std::move(code));
}

namespace {

bool has_rset(const hypergraph& h, const int* s, int r) {
    std::uint64_t mask = 0;
    for (int i = 0; i < r; ++i) mask |= std::uint64_t{1} << s[i];
    for (int e = 0; e < h.edge_count(); ++e)
        if (h.edge_mask(e) == mask) return true;
    return false;
}

} // namespace

std::string canonical_code(const hypergraph& h) {
    int r = h.uniformity();
    std::string code = minimize_code(h.vertex_count(), r,
                                     [&](const int* s) { return has_rset(h, s, r) ? 1 : 0; });
    return with_header(h.vertex_count(), r, std::move(code));
}

std::string canonical_code_two(const hypergraph& chosen, const hypergraph& rejected) {
    require(chosen.vertex_count() == rejected.vertex_count() &&
                chosen.uniformity() == rejected.uniformity(),
            errc::invalid_parameter, "hypergraph shape mismatch");
    int r = chosen.uniformity();
    std::string code = minimize_code(chosen.vertex_count(), r, [&](const int* s) {
        if (has_rset(chosen, s, r)) return 1;
        return has_rset(rejected, s, r) ? 2 : 0;
    });
    return with_header(chosen.vertex_count(), r, std::move(code));
}

hypergraph decode_canonical_code(const std::string& code) {
    auto comma = code.find(',');
    auto colon = code.find(':');
    require(comma != std::string::npos && colon != std::string::npos && comma < colon,
            errc::parse_error, "malformed canonical code");
    int n = std::stoi(code.substr(0, comma));
    int r = std::stoi(code.substr(comma + 1, colon - comma - 1));
    hypergraph h(r, n);
    std::size_t pos = colon + 1;
    std::vector<int> idx;
    for (int level = 0; level < n; ++level) {
        if (level < r - 1) continue;
        idx.assign(static_cast<std::size_t>(r - 1), 0);
        for (int i = 0; i < r - 1; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            require(pos < code.size(), errc::parse_error, "truncated canonical code");
            if (code[pos] == '1') {
                std::vector<int> e(idx.begin(), idx.end());
                e.push_back(level);
                h.add_edge(std::move(e));
            }
            ++pos;
            int i = r - 2;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == level - (r - 1) + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r - 1; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    require(pos == code.size(), errc::parse_error, "trailing canonical code bytes");
    return h;
}

graph decode_graph_label(const std::string& label) {
    auto comma = label.find(',');
    auto colon = label.find(':');
    require(comma != std::string::npos && colon != std::string::npos && comma < colon,
            errc::parse_error, "malformed canonical label");
    int n = std::stoi(label.substr(0, comma));
    require(label.substr(comma + 1, colon - comma - 1) == "2", errc::parse_error,
            "canonical label is not a graph label");
    graph g(n);
    std::size_t pos = colon + 1;
    for (int level = 1; level < n; ++level)
        for (int i = 0; i < level; ++i) {
            require(pos < label.size(), errc::parse_error, "truncated canonical label");
            if (label[pos] == '1') g.add_edge(i, level);
            ++pos;
        }
    require(pos == label.size(), errc::parse_error, "trailing canonical label bytes");
    return g;
}

bool is_isomorphic(const graph& a, const graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_label(a, max_vertices) == canonical_label(b, max_vertices);
}

bool is_isomorphic(const hypergraph& a, const hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.uniformity() != b.uniformity() ||
        a.edge_count() != b.edge_count())
        return false;
    return canonical_code(a) == canonical_code(b);
}

} // namespace berge
