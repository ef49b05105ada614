#include "berge/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <unordered_set>

#include "berge/canonical.hpp"
#include "berge/detect.hpp"
#include "berge/rng.hpp"

namespace berge {

namespace {

using clock_type = std::chrono::steady_clock;

std::vector<vpair> pair_slots(int n) {
    std::vector<vpair> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> rset_slots(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<std::size_t>(r));
    if (n < r) return out;
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(idx);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

int pick_split_depth(std::size_t slot_count) {
    return slot_count <= 12 ? 0 : 8;
}

// Merge raw witnesses found by the tasks (task order, each list deterministic)
// into at most cap canonical text forms.
template <typename Object, typename Canon, typename Emit>
std::vector<std::string> finish_witnesses(const std::vector<std::vector<Object>>& per_task,
                                          int cap, Canon&& canon, Emit&& emit) {
    std::vector<std::string> codes;
    for (const auto& list : per_task) {
        for (const auto& obj : list) {
            std::string c = canon(obj);
            if (std::find(codes.begin(), codes.end(), c) == codes.end()) codes.push_back(c);
            if (static_cast<int>(codes.size()) >= cap) break;
        }
        if (static_cast<int>(codes.size()) >= cap) break;
    }
    std::vector<std::string> out;
    out.reserve(codes.size());
    for (const auto& c : codes) out.push_back(emit(c));
    return out;
}

// ---------------------------------------------------------------- graphs

// DFS over pair slots in lexicographic order: include branch first, freeness
// checked incrementally, admissible bound against the task-local incumbent,
// colored-canonical isomorph rejection at shallow depths.
class graph_search {
public:
    graph_search(int n, const family_spec& f, int clique_r, const search_options& opt)
        : n_(n), f_(f), clique_r_(clique_r), opt_(opt), slots_(pair_slots(n)) {}

    search_result run() {
        auto t0 = clock_type::now();
        warm_ = greedy_value();
        int split = pick_split_depth(slots_.size());

        std::vector<std::vector<char>> prefixes;
        {
            task_state s(*this);
            std::vector<char> decisions;
            enumerate_prefixes(s, 0, split, decisions, prefixes);
        }

        std::vector<task_outcome> outcomes(prefixes.size());
        parallelism ctx{opt_.workers};
        parallel_for(prefixes.size(), ctx, [&](std::size_t i) {
            task_state s(*this);
            for (std::size_t pos = 0; pos < prefixes[i].size(); ++pos)
                s.apply(pos, prefixes[i][pos] != 0);
            s.best = warm_;
            dfs(s, prefixes[i].size(), outcomes[i]);
            outcomes[i].nodes = s.nodes;
        });

        search_result res;
        res.value = warm_;
        for (const auto& oc : outcomes) res.value = std::max(res.value, oc.value);
        res.nodes_explored = prefix_nodes_;
        std::vector<std::vector<graph>> raw(outcomes.size());
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            res.nodes_explored += outcomes[i].nodes;
            if (outcomes[i].value == res.value) raw[i] = outcomes[i].raw_witnesses;
        }
        res.witnesses = finish_witnesses(
            raw, opt_.witness_cap, [&](const graph& g) { return canonical_label(g); },
            [&](const std::string& code) { return emit_text(decode_graph_label(code)); });
        res.exhaustive = true;
        validate(res);
        res.wall_seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
        return res;
    }

private:
    struct task_state {
        graph chosen, rejected, optimistic;
        long long best = 0;
        long long nodes = 0;
        const graph_search& owner;

        explicit task_state(const graph_search& o)
            : chosen(o.n_), rejected(o.n_), optimistic(graph::complete(o.n_)), owner(o) {}

        bool can_include(std::size_t pos) {
            vpair e = owner.slots_[pos];
            chosen.add_edge(e);
            bool bad = creates_subgraph(chosen, owner.f_, e);
            chosen.remove_edge(e.u, e.v);
            return !bad;
        }
        void apply(std::size_t pos, bool include) {
            vpair e = owner.slots_[pos];
            if (include)
                chosen.add_edge(e);
            else {
                rejected.add_edge(e);
                optimistic.remove_edge(e.u, e.v);
            }
        }
        void undo(std::size_t pos, bool include) {
            vpair e = owner.slots_[pos];
            if (include)
                chosen.remove_edge(e.u, e.v);
            else {
                rejected.remove_edge(e.u, e.v);
                optimistic.add_edge(e);
            }
        }
        long long leaf_value() const {
            return owner.clique_r_ ? count_cliques(chosen, owner.clique_r_)
                                   : chosen.edge_count();
        }
        long long bound(std::size_t pos) const {
            if (owner.clique_r_) return count_cliques(optimistic, owner.clique_r_);
            return chosen.edge_count() + static_cast<long long>(owner.slots_.size() - pos);
        }
    };

    struct task_outcome {
        long long value = -1;
        long long nodes = 0;
        std::vector<graph> raw_witnesses;
    };

    long long greedy_value() {
        task_state s(*this);
        for (std::size_t pos = 0; pos < slots_.size(); ++pos)
            if (s.can_include(pos)) s.apply(pos, true);
        return s.leaf_value();
    }

    void enumerate_prefixes(task_state& s, std::size_t pos, int split, std::vector<char>& decisions,
                            std::vector<std::vector<char>>& out) {
        ++prefix_nodes_;
        if (static_cast<int>(pos) >= split || pos == slots_.size()) {
            out.push_back(decisions);
            return;
        }
        s.best = warm_;
        if (s.bound(pos) < warm_) return;
        if (static_cast<int>(pos) <= opt_.iso_memo_depth) {
            std::string key = std::to_string(pos) + '|' + canonical_label_two(s.chosen, s.rejected);
            if (!memo_.insert(std::move(key)).second) return;
        }
        if (s.can_include(pos)) {
            s.apply(pos, true);
            decisions.push_back(1);
            enumerate_prefixes(s, pos + 1, split, decisions, out);
            decisions.pop_back();
            s.undo(pos, true);
        }
        s.apply(pos, false);
        decisions.push_back(0);
        enumerate_prefixes(s, pos + 1, split, decisions, out);
        decisions.pop_back();
        s.undo(pos, false);
    }

    void dfs(task_state& s, std::size_t pos, task_outcome& oc) {
        ++s.nodes;
        if (pos == slots_.size()) {
            long long v = s.leaf_value();
            if (v > oc.value) {
                oc.value = v;
                oc.raw_witnesses.assign(1, s.chosen);
                s.best = std::max(s.best, v);
            } else if (v == oc.value &&
                       static_cast<int>(oc.raw_witnesses.size()) < owner_witness_cap()) {
                if (std::find(oc.raw_witnesses.begin(), oc.raw_witnesses.end(), s.chosen) ==
                    oc.raw_witnesses.end())
                    oc.raw_witnesses.push_back(s.chosen);
            }
            return;
        }
        if (s.bound(pos) < s.best) return;
        if (s.can_include(pos)) {
            s.apply(pos, true);
            dfs(s, pos + 1, oc);
            s.undo(pos, true);
        }
        s.apply(pos, false);
        dfs(s, pos + 1, oc);
        s.undo(pos, false);
    }

    int owner_witness_cap() const { return opt_.witness_cap; }

    void validate(const search_result& res) const {
        for (const auto& text : res.witnesses) {
            graph g = parse_graph(text);
            long long v = clique_r_ ? count_cliques(g, clique_r_) : g.edge_count();
            require(v == res.value, errc::internal_invariant, "witness does not attain the value");
            require(!contains_subgraph(g, f_), errc::internal_invariant,
                    "witness fails the freeness re-check");
        }
    }

    int n_;
    family_spec f_;
    int clique_r_; // 0: maximize edges
    search_options opt_;
    std::vector<vpair> slots_;
    long long warm_ = 0;
    long long prefix_nodes_ = 0;
    std::unordered_set<std::string> memo_;
};

// ------------------------------------------------------------ hypergraphs

class berge_dfs_search {
public:
    berge_dfs_search(int n, int r, const family_spec& f, bool linear_only,
                     const search_options& opt)
        : n_(n), r_(r), f_(f), linear_only_(linear_only), opt_(opt), slots_(rset_slots(n, r)) {}

    search_result run() {
        auto t0 = clock_type::now();
        warm_ = greedy_value();
        int split = pick_split_depth(slots_.size());

        std::vector<std::vector<char>> prefixes;
        {
            task_state s(*this);
            std::vector<char> decisions;
            enumerate_prefixes(s, 0, split, decisions, prefixes);
        }

        std::vector<task_outcome> outcomes(prefixes.size());
        parallelism ctx{opt_.workers};
        parallel_for(prefixes.size(), ctx, [&](std::size_t i) {
            task_state s(*this);
            for (std::size_t pos = 0; pos < prefixes[i].size(); ++pos)
                s.apply(pos, prefixes[i][pos] != 0);
            s.best = warm_;
            dfs(s, prefixes[i].size(), outcomes[i]);
            outcomes[i].nodes = s.nodes;
        });

        search_result res;
        res.value = warm_;
        for (const auto& oc : outcomes) res.value = std::max(res.value, oc.value);
        res.nodes_explored = prefix_nodes_;
        std::vector<std::vector<hypergraph>> raw(outcomes.size());
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            res.nodes_explored += outcomes[i].nodes;
            if (outcomes[i].value == res.value) raw[i] = outcomes[i].raw_witnesses;
        }
        res.witnesses = finish_witnesses(
            raw, opt_.witness_cap, [&](const hypergraph& h) { return canonical_code(h); },
            [&](const std::string& code) { return emit_text(decode_canonical_code(code)); });
        res.exhaustive = true;
        for (const auto& text : res.witnesses) {
            hypergraph h = parse_hypergraph(text);
            require(h.edge_count() == res.value, errc::internal_invariant,
                    "witness does not attain the value");
            require(!contains_berge(h, f_), errc::internal_invariant,
                    "witness fails the freeness re-check");
            require(!linear_only_ || is_linear(h), errc::internal_invariant,
                    "witness fails the linearity re-check");
        }
        res.wall_seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
        return res;
    }

private:
    struct task_state {
        hypergraph chosen, rejected;
        graph shadow;
        std::vector<int> pair_cover; // flattened n*n cover counts
        long long best = 0;
        long long nodes = 0;
        const berge_dfs_search& owner;

        explicit task_state(const berge_dfs_search& o)
            : chosen(o.r_, o.n_), rejected(o.r_, o.n_), shadow(o.n_),
              pair_cover(static_cast<std::size_t>(o.n_) * static_cast<std::size_t>(o.n_), 0),
              owner(o) {}

        void cover(const std::vector<int>& t, int delta) {
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = i + 1; j < t.size(); ++j) {
                    auto slot = static_cast<std::size_t>(t[i]) * static_cast<std::size_t>(owner.n_) +
                                static_cast<std::size_t>(t[j]);
                    int& c = pair_cover[slot];
                    if (delta > 0) {
                        if (c == 0) shadow.add_edge(t[i], t[j]);
                        ++c;
                    } else {
                        --c;
                        if (c == 0) shadow.remove_edge(t[i], t[j]);
                    }
                }
        }

        bool linear_ok(const std::vector<int>& t) const {
            std::uint64_t mask = 0;
            for (int v : t) mask |= std::uint64_t{1} << v;
            for (int e = 0; e < chosen.edge_count(); ++e)
                if (std::popcount(chosen.edge_mask(e) & mask) > 1) return false;
            return true;
        }

        bool can_include(std::size_t pos) {
            const auto& t = owner.slots_[pos];
            if (owner.linear_only_ && !linear_ok(t)) return false;
            int id = chosen.add_edge(t);
            cover(t, +1);
            bool bad = creates_berge(chosen, owner.f_, id, &shadow);
            cover(t, -1);
            chosen.remove_last_edge();
            return !bad;
        }
        void apply(std::size_t pos, bool include) {
            const auto& t = owner.slots_[pos];
            if (include) {
                chosen.add_edge(t);
                cover(t, +1);
            } else {
                rejected.add_edge(t);
            }
        }
        void undo(std::size_t pos, bool include) {
            const auto& t = owner.slots_[pos];
            if (include) {
                cover(t, -1);
                chosen.remove_last_edge();
            } else {
                rejected.remove_last_edge();
            }
        }
    };

    struct task_outcome {
        long long value = -1;
        long long nodes = 0;
        std::vector<hypergraph> raw_witnesses;
    };

    long long greedy_value() {
        task_state s(*this);
        for (std::size_t pos = 0; pos < slots_.size(); ++pos)
            if (s.can_include(pos)) s.apply(pos, true);
        return s.chosen.edge_count();
    }

    void enumerate_prefixes(task_state& s, std::size_t pos, int split, std::vector<char>& decisions,
                            std::vector<std::vector<char>>& out) {
        ++prefix_nodes_;
        if (static_cast<int>(pos) >= split || pos == slots_.size()) {
            out.push_back(decisions);
            return;
        }
        if (s.chosen.edge_count() + static_cast<long long>(slots_.size() - pos) < warm_) return;
        if (static_cast<int>(pos) <= opt_.iso_memo_depth) {
            std::string key = std::to_string(pos) + '|' + canonical_code_two(s.chosen, s.rejected);
            if (!memo_.insert(std::move(key)).second) return;
        }
        if (s.can_include(pos)) {
            s.apply(pos, true);
            decisions.push_back(1);
            enumerate_prefixes(s, pos + 1, split, decisions, out);
            decisions.pop_back();
            s.undo(pos, true);
        }
        s.apply(pos, false);
        decisions.push_back(0);
        enumerate_prefixes(s, pos + 1, split, decisions, out);
        decisions.pop_back();
        s.undo(pos, false);
    }

    void dfs(task_state& s, std::size_t pos, task_outcome& oc) {
        ++s.nodes;
        if (pos == slots_.size()) {
            long long v = s.chosen.edge_count();
            if (v > oc.value) {
                oc.value = v;
                oc.raw_witnesses.assign(1, s.chosen);
                s.best = std::max(s.best, v);
            } else if (v == oc.value &&
                       static_cast<int>(oc.raw_witnesses.size()) < opt_.witness_cap) {
                if (std::find(oc.raw_witnesses.begin(), oc.raw_witnesses.end(), s.chosen) ==
                    oc.raw_witnesses.end())
                    oc.raw_witnesses.push_back(s.chosen);
            }
            return;
        }
        if (s.chosen.edge_count() + static_cast<long long>(slots_.size() - pos) < s.best) return;
        if (s.can_include(pos)) {
            s.apply(pos, true);
            dfs(s, pos + 1, oc);
            s.undo(pos, true);
        }
        s.apply(pos, false);
        dfs(s, pos + 1, oc);
        s.undo(pos, false);
    }

    int n_, r_;
    family_spec f_;
    bool linear_only_;
    search_options opt_;
    std::vector<std::vector<int>> slots_;
    long long warm_ = 0;
    long long prefix_nodes_ = 0;
    std::unordered_set<std::string> memo_;
};

// Isomorph-free breadth-first generation: level m holds one canonical code
// per isomorphism class of admissible m-edge hypergraphs. Freeness is
// hereditary, so extending every representative by every r-set covers level
// m+1 completely.
class berge_classes_search {
public:
    berge_classes_search(int n, int r, const family_spec& f, bool linear_only,
                         const search_options& opt)
        : n_(n), r_(r), f_(f), linear_only_(linear_only), opt_(opt), slots_(rset_slots(n, r)) {}

    search_result run() {
        auto t0 = clock_type::now();
        search_result res;
        std::vector<std::string> level{canonical_code(hypergraph(r_, n_))};
        std::vector<std::string> last = level;
        long long nodes = 0;
        int edges = 0;
        parallelism ctx{opt_.workers};
        while (!level.empty()) {
            int workers = std::max(1, opt_.workers);
            std::vector<std::set<std::string>> locals(static_cast<std::size_t>(workers));
            std::vector<long long> local_nodes(static_cast<std::size_t>(workers), 0);
            std::size_t chunk = (level.size() + static_cast<std::size_t>(workers) - 1) /
                                static_cast<std::size_t>(workers);
            parallel_for(static_cast<std::size_t>(workers), ctx, [&](std::size_t w) {
                std::size_t lo = w * chunk;
                std::size_t hi = std::min(level.size(), lo + chunk);
                for (std::size_t i = lo; i < hi; ++i)
                    extend(level[i], locals[w], local_nodes[w]);
            });
            std::set<std::string> merged;
            for (int w = 0; w < workers; ++w) {
                nodes += local_nodes[static_cast<std::size_t>(w)];
                merged.merge(locals[static_cast<std::size_t>(w)]);
            }
            if (merged.empty()) break;
            ++edges;
            level.assign(merged.begin(), merged.end());
            last = level;
        }
        res.value = edges;
        res.nodes_explored = nodes;
        res.exhaustive = true;
        for (std::size_t i = 0; i < last.size() && static_cast<int>(i) < opt_.witness_cap; ++i) {
            hypergraph h = decode_canonical_code(last[i]);
            require(h.edge_count() == res.value, errc::internal_invariant,
                    "witness does not attain the value");
            require(!contains_berge(h, f_), errc::internal_invariant,
                    "witness fails the freeness re-check");
            require(!linear_only_ || is_linear(h), errc::internal_invariant,
                    "witness fails the linearity re-check");
            res.witnesses.push_back(emit_text(h));
        }
        res.wall_seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
        return res;
    }

private:
    void extend(const std::string& code, std::set<std::string>& sink, long long& nodes) {
        hypergraph rep = decode_canonical_code(code);
        graph rep_shadow = rep.shadow();
        for (const auto& t : slots_) {
            if (rep.contains_edge(t)) continue;
            ++nodes;
            if (linear_only_) {
                std::uint64_t mask = 0;
                for (int v : t) mask |= std::uint64_t{1} << v;
                bool ok = true;
                for (int e = 0; e < rep.edge_count() && ok; ++e)
                    if (std::popcount(rep.edge_mask(e) & mask) > 1) ok = false;
                if (!ok) continue;
            }
            hypergraph cand = rep;
            int id = cand.add_edge(t);
            graph shadow = rep_shadow;
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = i + 1; j < t.size(); ++j)
                    if (!shadow.has_edge(t[i], t[j])) shadow.add_edge(t[i], t[j]);
            if (creates_berge(cand, f_, id, &shadow)) continue;
            sink.insert(canonical_code(cand));
        }
    }

    int n_, r_;
    family_spec f_;
    bool linear_only_;
    search_options opt_;
    std::vector<std::vector<int>> slots_;
};

void check_cap(bool ok, const std::string& what) { require(ok, errc::size_limit, what); }

} // namespace

search_result exact_ex_graph(int n, const family_spec& f, const search_options& opt) {
    check_cap(n >= 0 && n <= 10, "exact_ex_graph capped at n = 10");
    return graph_search(n, f, 0, opt).run();
}

search_result exact_generalized_ex(int n, int r, const family_spec& f,
                                   const search_options& opt) {
    check_cap(n >= 0 && n <= 9, "exact_generalized_ex capped at n = 9");
    require(r >= 1, errc::invalid_parameter, "clique size must be at least 1");
    return graph_search(n, f, r, opt).run();
}

search_result exact_ex_berge(int n, int r, const family_spec& f, bool linear_only,
                             const search_options& opt) {
    check_cap(r == 3 || r == 4, "exact_ex_berge supports r = 3 and r = 4");
    check_cap(r != 3 || n <= 8, "exact_ex_berge capped at n = 8 for r = 3");
    check_cap(r != 4 || n <= 7, "exact_ex_berge capped at n = 7 for r = 4");
    require(n >= 0, errc::invalid_parameter, "negative vertex count");
    auto engine = opt.engine;
    if (engine == search_options::engine_kind::automatic)
        engine = n >= 7 ? search_options::engine_kind::classes : search_options::engine_kind::dfs;
    if (engine == search_options::engine_kind::classes)
        return berge_classes_search(n, r, f, linear_only, opt).run();
    return berge_dfs_search(n, r, f, linear_only, opt).run();
}

hypergraph random_maximal_berge_free(int n, int r, const family_spec& f, std::uint64_t seed) {
    check_cap(r == 3 || r == 4, "generator supports r = 3 and r = 4");
    check_cap(r != 3 || n <= 8, "generator capped at n = 8 for r = 3");
    check_cap(r != 4 || n <= 7, "generator capped at n = 7 for r = 4");
    auto slots = rset_slots(n, r);
    rng rand(seed);
    rand.shuffle(slots);
    hypergraph h(r, n);
    graph shadow(n);
    std::vector<int> cover(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto cover_add = [&](const std::vector<int>& t) {
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                auto slot = static_cast<std::size_t>(t[i]) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(t[j]);
                if (cover[slot]++ == 0) shadow.add_edge(t[i], t[j]);
            }
    };
    auto cover_remove = [&](const std::vector<int>& t) {
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                auto slot = static_cast<std::size_t>(t[i]) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(t[j]);
                if (--cover[slot] == 0) shadow.remove_edge(t[i], t[j]);
            }
    };
    for (const auto& t : slots) {
        int id = h.add_edge(t);
        cover_add(t);
        if (creates_berge(h, f, id, &shadow)) {
            cover_remove(t);
            h.remove_last_edge();
        }
    }
    // maximality audit: every absent r-set must close a Berge copy
    for (const auto& t : rset_slots(n, r)) {
        if (h.contains_edge(t)) continue;
        int id = h.add_edge(t);
        cover_add(t);
        bool creates = creates_berge(h, f, id, &shadow);
        cover_remove(t);
        h.remove_last_edge();
        require(creates, errc::internal_invariant, "generator output is not maximal");
    }
    return h;
}

} // namespace berge
