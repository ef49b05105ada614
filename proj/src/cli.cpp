#include "berge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "berge/bounds.hpp"
#include "berge/canonical.hpp"
#include "berge/core.hpp"
#include "berge/detect.hpp"
#include "berge/matching.hpp"
#include "berge/reduction.hpp"
#include "berge/report.hpp"
#include "berge/rng.hpp"
#include "berge/search.hpp"
#include "berge/symmetrize.hpp"
#include "berge/verify.hpp"
#include "berge/version.hpp"

namespace berge {

namespace {

struct run_config {
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = default_seed;
    int threads = 0; // 0: resolve from env, default 1
    std::string command;
    std::vector<std::pair<std::string, std::string>> echo_params;

    int resolved_threads() const {
        if (threads > 0) return threads;
        if (const char* env = std::getenv("BERGE_THREADS")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 1;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string config_echo_lines(const run_config& cfg) {
    std::ostringstream out;
    out << "# " << version_string << "\n";
    out << "# command: " << cfg.command << "\n";
    for (const auto& [k, v] : cfg.echo_params) out << "# " << k << ": " << v << "\n";
    out << "# seed: " << cfg.seed << "\n";
    return out.str();
}

void write_report(const run_config& cfg, const std::vector<record>& records, std::ostream& out) {
    report_format fmt = parse_format(cfg.format);
    std::string body;
    if (fmt == report_format::json) {
        nlohmann::ordered_json doc;
        doc["config"]["version"] = version_string;
        doc["config"]["command"] = cfg.command;
        for (const auto& [k, v] : cfg.echo_params) doc["config"][k] = v;
        doc["config"]["seed"] = cfg.seed;
        doc["records"] = nlohmann::ordered_json::parse(emit_records(records, fmt));
        body = doc.dump(2) + "\n";
    } else {
        body = config_echo_lines(cfg) + emit_records(records, fmt);
    }
    if (cfg.out_path.empty()) {
        out << body;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        require(f.good(), errc::io_error, "cannot write " + cfg.out_path);
        f << body;
        require(f.good(), errc::io_error, "write failed for " + cfg.out_path);
    }
}

std::vector<int> parse_range(const std::string& token) {
    // "7" | "2..5" | "10..200:10"
    std::vector<int> out;
    auto dots = token.find("..");
    if (dots == std::string::npos) {
        out.push_back(std::stoi(token));
        return out;
    }
    int lo = std::stoi(token.substr(0, dots));
    std::string rest = token.substr(dots + 2);
    int step = 1;
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
        step = std::stoi(rest.substr(colon + 1));
        rest = rest.substr(0, colon);
    }
    int hi = std::stoi(rest);
    require(step >= 1 && lo <= hi, errc::invalid_parameter, "bad range: " + token);
    for (int v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

std::string one_line(const std::string& multi) {
    std::string out;
    for (char c : multi) {
        if (c == '\n') {
            if (!out.empty() && out.back() != ';') out += "; ";
        } else {
            out += c;
        }
    }
    while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
    return out;
}

std::string join_components(const bound_report& rep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < rep.components.size(); ++i) {
        if (i) out << "; ";
        out << rep.components[i].first << " = " << format_double(rep.components[i].second);
    }
    return out.str();
}

std::string join_strings(const std::vector<std::string>& items) {
    std::ostringstream out;
    for (std::size_t i = 0; i < items.size(); ++i) out << (i ? "; " : "") << items[i];
    return out.str();
}

// ---------------------------------------------------------------- commands

int cmd_detect(const run_config& cfg, const std::string& input, const std::string& family,
               bool force_berge, std::ostream& out) {
    family_spec f = family_spec::parse(family);
    std::string text = read_file(input);
    std::vector<record> records;
    record rec;
    if (peek_kind(text) == object_kind::hypergraph) {
        hypergraph h = parse_hypergraph(text);
        auto w = contains_berge(h, f);
        rec.add("object", "hypergraph");
        rec.add("test", "berge-" + f.name());
        rec.add("found", w.has_value());
        std::ostringstream ww;
        if (w) {
            ww << "core:";
            for (int v : w->core_map) ww << ' ' << v;
            ww << " hyperedges:";
            for (int e : w->assignment) ww << ' ' << e;
        }
        rec.add("witness", ww.str());
    } else {
        require(!force_berge, errc::invalid_parameter, "--berge needs a hypergraph input");
        graph g = peek_kind(text) == object_kind::red_blue ? parse_red_blue(text).underlying()
                                                           : parse_graph(text);
        auto emb = contains_subgraph(g, f);
        rec.add("object", "graph");
        rec.add("test", "subgraph-" + f.name());
        rec.add("found", emb.has_value());
        std::ostringstream ww;
        if (emb) {
            ww << "vertices:";
            for (int v : *emb) ww << ' ' << v;
        }
        rec.add("witness", ww.str());
    }
    records.push_back(rec);
    write_report(cfg, records, out);
    return 0;
}

int cmd_reduce(const run_config& cfg, const std::string& input, const std::string& family,
               const std::string& emit_rbg, std::ostream& out) {
    family_spec f = family_spec::parse(family);
    hypergraph h = parse_hypergraph(read_file(input));
    reduction_certificate cert = red_blue_reduce(h, f);
    record rec;
    rec.add("family", f.name());
    rec.add("n", h.vertex_count());
    rec.add("hyperedges", h.edge_count());
    rec.add("linear_part", cert.split.h1.edge_count());
    rec.add("remainder", cert.split.h2.edge_count());
    rec.add("a1", static_cast<long long>(cert.partition.a1.size()));
    rec.add("a2", static_cast<long long>(cert.partition.a2.size()));
    rec.add("b1", static_cast<long long>(cert.partition.b1.size()));
    rec.add("b2", static_cast<long long>(cert.partition.b2.size()));
    rec.add("red_edges", cert.rbg.red_edge_count());
    rec.add("blue_edges", cert.rbg.edge_count() - cert.rbg.red_edge_count());
    rec.add("g_r", cert.g_r);
    rec.add("matching_rotations", cert.partition.rotations);
    rec.add("p3_complete", cert.partition.p3_complete);
    rec.add("remainder_le_g_r", cert.split.h2.edge_count() <= cert.g_r);
    std::vector<record> records{rec};
    write_report(cfg, records, out);
    if (!emit_rbg.empty()) {
        std::ofstream fout(emit_rbg, std::ios::binary);
        require(fout.good(), errc::io_error, "cannot write " + emit_rbg);
        fout << emit_text(cert.rbg);
    }
    return 0;
}

bipartite_incidence parse_bipartite_text(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    std::vector<std::string> toks;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) toks.push_back(tok);
    }
    require(toks.size() >= 4 && toks[0] == "bipartite", errc::parse_error,
            "expected 'bipartite <|A|> <|B|> <m>' header");
    int a = std::stoi(toks[1]);
    int b = std::stoi(toks[2]);
    int m = std::stoi(toks[3]);
    require(static_cast<int>(toks.size()) == 4 + 2 * m, errc::parse_error,
            "bipartite body does not match edge count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        edges.emplace_back(std::stoi(toks[static_cast<std::size_t>(4 + 2 * i)]),
                           std::stoi(toks[static_cast<std::size_t>(5 + 2 * i)]));
    return bipartite_incidence::from_edges(a, b, edges);
}

int cmd_partition(const run_config& cfg, const std::string& input, std::ostream& out) {
    std::string text = read_file(input);
    bipartite_incidence g;
    if (text.find("bipartite") != std::string::npos &&
        text.find("hypergraph") == std::string::npos) {
        g = parse_bipartite_text(text);
    } else {
        g = build_incidence(parse_hypergraph(text));
    }
    matching m = maximum_matching(g);
    cel2_partition part = cel2_partition_of(g, m);
    record rec;
    rec.add("a_side", g.a_size);
    rec.add("b_side", g.b_size);
    rec.add("matching", m.size());
    rec.add("a1", static_cast<long long>(part.a1.size()));
    rec.add("a2", static_cast<long long>(part.a2.size()));
    rec.add("b1", static_cast<long long>(part.b1.size()));
    rec.add("b2", static_cast<long long>(part.b2.size()));
    rec.add("b_prime", static_cast<long long>(part.b_prime.size()));
    rec.add("rotations", part.rotations);
    std::vector<record> records{rec};
    write_report(cfg, records, out);
    return 0;
}

int cmd_search(const run_config& cfg, const std::string& what, int n, int r,
               const std::string& family, bool linear, const std::string& engine, int witnesses,
               std::ostream& out, std::ostream& err) {
    family_spec f = family_spec::parse(family);
    search_options opt;
    opt.workers = cfg.resolved_threads();
    opt.witness_cap = witnesses;
    if (engine == "dfs") opt.engine = search_options::engine_kind::dfs;
    else if (engine == "classes") opt.engine = search_options::engine_kind::classes;
    else require(engine == "auto", errc::invalid_parameter, "engine must be auto|dfs|classes");

    search_result res;
    std::string quantity;
    if (what == "ex") {
        res = exact_ex_graph(n, f, opt);
        quantity = "ex(" + std::to_string(n) + "," + f.name() + ")";
    } else if (what == "gen") {
        res = exact_generalized_ex(n, r, f, opt);
        quantity = "ex(" + std::to_string(n) + ",K" + std::to_string(r) + "," + f.name() + ")";
    } else if (what == "berge") {
        res = exact_ex_berge(n, r, f, linear, opt);
        quantity = std::string("ex_") + std::to_string(r) + (linear ? "^lin" : "") + "(" +
                   std::to_string(n) + ",Berge-" + f.name() + ")";
    } else {
        fail(errc::invalid_parameter, "--what must be ex|gen|berge");
    }
    record rec;
    rec.add("quantity", quantity);
    rec.add("value", res.value);
    rec.add("nodes_explored", res.nodes_explored);
    rec.add("exhaustive", res.exhaustive);
    rec.add("witnesses", static_cast<long long>(res.witnesses.size()));
    for (std::size_t i = 0; i < res.witnesses.size(); ++i)
        rec.add("witness_" + std::to_string(i), one_line(res.witnesses[i]));
    std::vector<record> records{rec};
    write_report(cfg, records, out);
    err << "# wall: " << format_double(res.wall_seconds) << "s\n";
    return 0;
}

int cmd_bounds(const run_config& cfg, const std::string& ks, const std::string& ns,
               const std::string& source, double log_base, const std::string& cited,
               std::ostream& out) {
    bound_source src = source == "exact" ? bound_source::exact : bound_source::formula;
    require(source == "exact" || source == "formula", errc::invalid_parameter,
            "--source must be exact|formula");
    std::vector<int> k_values = parse_range(ks);
    std::vector<int> n_values = parse_range(ns);
    search_options opt;
    opt.workers = cfg.resolved_threads();
    std::vector<record> records;
    if (!cited.empty()) {
        for (int k : k_values) {
            for (int n : n_values) {
                cited_params p;
                p.n = n;
                p.k = k;
                p.r = 3;
                p.log_base = log_base;
                p.source = src;
                p.search = opt;
                bound_report rep = cited_bound(cited, p);
                record rec;
                rec.add("name", rep.name);
                rec.add("k", k);
                rec.add("n", n);
                rec.add("value", rep.value);
                rec.add("components", join_components(rep));
                rec.add("assumptions", join_strings(rep.assumptions));
                records.push_back(rec);
            }
        }
    } else {
        for (int k : k_values) {
            auto rows = bound_dashboard(n_values, k, src, log_base, opt);
            for (const auto& row : rows) {
                record rec;
                rec.add("k", k);
                rec.add("n", row.n);
                rec.add("theorem2", row.theorem2.value);
                rec.add("furedi_ozkahya_odd", row.furedi_ozkahya_odd.value);
                rec.add("improved", row.improved);
                rec.add("exact_berge",
                        row.exact_berge ? std::to_string(*row.exact_berge) : std::string("n/a"));
                rec.add("theorem2_components", join_components(row.theorem2));
                rec.add("fo_components", join_components(row.furedi_ozkahya_odd));
                rec.add("assumptions", join_strings(row.theorem2.assumptions));
                records.push_back(rec);
            }
        }
    }
    write_report(cfg, records, out);
    return 0;
}

int cmd_symmetrize(const run_config& cfg, const std::string& input, int k, int r, bool trace,
                   std::ostream& out) {
    red_blue_graph rbg = parse_red_blue(read_file(input));
    symmetrize_result sr = symmetrize_to_optimum(rbg, k, r);
    std::vector<record> records;
    if (trace) {
        for (std::size_t i = 0; i < sr.steps.size(); ++i) {
            record rec;
            rec.add("step", static_cast<long long>(i + 1));
            rec.add("u", sr.steps[i].u);
            rec.add("v", sr.steps[i].v);
            rec.add("relation", std::string(1, sr.steps[i].relation));
            rec.add("g_r_after", sr.steps[i].g_r_after);
            records.push_back(rec);
        }
    }
    record rec;
    rec.add("step", static_cast<long long>(0));
    rec.add("u", -1);
    rec.add("v", -1);
    rec.add("relation", "summary");
    rec.add("g_r_after", g_r_value(sr.final, r));
    if (trace) {
        records.push_back(rec);
    } else {
        record summary;
        summary.add("initial_g_r", sr.initial_g_r);
        summary.add("final_g_r", g_r_value(sr.final, r));
        summary.add("steps", static_cast<long long>(sr.steps.size()));
        summary.add("converged", sr.converged);
        summary.add("final_graph", one_line(emit_text(sr.final)));
        records.push_back(summary);
    }
    write_report(cfg, records, out);
    return 0;
}

int cmd_retention(const run_config& cfg, const std::string& input, int n,
                  const std::string& family, const std::string& mode_name, long long trials,
                  bool per_hyperedge, std::ostream& out) {
    family_spec f = family_spec::parse(family);
    require(mode_name == "independent" || mode_name == "paired", errc::invalid_parameter,
            "--mode must be independent|paired");
    halving_mode mode =
        mode_name == "independent" ? halving_mode::independent : halving_mode::paired;
    hypergraph h;
    if (!input.empty()) {
        h = parse_hypergraph(read_file(input));
    } else {
        int use_n = n;
        if (mode == halving_mode::paired && use_n % 2 == 1) ++use_n; // odd n: add a dummy vertex
        h = random_maximal_berge_free(use_n, 3, f, cfg.seed);
    }
    reduction_certificate cert = red_blue_reduce(h, f);
    parallelism ctx{cfg.resolved_threads()};
    retention_report rep = retention_statistics(cert, mode, trials, cfg.seed, ctx);
    std::vector<record> records;
    for (const auto& [c, bucket] : rep.aggregate) {
        record rec;
        rec.add("scope", "aggregate");
        rec.add("hyperedge", -1);
        rec.add("case", retention_case_name(c));
        rec.add("trials", bucket.trials);
        rec.add("kept", bucket.kept);
        rec.add("frequency", bucket.frequency());
        records.push_back(rec);
    }
    if (per_hyperedge) {
        for (std::size_t a = 0; a < rep.per_hyperedge.size(); ++a) {
            for (const auto& [c, bucket] : rep.per_hyperedge[a]) {
                record rec;
                rec.add("scope", "hyperedge");
                rec.add("hyperedge", static_cast<long long>(a));
                rec.add("case", retention_case_name(c));
                rec.add("trials", bucket.trials);
                rec.add("kept", bucket.kept);
                rec.add("frequency", bucket.frequency());
                records.push_back(rec);
            }
        }
    }
    write_report(cfg, records, out);
    return 0;
}

int cmd_verify(const run_config& cfg, const std::string& suite, long long trials,
               std::ostream& out) {
    suite_params params;
    params.seed = cfg.seed;
    params.trials = trials;
    params.ctx.workers = cfg.resolved_threads();
    suite_result res = run_suite(suite, params);
    out << config_echo_lines(cfg);
    for (const auto& line : res.details) out << "# " << line << "\n";
    out << "suite " << res.name << ": " << (res.pass ? "PASS" : "FAIL")
        << " (checks=" << res.checks << ", violations=" << res.violations << ", "
        << format_double(res.seconds) << "s)\n";
    return res.pass ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::vector<char>> storage;
    std::vector<char*> argv;
    for (const auto& a : args) {
        storage.emplace_back(a.begin(), a.end());
        storage.back().push_back('\0');
        argv.push_back(storage.back().data());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{std::string(version_string) +
                 " - Berge hypergraph reductions, searches and bounds"};
    app.require_subcommand(1);

    run_config cfg;
    app.add_option("--seed", cfg.seed, "random seed (fixed default, never wall clock)");
    app.add_option("--format", cfg.format, "report format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", cfg.out_path, "write the report to a file");
    app.add_option("--threads", cfg.threads, "worker threads (overrides BERGE_THREADS)");

    // detect
    auto* detect = app.add_subcommand("detect", "subgraph / Berge containment tests");
    std::string d_input, d_family;
    bool d_berge = false;
    detect->add_option("--input", d_input, "graph or hypergraph file")->required();
    detect->add_option("--family", d_family, "pattern, e.g. C5, P4, K3")->required();
    detect->add_flag("--berge", d_berge, "require a Berge test (hypergraph input)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "red-blue reduction certificate");
    std::string r_input, r_family, r_emit;
    reduce->add_option("--input", r_input, "hypergraph file")->required();
    reduce->add_option("--family", r_family, "forbidden Berge pattern")->required();
    reduce->add_option("--emit-rbg", r_emit, "write the red-blue graph to a file");

    // partition
    auto* partition = app.add_subcommand("partition", "maximum matching partition");
    std::string p_input;
    partition->add_option("--input", p_input, "bipartite or hypergraph file")->required();

    // search
    auto* search = app.add_subcommand("search", "exact extremal values");
    std::string s_what = "ex", s_family, s_engine = "auto";
    int s_n = 0, s_r = 3, s_witnesses = 4;
    bool s_linear = false;
    search->add_option("--what", s_what, "ex|gen|berge")->required();
    search->add_option("--n", s_n, "vertex count")->required();
    search->add_option("--r", s_r, "uniformity / clique size");
    search->add_option("--family", s_family, "forbidden pattern")->required();
    search->add_flag("--linear", s_linear, "restrict to linear hypergraphs");
    search->add_option("--engine", s_engine, "auto|dfs|classes");
    search->add_option("--witnesses", s_witnesses, "extremal witnesses to keep");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "bound dashboard and cited formulas");
    std::string b_k = "2", b_n = "10..100:10", b_source = "formula", b_cited;
    double b_log_base = 0.0;
    bounds->add_option("--k", b_k, "k or range a..b");
    bounds->add_option("--n-range,--n", b_n, "n or range a..b[:step]");
    bounds->add_option("--source", b_source, "exact|formula");
    bounds->add_option("--log-base", b_log_base, "log base (default natural)");
    bounds->add_option("--cited", b_cited, "evaluate one cited bound by name");

    // symmetrize
    auto* symmetrize = app.add_subcommand("symmetrize", "g_r symmetrization to the fixpoint");
    std::string y_input;
    int y_k = 5, y_r = 3;
    bool y_trace = false;
    symmetrize->add_option("--input", y_input, "red-blue graph file")->required();
    symmetrize->add_option("--k", y_k, "forbidden clique size");
    symmetrize->add_option("--r", y_r, "clique size in g_r");
    symmetrize->add_flag("--trace", y_trace, "emit one record per step");

    // retention
    auto* retention = app.add_subcommand("retention", "Monte Carlo survivor statistics");
    std::string t_input, t_family = "C5", t_mode = "independent";
    int t_n = 8;
    long long t_trials = 10000;
    bool t_per_hyperedge = false;
    retention->add_option("--input", t_input, "hypergraph file (else generated)");
    retention->add_option("--n", t_n, "vertex count for the generated instance");
    retention->add_option("--family", t_family, "forbidden Berge pattern");
    retention->add_option("--mode", t_mode, "independent|paired");
    retention->add_option("--trials", t_trials, "Monte Carlo trials");
    retention->add_flag("--per-hyperedge", t_per_hyperedge, "emit per-hyperedge rows");

    // verify
    auto* verify = app.add_subcommand("verify", "run a named acceptance suite");
    std::string v_suite;
    long long v_trials = 0;
    verify->add_option("--suite", v_suite, "suite name")->required();
    verify->add_option("--trials", v_trials, "override the suite's trial count");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return 2;
    }

    auto params_echo = [&](std::initializer_list<std::pair<std::string, std::string>> kv) {
        for (auto& [k, v] : kv) cfg.echo_params.emplace_back(k, v);
    };

    try {
        if (app.got_subcommand(detect)) {
            cfg.command = "detect";
            params_echo({{"input", d_input}, {"family", d_family}});
            return cmd_detect(cfg, d_input, d_family, d_berge, out);
        }
        if (app.got_subcommand(reduce)) {
            cfg.command = "reduce";
            params_echo({{"input", r_input}, {"family", r_family}});
            return cmd_reduce(cfg, r_input, r_family, r_emit, out);
        }
        if (app.got_subcommand(partition)) {
            cfg.command = "partition";
            params_echo({{"input", p_input}});
            return cmd_partition(cfg, p_input, out);
        }
        if (app.got_subcommand(search)) {
            cfg.command = "search";
            params_echo({{"what", s_what},
                         {"n", std::to_string(s_n)},
                         {"r", std::to_string(s_r)},
                         {"family", s_family},
                         {"linear", s_linear ? "true" : "false"},
                         {"engine", s_engine}});
            return cmd_search(cfg, s_what, s_n, s_r, s_family, s_linear, s_engine, s_witnesses,
                              out, err);
        }
        if (app.got_subcommand(bounds)) {
            cfg.command = "bounds";
            params_echo({{"k", b_k}, {"n", b_n}, {"source", b_source}});
            if (!b_cited.empty()) params_echo({{"cited", b_cited}});
            return cmd_bounds(cfg, b_k, b_n, b_source, b_log_base, b_cited, out);
        }
        if (app.got_subcommand(symmetrize)) {
            cfg.command = "symmetrize";
            params_echo({{"input", y_input},
                         {"k", std::to_string(y_k)},
                         {"r", std::to_string(y_r)}});
            return cmd_symmetrize(cfg, y_input, y_k, y_r, y_trace, out);
        }
        if (app.got_subcommand(retention)) {
            cfg.command = "retention";
            params_echo({{"family", t_family},
                         {"mode", t_mode},
                         {"trials", std::to_string(t_trials)}});
            if (!t_input.empty()) params_echo({{"input", t_input}});
            else params_echo({{"n", std::to_string(t_n)}});
            return cmd_retention(cfg, t_input, t_n, t_family, t_mode, t_trials, t_per_hyperedge,
                                 out);
        }
        if (app.got_subcommand(verify)) {
            cfg.command = "verify";
            params_echo({{"suite", v_suite}});
            if (v_trials > 0) params_echo({{"trials", std::to_string(v_trials)}});
            return cmd_verify(cfg, v_suite, v_trials, out);
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == errc::invalid_parameter || e.code() == errc::parse_error ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace berge
