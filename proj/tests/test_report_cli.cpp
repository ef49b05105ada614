#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "berge/cli.hpp"
#include "berge/core.hpp"
#include "berge/report.hpp"

using namespace berge;

namespace {

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    std::vector<std::string> argv = {"berge"};
    argv.insert(argv.end(), args.begin(), args.end());
    int rc = run_cli(argv, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/berge_test_" + name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

} // namespace

TEST_CASE("csv emission") {
    record a;
    a.add("name", "x");
    a.add("value", 3LL);
    record b;
    b.add("name", "comma, quoted \"q\"");
    b.add("value", 4LL);
    std::string csv = emit_records({a, b}, report_format::csv);
    CHECK(csv == "name,value\r\nx,3\r\n\"comma, quoted \"\"q\"\"\",4\r\n");

    std::string empty = emit_records({}, report_format::csv, {"name", "value"});
    CHECK(empty == "name,value\r\n"); // header-only
}

TEST_CASE("json round trip") {
    record a;
    a.add("name", "x");
    a.add("count", 3LL);
    a.add("ratio", 0.5);
    a.add("flag", true);
    record b;
    b.add("name", "y");
    b.add("count", -1LL);
    b.add("ratio", 2.25);
    b.add("flag", false);
    std::vector<record> recs = {a, b};
    auto back = parse_records_json(emit_records(recs, report_format::json));
    REQUIRE(back.size() == 2);
    CHECK(back[0].fields == recs[0].fields);
    CHECK(back[1].fields == recs[1].fields);
}

TEST_CASE("text emission aligns columns") {
    record a;
    a.add("k", 2LL);
    a.add("value", std::string("short"));
    std::string text = emit_records({a}, report_format::text);
    CHECK(text.find("k") != std::string::npos);
    CHECK(text.find("short") != std::string::npos);
}

TEST_CASE("cli search matches the worked example") {
    std::string out;
    int rc = cli({"--format", "json", "search", "--what", "berge", "--n", "4", "--r", "3",
                  "--family", "K3"},
                 &out);
    CHECK(rc == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["config"]["seed"] == 1729);
    CHECK(doc["records"][0]["value"] == 2);
    CHECK(doc["records"][0]["exhaustive"] == true);
}

TEST_CASE("cli bounds exact source composition") {
    std::string out;
    int rc = cli({"--format", "json", "bounds", "--k", "2", "--n-range", "8", "--source",
                  "exact"},
                 &out);
    CHECK(rc == 0);
    auto doc = nlohmann::json::parse(out);
    auto rec = doc["records"][0];
    CHECK(rec["n"] == 8);
    double t2 = rec["theorem2"].get<double>();
    CHECK(t2 > 16.0 / 3.0 * 4.0 - 1e-9); // at least the even-cycle term
    std::string comps = rec["theorem2_components"].get<std::string>();
    CHECK(comps.find("ex_3^lin") != std::string::npos);
}

TEST_CASE("cli detect and reduce work from files") {
    std::string gpath = write_temp("k4.graph", emit_text(graph::complete(4)));
    std::string out;
    int rc = cli({"--format", "json", "detect", "--input", gpath, "--family", "C4"}, &out);
    CHECK(rc == 0);
    CHECK(nlohmann::json::parse(out)["records"][0]["found"] == true);

    hypergraph h(3, 4);
    h.add_edge({0, 1, 2});
    h.add_edge({0, 1, 3});
    std::string hpath = write_temp("h2.hypergraph", emit_text(h));
    rc = cli({"--format", "json", "reduce", "--input", hpath, "--family", "C5"}, &out);
    CHECK(rc == 0);
    auto rec = nlohmann::json::parse(out)["records"][0];
    CHECK(rec["remainder_le_g_r"] == true);
    CHECK(rec["hyperedges"] == 2);
}

TEST_CASE("cli partition accepts bipartite and hypergraph inputs") {
    std::string bpath = write_temp("g.bip", "bipartite 2 2 3\n0 0\n0 1\n1 0\n");
    std::string out;
    int rc = cli({"--format", "json", "partition", "--input", bpath}, &out);
    CHECK(rc == 0);
    auto rec = nlohmann::json::parse(out)["records"][0];
    CHECK(rec["matching"] == 2);

    hypergraph h(3, 5);
    h.add_edge({0, 1, 2});
    h.add_edge({0, 1, 3});
    h.add_edge({0, 1, 4});
    std::string hpath = write_temp("g.hyper", emit_text(h));
    rc = cli({"--format", "json", "partition", "--input", hpath}, &out);
    CHECK(rc == 0);
}

TEST_CASE("cli exit codes") {
    std::string out, err;
    CHECK(cli({"frobnicate"}, &out, &err) == 2);
    CHECK(cli({"search", "--what", "nope", "--n", "4", "--family", "K3"}, &out, &err) == 2);
    CHECK(cli({"detect", "--input", "/nonexistent/x", "--family", "C4"}, &out, &err) == 1);
    CHECK(cli({"search", "--what", "berge", "--n", "4", "--r", "3", "--family", "K3", "--out",
               "/nonexistent-dir/report.json"},
              &out, &err) == 1);
}

TEST_CASE("cli reports are byte identical across runs and thread counts") {
    std::string a, b, c;
    std::vector<std::string> args = {"--format", "csv", "search", "--what", "berge",
                                     "--n",      "5",   "--r",    "3",      "--family", "C4"};
    CHECK(cli(args, &a) == 0);
    CHECK(cli(args, &b) == 0);
    auto with_threads = args;
    with_threads.insert(with_threads.begin(), {"--threads", "2"});
    CHECK(cli(with_threads, &c) == 0);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("cli verify runs a quick suite") {
    std::string out;
    int rc = cli({"verify", "--suite", "threshold"}, &out);
    CHECK(rc == 0);
    CHECK(out.find("PASS") != std::string::npos);
    CHECK(cli({"verify", "--suite", "nonsense"}, &out) == 2);
}

TEST_CASE("cli retention emits aggregate rows") {
    std::string out;
    int rc = cli({"--format", "json", "retention", "--n", "6", "--family", "C5", "--mode",
                  "paired", "--trials", "400"},
                 &out);
    CHECK(rc == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["records"].size() >= 1);
    for (const auto& rec : doc["records"]) {
        if (rec["case"] == "own-pair-matched") CHECK(rec["kept"] == 0);
    }
}

TEST_CASE("cli symmetrize") {
    red_blue_graph g(4);
    g.add_edge(0, 1, edge_color::blue);
    g.add_edge(2, 3, edge_color::blue);
    std::string path = write_temp("rb.graph", emit_text(g));
    std::string out;
    int rc = cli({"--format", "json", "symmetrize", "--input", path, "--k", "5", "--r", "3"},
                 &out);
    CHECK(rc == 0);
    auto rec = nlohmann::json::parse(out)["records"][0];
    CHECK(rec["converged"] == true);
    CHECK(rec["final_g_r"].get<long long>() >= rec["initial_g_r"].get<long long>());
}
