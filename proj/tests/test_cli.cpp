#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "turanwheel/cli.hpp"
#include "turanwheel/graph.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    const int code = tw::cli::run(std::move(args), out, err, in);
    return {code, out.str(), err.str()};
}

json first_json(const std::string& text) { return json::parse(text); }

} // namespace

TEST_CASE("construct turan emits graph6 plus sidecar") {
    const auto res = run({"construct", "turan", "--n", "11", "--r", "4", "--json", "-"});
    CHECK(res.code == 0);
    std::istringstream lines(res.out);
    std::string g6;
    std::getline(lines, g6);
    const tw::Graph g = tw::decode_graph6(g6);
    CHECK(g.order() == 11);
    CHECK(g.edge_count() == 45);
    std::string rest((std::istreambuf_iterator<char>(lines)),
                     std::istreambuf_iterator<char>());
    const json side = json::parse(rest);
    CHECK(side["edges"] == 45);
    CHECK(side["graph6"] == g6);
}

TEST_CASE("construct rejects bad parameters with exit 2") {
    CHECK(run({"construct", "cycle", "--t", "2"}).code == 2);
    CHECK(run({"construct", "clique", "--s", "65"}).code == 2);
    CHECK(run({"construct", "nonsense"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("construct wheel round-trips through detect") {
    const auto made = run({"construct", "wheel", "--m", "2", "--t", "5"});
    CHECK(made.code == 0);
    std::string g6 = made.out.substr(0, made.out.find('\n'));
    const auto found = run({"detect", "--m", "2", "--t", "5", "--g6", g6});
    CHECK(found.code == 0);
    const json rep = first_json(found.out);
    CHECK(rep["command"] == "detect");
    CHECK(rep["result"]["contains"] == true);
    CHECK(rep["result"]["witness"]["hub"].size() == 2);
    CHECK(rep["result"]["witness"]["cycle"].size() == 5);
}

TEST_CASE("detect single graph and envelope fields") {
    const auto t4 = run({"construct", "turan", "--n", "12", "--r", "4"});
    std::string g6 = t4.out.substr(0, t4.out.find('\n'));
    const auto res = run({"detect", "--m", "2", "--t", "5", "--g6", g6});
    CHECK(res.code == 0);
    const json rep = first_json(res.out);
    for (const char* key : {"command", "tool_version", "inputs", "result", "elapsed_ms"})
        CHECK(rep.contains(key));
    CHECK(rep["result"]["contains"] == false);
    CHECK(!rep["result"].contains("witness"));
}

TEST_CASE("detect batch mode, one verdict per line") {
    const auto res = run({"detect", "--m", "0", "--t", "3"}, "Bw\nDhc\n\nD~{\n");
    CHECK(res.code == 0);
    std::istringstream lines(res.out);
    std::string line;
    int verdicts = 0, contains = 0;
    while (std::getline(lines, line)) {
        const json v = json::parse(line);
        ++verdicts;
        if (v["contains"] == true) ++contains;
    }
    CHECK(verdicts == 3);
    CHECK(contains == 2); // K_3 and K_5 have triangles, C_5 does not
}

TEST_CASE("detect reports malformed graph6 with exit 2") {
    CHECK(run({"detect", "--m", "0", "--t", "3", "--g6", "A"}).code == 2);
    CHECK(run({"detect", "--m", "0", "--t", "3"}, "not graph6\n").code == 2);
}

TEST_CASE("exact command and payload determinism") {
    const auto a = run({"exact", "--n", "5", "--m", "0", "--t", "3"});
    CHECK(a.code == 0);
    const json rep = first_json(a.out);
    CHECK(rep["result"]["value"] == 6);
    CHECK(rep["result"]["witness_count"].get<int>() >= 1);

    const auto b = run({"exact", "--n", "5", "--m", "0", "--t", "3"});
    CHECK(first_json(b.out)["result"] == rep["result"]);

    CHECK(run({"exact", "--n", "11", "--m", "0", "--t", "3"}).code == 2);
}

TEST_CASE("lower-bound echoes the seed and is reproducible") {
    const std::vector<std::string> args{"lower-bound", "--n", "8",  "--m",
                                        "1",           "--t", "5",  "--budget",
                                        "200",         "--restarts", "2",
                                        "--seed",      "7"};
    const auto a = run(args);
    CHECK(a.code == 0);
    const json rep = first_json(a.out);
    CHECK(rep["seed"] == 7);
    CHECK(rep["result"]["edges"].get<int>() >= 21); // T_3(8) start
    CHECK(rep["result"]["certified_wheel_free"] == true);
    const auto b = run(args);
    CHECK(first_json(b.out)["result"] == rep["result"]);
}

TEST_CASE("formula command") {
    const auto res = run({"formula", "--n", "11", "--m", "2", "--k", "3"});
    CHECK(res.code == 0);
    const json rep = first_json(res.out);
    CHECK(rep["result"]["value"] == 45);
    CHECK(rep["result"]["threshold"] == 11);
    CHECK(rep["result"]["in_regime"] == true);
    CHECK(run({"formula", "--n", "10", "--m", "0", "--k", "3"}).code == 2);
}

TEST_CASE("check-proof exits 0 on a clean grid") {
    const auto res = run({"check-proof", "--m", "2..3", "--k", "3..4", "--window",
                          "4", "--jobs", "2"});
    CHECK(res.code == 0);
    const json rep = first_json(res.out);
    CHECK(rep["result"]["required_failures"] == 0);
    const auto& per_check = rep["result"]["per_check"];
    for (const char* name : {"degree_forcing", "delta_max_branch", "pmax_le",
                             "residual_threshold", "deletion_edge_bound"}) {
        CHECK(per_check.contains(name));
        CHECK(per_check[name]["fail"] == 0);
    }
    CHECK(per_check["pmax_equal"]["required"] == false);
    CHECK(run({"check-proof", "--m", "x..y"}).code == 2);
    CHECK(run({"check-proof", "--checks", "bogus"}).code == 2);
}

TEST_CASE("help and version succeed") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).code == 0);
    CHECK(run({}).code == 2); // a subcommand is required
}
