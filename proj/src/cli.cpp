#include "turanwheel/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turanwheel/detect.hpp"
#include "turanwheel/formula.hpp"
#include "turanwheel/graph.hpp"
#include "turanwheel/iso.hpp"
#include "turanwheel/parallel.hpp"
#include "turanwheel/proofcheck.hpp"
#include "turanwheel/turan.hpp"
#include "turanwheel/version.hpp"

namespace tw::cli {

namespace {

using nlohmann::json;

json witness_json(const WheelWitness& w) {
    return json{{"hub", w.hub}, {"cycle", w.cycle}};
}

// Every command reports through the same envelope; identical inputs (and
// seed) give identical `result` payloads, only elapsed_ms may vary.
void emit_report(std::ostream& out, const std::string& command, json inputs,
                 json result, std::chrono::steady_clock::time_point t0,
                 std::optional<std::uint64_t> seed = std::nullopt) {
    json report{{"command", command},
                {"tool_version", kToolVersion},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)}};
    if (seed) report["seed"] = *seed;
    report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
    out << report.dump(2) << "\n";
}

struct RangeArg {
    std::int64_t lo = 0, hi = 0;
};

// "a..b" or a single value
RangeArg parse_range(const std::string& s) {
    RangeArg r;
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoll(s);
        } else {
            r.lo = std::stoll(s.substr(0, dots));
            r.hi = std::stoll(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected an integer or lo..hi range: " + s);
    }
    return r;
}

std::string human_wheel(const WheelSpec& spec) {
    return "K_" + std::to_string(spec.m) + " v C_" + std::to_string(spec.t);
}

int run_construct(const std::string& kind, int n, int r, int t, int s,
                  const std::vector<int>& parts, const std::string& json_path,
                  std::ostream& out, std::ostream& err) {
    Graph g;
    if (kind == "turan") {
        g = make_turan_graph(n, r);
    } else if (kind == "wheel") {
        g = wheel_graph(WheelSpec{s, t});
    } else if (kind == "cycle") {
        g = make_cycle(t);
    } else if (kind == "clique") {
        g = make_clique(s);
    } else if (kind == "multipartite") {
        g = make_complete_multipartite(PartSizes{parts});
    } else {
        throw CLI::ValidationError("unknown construction: " + kind);
    }
    out << encode_graph6(g) << "\n";
    if (!json_path.empty()) {
        json side{{"kind", kind},
                  {"order", g.order()},
                  {"edges", g.edge_count()},
                  {"graph6", encode_graph6(g)}};
        if (json_path == "-") {
            out << side.dump(2) << "\n";
        } else {
            std::ofstream f(json_path);
            if (!f) throw CLI::ValidationError("cannot write " + json_path);
            f << side.dump(2) << "\n";
        }
    }
    err << "construct " << kind << ": order " << g.order() << ", "
        << g.edge_count() << " edges\n";
    return 0;
}

json detect_verdict(const Graph& g, const WheelSpec& spec) {
    json verdict{{"contains", false}};
    if (auto w = contains_wheel(g, spec)) {
        verdict["contains"] = true;
        verdict["witness"] = witness_json(*w);
    }
    return verdict;
}

int run_detect(const WheelSpec& spec, const std::string& g6,
               const std::string& path, std::ostream& out, std::ostream& err,
               std::istream& in, std::chrono::steady_clock::time_point t0) {
    if (!g6.empty()) {
        const Graph g = decode_graph6(g6);
        emit_report(out, "detect",
                    json{{"graph6", g6}, {"m", spec.m}, {"t", spec.t}},
                    detect_verdict(g, spec), t0);
        return 0;
    }
    // batch: one graph6 per line, one verdict per line
    std::ifstream file;
    if (!path.empty()) {
        file.open(path);
        if (!file) throw CLI::ValidationError("cannot read " + path);
    }
    std::istream& src = path.empty() ? in : file;
    std::string line;
    std::size_t lineno = 0, hits = 0, total = 0;
    while (std::getline(src, line)) {
        ++lineno;
        if (line.empty()) continue;
        Graph g;
        try {
            g = decode_graph6(line);
        } catch (const Graph6ParseError& e) {
            err << "line " << lineno << ": " << e.what() << "\n";
            return 2;
        }
        const json verdict = detect_verdict(g, spec);
        if (verdict["contains"].get<bool>()) ++hits;
        ++total;
        out << verdict.dump() << "\n";
    }
    err << "detect " << human_wheel(spec) << ": " << hits << "/" << total
        << " graphs contain it\n";
    return 0;
}

int run_exact(int n, const WheelSpec& spec, bool force_large, std::ostream& out,
              std::ostream& err, std::chrono::steady_clock::time_point t0) {
    const TuranResult res = exact_turan(n, spec, force_large);
    json result{{"n", res.n},
                {"m", res.spec.m},
                {"t", res.spec.t},
                {"value", res.value},
                {"witness_count", res.witnesses.size()},
                {"witnesses", res.witnesses},
                {"classes_visited", res.classes_visited}};
    emit_report(out, "exact",
                json{{"n", n}, {"m", spec.m}, {"t", spec.t},
                     {"force_large", force_large}},
                result, t0);
    err << "exact: ex(" << n << ", " << human_wheel(spec) << ") = " << res.value
        << ", " << res.witnesses.size() << " extremal class(es)\n";
    return 0;
}

int run_lower_bound(int n, const WheelSpec& spec, const SearchConfig& cfg,
                    std::ostream& out, std::ostream& err,
                    std::chrono::steady_clock::time_point t0) {
    const LowerBoundResult res = heuristic_lower_bound(n, spec, cfg);
    json result{{"n", res.n},
                {"m", res.spec.m},
                {"t", res.spec.t},
                {"edges", res.edges},
                {"graph6", encode_graph6(res.best)},
                {"best_restart", res.best_restart},
                {"proposals", res.proposals},
                {"budget", cfg.budget},
                {"restarts", cfg.restarts},
                {"certified_wheel_free", true}};
    json inputs{{"n", n}, {"m", spec.m}, {"t", spec.t},
                {"budget", cfg.budget}, {"restarts", cfg.restarts}};
    if (cfg.target) inputs["target"] = *cfg.target;
    emit_report(out, "lower-bound", inputs, result, t0, cfg.seed);
    err << "lower-bound: ex(" << n << ", " << human_wheel(spec)
        << ") >= " << res.edges << "\n";
    return 0;
}

int run_formula(std::int64_t n, std::int64_t m, std::int64_t k, std::ostream& out,
                std::ostream& err, std::chrono::steady_clock::time_point t0) {
    const std::int64_t value = wheel_turan_value(n, m);
    const std::int64_t thr = wheel_order_threshold(m, k);
    emit_report(out, "formula", json{{"n", n}, {"m", m}, {"k", k}},
                json{{"n", n},
                     {"m", m},
                     {"k", k},
                     {"value", value},
                     {"threshold", thr},
                     {"in_regime", n >= thr}},
                t0);
    err << "formula: value " << value << ", threshold " << thr << "\n";
    return 0;
}

json proof_report_json(const ProofReport& rep) {
    json per_check = json::object();
    for (const auto& st : rep.checks) {
        json failures = json::array();
        for (const auto& f : st.failures) {
            json point{{"m", f.point.m}, {"k", f.point.k}, {"n", f.point.n}};
            if (f.point.p >= 0) point["p"] = f.point.p;
            failures.push_back(json{{"point", point}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        }
        per_check[st.name] = json{{"required", st.required},
                                  {"pass", st.pass},
                                  {"fail", st.fail},
                                  {"failures", failures}};
    }
    return json{{"grid",
                 json{{"m", {rep.m_lo, rep.m_hi}},
                      {"k", {rep.k_lo, rep.k_hi}},
                      {"window", rep.n_window}}},
                {"per_check", per_check},
                {"required_failures", rep.required_failures}};
}

int run_check_proof(const RangeArg& m, const RangeArg& k, std::int64_t window,
                    const std::vector<std::string>& which, int jobs,
                    std::ostream& out, std::ostream& err,
                    std::chrono::steady_clock::time_point t0) {
    CheckSelection sel;
    if (!which.empty()) {
        sel = CheckSelection{false, false, false, false, false};
        for (const auto& name : which) {
            if (name == "degree_forcing") sel.degree_forcing = true;
            else if (name == "delta_max_branch") sel.delta_max = true;
            else if (name == "pmax_identity") sel.pmax = true;
            else if (name == "residual_threshold") sel.residual = true;
            else if (name == "deletion_edge_bound") sel.deletion = true;
            else throw CLI::ValidationError("unknown check: " + name);
        }
    }
    const ProofReport rep = run_grid(m.lo, m.hi, k.lo, k.hi, window, sel, jobs);
    emit_report(out, "check-proof",
                json{{"m", {m.lo, m.hi}}, {"k", {k.lo, k.hi}}, {"window", window}},
                proof_report_json(rep), t0);
    for (const auto& st : rep.checks)
        err << (st.fail == 0 ? "ok   " : "FAIL ") << st.name << ": " << st.pass
            << " pass, " << st.fail << " fail" << (st.required ? "" : " (informational)")
            << "\n";
    return rep.required_failures == 0 ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
        std::istream& in) {
    const auto t0 = std::chrono::steady_clock::now();

    CLI::App app{"Exact Turán numbers, extremal witnesses and proof-arithmetic "
                 "verification for generalized wheels K_m v C_t"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.fallthrough(); // global flags are accepted after a subcommand too
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "worker thread cap (default: cores, or TURANWHEEL_JOBS)");

    // construct
    auto* c_construct = app.add_subcommand("construct", "emit a named graph as graph6");
    std::string kind;
    c_construct->add_option("kind", kind, "turan|wheel|cycle|clique|multipartite")
        ->required();
    int c_n = 0, c_r = 2, c_t = 3, c_s = 0;
    std::vector<int> c_parts;
    std::string c_json;
    c_construct->add_option("--n", c_n, "order (turan)");
    c_construct->add_option("--r", c_r, "part count (turan)");
    c_construct->add_option("--t", c_t, "cycle length (cycle, wheel)");
    c_construct->add_option("--m", c_s, "hub size (wheel)");
    c_construct->add_option("--s", c_s, "clique size (clique)");
    c_construct->add_option("--parts", c_parts, "part sizes (multipartite)")
        ->delimiter(',');
    c_construct->add_option("--json", c_json, "write a JSON sidecar here ('-' = stdout)");

    // detect
    auto* c_detect = app.add_subcommand("detect", "test K_m v C_t containment");
    int d_m = 0, d_t = 3;
    std::string d_g6, d_file;
    c_detect->add_option("--m", d_m, "hub clique size")->required();
    c_detect->add_option("--t", d_t, "cycle length")->required();
    c_detect->add_option("--g6", d_g6, "graph6 string");
    c_detect->add_option("--file", d_file, "file with one graph6 per line");

    // exact
    auto* c_exact = app.add_subcommand("exact", "exact ex(n, K_m v C_t) with witnesses");
    int e_n = 0, e_m = 0, e_t = 5;
    bool e_force = false;
    c_exact->add_option("--n", e_n, "order")->required();
    c_exact->add_option("--m", e_m, "hub clique size")->required();
    c_exact->add_option("--t", e_t, "cycle length")->required();
    c_exact->add_flag("--force-large", e_force,
                      "run above the order-10 guard (can take days)");

    // lower-bound
    auto* c_lb = app.add_subcommand("lower-bound", "stochastic wheel-free edge maximizer");
    int l_n = 0, l_m = 0, l_t = 5;
    SearchConfig l_cfg;
    std::int64_t l_target = -1;
    c_lb->add_option("--n", l_n, "order")->required();
    c_lb->add_option("--m", l_m, "hub clique size")->required();
    c_lb->add_option("--t", l_t, "cycle length")->required();
    c_lb->add_option("--budget", l_cfg.budget, "edge proposals per restart");
    c_lb->add_option("--restarts", l_cfg.restarts, "independent restarts");
    c_lb->add_option("--seed", l_cfg.seed, "random seed (echoed in the report)");
    c_lb->add_option("--target", l_target, "stop once this many edges are reached");
    c_lb->add_option("--plateau", l_cfg.plateau, "rejections before an edge removal");

    // formula
    auto* c_formula = app.add_subcommand("formula", "closed-form value and threshold");
    std::int64_t f_n = 0, f_m = 1, f_k = 3;
    c_formula->add_option("--n", f_n, "order")->required();
    c_formula->add_option("--m", f_m, "hub clique size (>= 1)")->required();
    c_formula->add_option("--k", f_k, "half cycle parameter, forbidden cycle C_{2k-1}")
        ->required();

    // check-proof
    auto* c_proof = app.add_subcommand("check-proof", "verify the induction arithmetic on a grid");
    std::string p_m = "2..12", p_k = "3..12";
    std::int64_t p_window = 300;
    std::vector<std::string> p_checks;
    c_proof->add_option("--m", p_m, "hub range, lo..hi (default 2..12)");
    c_proof->add_option("--k", p_k, "k range, lo..hi (default 3..12)");
    c_proof->add_option("--window", p_window, "orders past the threshold (default 300)");
    c_proof->add_option("--checks", p_checks,
                        "subset: degree_forcing,delta_max_branch,pmax_identity,"
                        "residual_threshold,deletion_edge_bound")
        ->delimiter(',');

    app.require_subcommand(1);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_construct)
            return run_construct(kind, c_n, c_r, c_t, c_s, c_parts, c_json, out, err);
        if (*c_detect) return run_detect(WheelSpec{d_m, d_t}, d_g6, d_file, out, err, in, t0);
        if (*c_exact) return run_exact(e_n, WheelSpec{e_m, e_t}, e_force, out, err, t0);
        if (*c_lb) {
            if (l_target >= 0) l_cfg.target = static_cast<int>(l_target);
            l_cfg.jobs = jobs;
            return run_lower_bound(l_n, WheelSpec{l_m, l_t}, l_cfg, out, err, t0);
        }
        if (*c_formula) return run_formula(f_n, f_m, f_k, out, err, t0);
        if (*c_proof)
            return run_check_proof(parse_range(p_m), parse_range(p_k), p_window,
                                   p_checks, jobs, out, err, t0);
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace tw::cli
