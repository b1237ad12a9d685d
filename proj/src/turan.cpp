#include "turanwheel/turan.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "turanwheel/iso.hpp"
#include "turanwheel/parallel.hpp"

namespace tw {

namespace {

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

TuranResult exact_turan(int n, const WheelSpec& spec, bool force_large) {
    if (n < 0) throw InvalidParameter("order must be non-negative");
    const auto t0 = std::chrono::steady_clock::now();

    TuranResult res;
    res.n = n;
    res.spec = spec;

    // Lower seed: the Turán graph T_{m+2}(n), kept only if the detector
    // certifies it (for odd t its chromatic number m+2 < m+3 guarantees
    // freeness; the certificate is checked, not assumed).
    int best = -1;
    if (n >= 1) {
        const Graph t = make_turan_graph(n, spec.m + 2);
        if (!contains_wheel(t, spec)) best = t.edge_count();
    }

    EnumerationHooks hooks;
    hooks.min_edges = [&best] { return std::max(best, 0); };
    hooks.prune_subtree = [&spec](const Graph& g) {
        return contains_wheel(g, spec).has_value();
    };

    std::uint64_t visited = enumerate_graphs_pruned(
        n, hooks,
        [&best](const Graph& g) { best = std::max(best, g.edge_count()); },
        force_large);
    res.value = std::max(best, 0);

    // Second pass at the optimum collects every extremal class.
    EnumerationHooks collect = hooks;
    collect.min_edges = [&res] { return res.value; };
    visited += enumerate_graphs_pruned(
        n, collect,
        [&res](const Graph& g) {
            res.witnesses.push_back(encode_graph6(canonical_copy(g)));
        },
        force_large);

    std::sort(res.witnesses.begin(), res.witnesses.end());
    res.classes_visited = visited;
    res.elapsed_ms = ms_since(t0);
    return res;
}

namespace {

struct RestartOutcome {
    Graph best;
    int edges = -1;
    std::uint64_t proposals = 0;
};

// Uniform pick without std::uniform_int_distribution, whose sequence is
// implementation-defined; the modulo bias is irrelevant here.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

// kth pair (u < v) in column-major order among pairs satisfying `want_edge`.
std::pair<int, int> nth_pair(const Graph& g, std::uint64_t k, bool want_edge) {
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v) == want_edge && k-- == 0) return {u, v};
    throw std::logic_error("pair index out of range");
}

// Removes witness cycle edges until the graph is wheel-free.
void strip_wheels(GraphBuilder& b, const WheelSpec& spec, std::mt19937_64& rng) {
    while (auto w = contains_wheel(b.view(), spec)) {
        const auto& cyc = w->cycle;
        const std::size_t i = pick(rng, cyc.size());
        b.remove_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
}

RestartOutcome run_restart(int n, const WheelSpec& spec, const SearchConfig& cfg,
                           int restart) {
    std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (restart + 1)));

    GraphBuilder cur(n);
    if (restart == 0) {
        cur = GraphBuilder(make_turan_graph(n, spec.m + 2));
    } else {
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng() & 1) cur.add_edge(u, v);
    }
    strip_wheels(cur, spec, rng);

    RestartOutcome out;
    out.best = cur.build();
    out.edges = out.best.edge_count();

    const std::uint64_t all_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    int rejections = 0;
    while (out.proposals < cfg.budget) {
        if (cfg.target && out.edges >= *cfg.target) break;
        const int e = cur.edge_count();
        const std::uint64_t non_edges = all_pairs - e;
        if (non_edges == 0) break;
        ++out.proposals;
        const auto [u, v] = nth_pair(cur.view(), pick(rng, non_edges), false);
        cur.add_edge(u, v);
        if (contains_wheel(cur.view(), spec)) {
            cur.remove_edge(u, v);
            if (++rejections >= cfg.plateau && e > 0) {
                const auto [x, y] = nth_pair(cur.view(), pick(rng, e), true);
                cur.remove_edge(x, y);
                rejections = 0;
            }
        } else {
            rejections = 0;
            if (e + 1 > out.edges) {
                out.best = cur.build();
                out.edges = e + 1;
            }
        }
    }
    return out;
}

} // namespace

LowerBoundResult heuristic_lower_bound(int n, const WheelSpec& spec,
                                       const SearchConfig& cfg) {
    if (n < 0 || n > Graph::kMaxOrder)
        throw InvalidParameter("order must be in [0, 64]");
    if (cfg.budget < 1) throw InvalidParameter("budget must be at least 1");
    if (cfg.restarts < 1) throw InvalidParameter("restarts must be at least 1");
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<RestartOutcome> outcomes(cfg.restarts);
    parallel_for(cfg.restarts, std::max(1, cfg.jobs),
                 [&](int i) { outcomes[i] = run_restart(n, spec, cfg, i); });

    LowerBoundResult res;
    res.n = n;
    res.spec = spec;
    for (int i = 0; i < cfg.restarts; ++i) {
        res.proposals += outcomes[i].proposals;
        if (i == 0 || outcomes[i].edges > res.edges) {
            res.best = outcomes[i].best;
            res.edges = outcomes[i].edges;
            res.best_restart = i;
        }
    }

    if (contains_wheel(res.best, spec))
        throw std::logic_error("lower-bound certificate failed re-verification");
    res.elapsed_ms = ms_since(t0);
    return res;
}

} // namespace tw
