#include "turanwheel/detect.hpp"

#include <algorithm>
#include <array>

namespace tw {

namespace {

void validate_spec(const WheelSpec& spec) {
    if (spec.m < 0) throw InvalidParameter("hub size must be non-negative");
    if (spec.t < 3) throw InvalidParameter("cycle length must be at least 3");
}

// Branch and bound maximum clique; stops early once `target` is reached.
struct CliqueSearch {
    const Graph& g;
    VertexSet best = 0;
    int best_size = 0;
    int target;

    CliqueSearch(const Graph& graph, int stop_at) : g(graph), target(stop_at) {}

    void expand(VertexSet cand, VertexSet clique, int size) {
        if (size > best_size) {
            best = clique;
            best_size = size;
        }
        if (best_size >= target || !cand) return;

        // Greedy coloring of the candidates; a clique inside `cand` can use
        // at most one vertex per color class.
        int color[64];
        int order[64];
        int cnt = 0;
        VertexSet uncolored = cand;
        for (int c = 1; uncolored; ++c) {
            VertexSet cls = uncolored;
            while (cls) {
                const int v = __builtin_ctzll(cls);
                cls &= ~(vertex_bit(v) | g.neighbors(v));
                uncolored &= ~vertex_bit(v);
                color[v] = c;
                order[cnt++] = v;
            }
        }
        for (int i = cnt - 1; i >= 0; --i) {
            const int v = order[i];
            if (size + color[v] <= best_size) return;
            expand(cand & g.neighbors(v), clique | vertex_bit(v), size + 1);
            if (best_size >= target) return;
            cand &= ~vertex_bit(v);
        }
    }
};

std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(__builtin_ctzll(s));
        s &= s - 1;
    }
    return out;
}

std::optional<std::vector<int>> find_clique_of_size(const Graph& g, int k) {
    if (k == 0) return std::vector<int>{};
    if (k > g.order()) return std::nullopt;
    CliqueSearch s(g, k);
    s.expand(g.vertices(), 0, 0);
    if (s.best_size < k) return std::nullopt;
    auto v = set_to_vector(s.best);
    v.resize(k);
    return v;
}

// Exact t-cycle inside the graph induced on `allowed`.  Each cycle is found
// in canonical position: rooted at its minimum vertex, all other vertices
// above the root, direction fixed by second > last.
struct CycleSearch {
    const Graph& g;
    int t;
    VertexSet scope = 0; // root + candidates for the current root
    std::array<int, 64> dist{};
    std::array<int, 64> path{};
    VertexSet used = 0;

    CycleSearch(const Graph& graph, int len) : g(graph), t(len) {}

    void bfs_from(int s) {
        dist.fill(64);
        dist[s] = 0;
        VertexSet frontier = vertex_bit(s);
        VertexSet seen = frontier;
        for (int d = 1; frontier; ++d) {
            VertexSet next = 0;
            VertexSet f = frontier;
            while (f) {
                const int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= g.neighbors(v) & scope & ~seen;
            }
            VertexSet nn = next;
            while (nn) {
                const int v = __builtin_ctzll(nn);
                nn &= nn - 1;
                dist[v] = d;
            }
            seen |= next;
            frontier = next;
        }
    }

    bool extend(int len) {
        const int last = path[len - 1];
        if (len == t)
            return g.has_edge(last, path[0]) && path[1] > path[len - 1];
        VertexSet cand = g.neighbors(last) & scope & ~used;
        while (cand) {
            const int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            // t - len edges remain to walk back to the root
            if (dist[v] > t - len) continue;
            if (len == t - 1 && v > path[1]) continue;
            path[len] = v;
            used |= vertex_bit(v);
            if (extend(len + 1)) return true;
            used &= ~vertex_bit(v);
        }
        return false;
    }

    std::optional<std::vector<int>> run(VertexSet allowed) {
        VertexSet roots = allowed;
        while (roots) {
            const int s = __builtin_ctzll(roots);
            roots &= roots - 1;
            if (__builtin_popcountll(roots) + 1 < t) break; // and shrinking
            scope = vertex_bit(s) | roots;
            bfs_from(s);
            path[0] = s;
            used = vertex_bit(s);
            if (extend(1))
                return std::vector<int>(path.begin(), path.begin() + t);
        }
        return std::nullopt;
    }
};

// Enumerates m-cliques in ascending lexicographic order; `fn` returns true
// to stop.  m = 0 yields the single empty clique.
template <typename Fn>
bool for_each_clique(const Graph& g, int m, Fn&& fn) {
    std::vector<int> chosen;
    chosen.reserve(m);
    const auto rec = [&](auto&& self, VertexSet cand) -> bool {
        if (static_cast<int>(chosen.size()) == m) return fn(chosen);
        if (__builtin_popcountll(cand) < m - static_cast<int>(chosen.size()))
            return false;
        VertexSet c = cand;
        while (c) {
            const int v = __builtin_ctzll(c);
            c &= c - 1;
            chosen.push_back(v);
            if (self(self, c & g.neighbors(v))) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, g.vertices());
}

} // namespace

std::optional<WheelWitness> contains_wheel(const Graph& g, const WheelSpec& spec) {
    validate_spec(spec);
    const int m = spec.m, t = spec.t;

    if (t == 3) {
        // K_m v C_3 = K_{m+3}: any split of an (m+3)-clique serves.
        auto clique = find_clique_of_size(g, m + 3);
        if (!clique) return std::nullopt;
        WheelWitness w;
        w.hub.assign(clique->begin(), clique->begin() + m);
        w.cycle.assign(clique->begin() + m, clique->end());
        return w;
    }

    if (g.order() < m + t) return std::nullopt;

    std::optional<WheelWitness> found;
    for_each_clique(g, m, [&](const std::vector<int>& hub) {
        VertexSet hub_mask = 0;
        for (int v : hub) hub_mask |= vertex_bit(v);
        const VertexSet nbhd = common_neighborhood(g, hub_mask) & ~hub_mask;
        if (__builtin_popcountll(nbhd) < t) return false;
        CycleSearch cs(g, t);
        if (auto cyc = cs.run(nbhd)) {
            found = WheelWitness{hub, *cyc};
            return true;
        }
        return false;
    });
    return found;
}

bool witness_is_valid(const Graph& g, const WheelSpec& spec, const WheelWitness& w) {
    if (static_cast<int>(w.hub.size()) != spec.m) return false;
    if (static_cast<int>(w.cycle.size()) != spec.t) return false;
    VertexSet seen = 0;
    for (int v : w.hub) {
        if (v < 0 || v >= g.order() || (seen & vertex_bit(v))) return false;
        seen |= vertex_bit(v);
    }
    for (int v : w.cycle) {
        if (v < 0 || v >= g.order() || (seen & vertex_bit(v))) return false;
        seen |= vertex_bit(v);
    }
    for (std::size_t i = 0; i < w.hub.size(); ++i)
        for (std::size_t j = i + 1; j < w.hub.size(); ++j)
            if (!g.has_edge(w.hub[i], w.hub[j])) return false;
    for (std::size_t i = 0; i < w.cycle.size(); ++i)
        if (!g.has_edge(w.cycle[i], w.cycle[(i + 1) % w.cycle.size()])) return false;
    for (int h : w.hub)
        for (int c : w.cycle)
            if (!g.has_edge(h, c)) return false;
    return true;
}

std::vector<int> max_clique(const Graph& g) {
    if (g.order() == 0) return {};
    CliqueSearch s(g, g.order() + 1);
    s.expand(g.vertices(), 0, 0);
    return set_to_vector(s.best);
}

namespace {

// Smallest-last (degeneracy) order; coloring consumes it reversed.
std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> order;
    order.reserve(n);
    VertexSet remaining = g.vertices();
    for (int step = 0; step < n; ++step) {
        int best = -1, best_deg = 65;
        VertexSet r = remaining;
        while (r) {
            const int v = __builtin_ctzll(r);
            r &= r - 1;
            const int d = __builtin_popcountll(g.neighbors(v) & remaining);
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        order.push_back(best);
        remaining &= ~vertex_bit(best);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

bool k_colorable(const Graph& g, int k, const std::vector<int>& order) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    const auto dfs = [&](auto&& self, int idx, int used) -> bool {
        if (idx == n) return true;
        const int v = order[idx];
        VertexSet forbidden = 0;
        VertexSet nb = g.neighbors(v);
        while (nb) {
            const int u = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (color[u] >= 0) forbidden |= VertexSet{1} << color[u];
        }
        const int cap = std::min(used + 1, k); // one fresh color at most
        for (int c = 0; c < cap; ++c) {
            if ((forbidden >> c) & 1) continue;
            color[v] = c;
            if (self(self, idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return dfs(dfs, 0, 0);
}

} // namespace

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n > kMaxChromaticOrder)
        throw CapacityExceeded("exact chromatic number is guarded at order 32");
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    const int lb = static_cast<int>(max_clique(g).size());
    const auto order = degeneracy_order(g);

    // Greedy first-fit upper bound along the same order.
    std::vector<int> color(n, -1);
    int ub = 0;
    for (int v : order) {
        VertexSet forbidden = 0;
        VertexSet nb = g.neighbors(v);
        while (nb) {
            const int u = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (color[u] >= 0) forbidden |= VertexSet{1} << color[u];
        }
        int c = 0;
        while ((forbidden >> c) & 1) ++c;
        color[v] = c;
        ub = std::max(ub, c + 1);
    }

    for (int k = lb; k < ub; ++k)
        if (k_colorable(g, k, order)) return k;
    return ub;
}

Graph wheel_graph(const WheelSpec& spec) {
    validate_spec(spec);
    return join(make_clique(spec.m), make_cycle(spec.t));
}

std::pair<int, int> find_critical_edge(const WheelSpec& spec) {
    validate_spec(spec);
    if (spec.t % 2 == 0) throw InvalidParameter("criticality needs an odd cycle");
    if (spec.m + spec.t > kMaxChromaticOrder)
        throw CapacityExceeded("wheel too large for exact chromatic number");

    const Graph h = wheel_graph(spec);
    std::vector<std::pair<int, int>> edges;
    const int m = spec.m, n = h.order();
    // cycle-cycle edges first, then hub-cycle, then hub-hub
    for (int v = m; v < n; ++v)
        for (int u = m; u < v; ++u)
            if (h.has_edge(u, v)) edges.emplace_back(u, v);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < n; ++v) edges.emplace_back(u, v);
    for (int v = 1; v < m; ++v)
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);

    for (auto [u, v] : edges) {
        GraphBuilder b(h);
        b.remove_edge(u, v);
        if (chromatic_number(b.view()) == m + 2) return {u, v};
    }
    throw std::logic_error("no critical edge found; detector or coloring defect");
}

} // namespace tw
