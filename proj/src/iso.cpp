#include "turanwheel/iso.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace tw {

namespace {

// Equitable refinement seeded by degrees: repeatedly split color classes by
// the multiset of neighbor colors until stable.  Colors are assigned by
// sorted signature, so they are invariant under isomorphism.
std::array<int, 64> equitable_colors(const Graph& g) {
    const int n = g.order();
    std::array<int, 64> color{};
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);

    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            VertexSet m = g.neighbors(v);
            while (m) {
                int u = __builtin_ctzll(m);
                m &= m - 1;
                nb.push_back(color[u]);
            }
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> index;
        for (int v = 0; v < n; ++v) index[sig[v]] = 0;
        int next = 0;
        for (auto& [key, idx] : index) idx = next++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int c = index[sig[v]];
            if (c != color[v]) changed = true;
            color[v] = c;
        }
        if (!changed) break;
    }
    return color;
}

// Max-code search.  Columns are kept as one uint64 per position (position j
// contributes j bits, earlier placed vertices in more significant bits);
// comparing column sequences position by position equals comparing the
// packed bitstrings, because the column lengths line up.
struct CanonSearcher {
    int n = 0;
    std::array<VertexSet, 64> adj{};
    std::array<int, 64> explore_order{}; // vertex ids, exploration priority

    std::array<int, 64> perm{};
    VertexSet placed = 0;

    std::array<std::uint64_t, 64> cols{};
    std::array<std::uint64_t, 64> best_cols{};
    std::array<int, 64> best_perm{};
    bool have_best = false;

    // `refine` buys a better exploration order from equitable refinement;
    // the cheap variant orders by degree and is used on the generation hot
    // path, where the order only affects how fast a counterexample shows up.
    CanonSearcher(const Graph& g, bool refine) : n(g.order()) {
        for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
        std::array<int, 64> key{};
        if (refine) {
            key = equitable_colors(g);
        } else {
            for (int v = 0; v < n; ++v) key[v] = g.degree(v);
        }
        for (int v = 0; v < n; ++v) explore_order[v] = v;
        std::stable_sort(explore_order.begin(), explore_order.begin() + n,
                         [&](int a, int b) { return key[a] > key[b]; });
    }

    std::uint64_t column(int u, int depth) const {
        std::uint64_t col = 0;
        for (int i = 0; i < depth; ++i)
            col = (col << 1) | ((adj[u] >> perm[i]) & 1);
        return col;
    }

    bool twins(int u, int v) const {
        const VertexSet pair = vertex_bit(u) | vertex_bit(v);
        return (adj[u] & ~pair) == (adj[v] & ~pair);
    }

    // Candidates achieving the maximal column at this depth, twin-collapsed.
    // Only these can extend a maximal code: the column's bits dominate every
    // later position in the comparison.  Swapping two vertices with equal
    // neighborhoods outside the pair is an automorphism, so of each twin
    // group one representative suffices.
    int tie_candidates(int depth, int out[64], std::uint64_t& cmax_out) {
        std::uint64_t cmax = 0;
        int cnt = 0;
        for (int i = 0; i < n; ++i) {
            const int u = explore_order[i];
            if ((placed >> u) & 1) continue;
            const std::uint64_t col = column(u, depth);
            if (cnt == 0 || col > cmax) {
                cmax = col;
                cnt = 0;
                out[cnt++] = u;
            } else if (col == cmax) {
                bool dup = false;
                for (int j = 0; j < cnt && !dup; ++j) dup = twins(u, out[j]);
                if (!dup) out[cnt++] = u;
            }
        }
        cmax_out = cmax;
        return cnt;
    }

    // 0 if cols[0..len) equals best, 1 if it is strictly greater.  A strictly
    // smaller prefix is never current: such branches are pruned on entry and
    // best only ever moves to extensions of the live path.
    int prefix_cmp(int len) const {
        for (int i = 0; i < len; ++i)
            if (cols[i] != best_cols[i]) return cols[i] < best_cols[i] ? -1 : 1;
        return 0;
    }

    void search(int depth) {
        if (depth == n) {
            if (!have_best || prefix_cmp(n) > 0) {
                best_cols = cols;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        int cands[64];
        std::uint64_t cmax = 0;
        const int cnt = tie_candidates(depth, cands, cmax);
        cols[depth] = cmax;
        for (int i = 0; i < cnt; ++i) {
            // Re-checked against the current best on every iteration: a
            // deeper update can turn an earlier strict lead into a tie.
            if (have_best && prefix_cmp(depth) == 0 && cmax < best_cols[depth])
                return;
            const int u = cands[i];
            perm[depth] = u;
            placed |= vertex_bit(u);
            search(depth + 1);
            placed &= ~vertex_bit(u);
        }
    }

    // False iff some relabeling beats `target` (early abort).  This is the
    // orderly-generation acceptance test with target = the labeled code.
    bool no_better(int depth, const std::array<std::uint64_t, 64>& target) {
        if (depth == n) return true;
        int cands[64];
        std::uint64_t cmax = 0;
        const int cnt = tie_candidates(depth, cands, cmax);
        if (cmax > target[depth]) return false;
        if (cmax < target[depth]) return true;
        for (int i = 0; i < cnt; ++i) {
            const int u = cands[i];
            perm[depth] = u;
            placed |= vertex_bit(u);
            const bool ok = no_better(depth + 1, target);
            placed &= ~vertex_bit(u);
            if (!ok) return false;
        }
        return true;
    }
};

std::array<std::uint64_t, 64> labeled_cols(const Graph& g) {
    std::array<std::uint64_t, 64> cols{};
    for (int v = 0; v < g.order(); ++v) {
        std::uint64_t col = 0;
        for (int u = 0; u < v; ++u) col = (col << 1) | (g.has_edge(u, v) ? 1 : 0);
        cols[v] = col;
    }
    return cols;
}

std::vector<std::uint64_t> pack_cols(int n, const std::array<std::uint64_t, 64>& cols) {
    const int nbits = n * (n - 1) / 2;
    std::vector<std::uint64_t> words((nbits + 63) / 64, 0);
    int bit = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = j - 1; i >= 0; --i) { // MSB of the column first
            if ((cols[j] >> i) & 1) words[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
            ++bit;
        }
    }
    return words;
}

bool is_labeled_canonical(const Graph& g) {
    CanonSearcher s(g, /*refine=*/false);
    return s.no_better(0, labeled_cols(g));
}

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonSearcher s(g, /*refine=*/true);
    s.search(0);
    return CanonicalForm{g.order(), pack_cols(g.order(), s.best_cols)};
}

Graph canonical_copy(const Graph& g) {
    CanonSearcher s(g, /*refine=*/true);
    s.search(0);
    const int n = g.order();
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(s.best_perm[u], s.best_perm[v])) b.add_edge(u, v);
    return b.build();
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg(g.order()), dh(h.order());
    for (int v = 0; v < g.order(); ++v) dg[v] = g.degree(v);
    for (int v = 0; v < h.order(); ++v) dh[v] = h.degree(v);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

std::uint64_t enumerate_graphs_pruned(int n, const EnumerationHooks& hooks,
                                      const std::function<void(const Graph&)>& visitor,
                                      bool force_large) {
    if (n < 0 || n > kMaxEnumerationOrderForced)
        throw CapacityExceeded("enumeration order outside [0, 16]");
    if (n > kMaxEnumerationOrder && !force_large)
        throw CapacityExceeded("enumeration above order 10 must be forced explicitly");

    std::uint64_t count = 0;
    GraphBuilder cur(0);
    int edges = 0;

    // Max edges any completion of a j-vertex partial graph can end with.
    auto reachable_edges = [&](int j) {
        return edges + (n - j) * (n - j - 1) / 2 + (n - j) * j;
    };
    auto need = [&] { return hooks.min_edges ? hooks.min_edges() : 0; };

    const auto recurse = [&](auto&& self) -> void {
        const int j = cur.order();
        if (j == n) {
            if (edges >= need()) {
                ++count;
                visitor(cur.view());
            }
            return;
        }
        for (VertexSet s = 0; s < (VertexSet{1} << j); ++s) {
            const int added = __builtin_popcountll(s);
            edges += added;
            if (reachable_edges(j + 1) >= need()) {
                cur.push_vertex(s);
                if (is_labeled_canonical(cur.view()) &&
                    !(hooks.prune_subtree && hooks.prune_subtree(cur.view()))) {
                    self(self);
                }
                cur.pop_vertex();
            }
            edges -= added;
        }
    };

    recurse(recurse);
    return count;
}

std::uint64_t enumerate_graphs(int n, int min_edges,
                               const std::function<void(const Graph&)>& visitor,
                               bool force_large) {
    EnumerationHooks hooks;
    hooks.min_edges = [min_edges] { return min_edges; };
    return enumerate_graphs_pruned(n, hooks, visitor, force_large);
}

} // namespace tw
