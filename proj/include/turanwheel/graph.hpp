#pragma once

// Compact simple-graph representation on at most 64 vertices, with the
// standard constructors (cycle, clique, complete multipartite, join) and a
// graph6 codec.  Each neighbor set is a single 64-bit word, so adjacency
// tests, common neighborhoods and degree counts are one or two instructions.
//
// Graph values are immutable once built; all mutation goes through
// GraphBuilder.  Vertices are dense integers 0..n-1 and every constructor
// documents its labeling, so witnesses and graph6 output are reproducible.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "turanwheel/errors.hpp"

namespace tw {

using VertexSet = std::uint64_t; // bit v set <=> vertex v in the set

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

// All vertices below `order` as a mask.
inline constexpr VertexSet full_vertex_set(int order) {
    return order >= 64 ? ~VertexSet{0} : (VertexSet{1} << order) - 1;
}

class GraphBuilder;

class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;

    int order() const { return order_; }
    VertexSet vertices() const { return full_vertex_set(order_); }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < order_; ++v) twice += degree(v);
        return twice / 2;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
        return d;
    }

    // Symmetry, loop-freeness, and no bits at or above `order`.
    bool is_consistent() const;

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    int order_ = 0;
    std::array<VertexSet, kMaxOrder> adj_{};
};

// Single-owner mutable facet.  The exact-search and local-search engines
// flip edges through this; everyone else only builds and freezes.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(int order);
    explicit GraphBuilder(const Graph& g) : g_(g) {}

    int order() const { return g_.order_; }
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    VertexSet neighbors(int v) const { return g_.adj_[v]; }
    int edge_count() const { return g_.edge_count(); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // Appends a vertex adjacent to `neighbors` (bits below the old order).
    int push_vertex(VertexSet neighbors);
    void pop_vertex();

    const Graph& view() const { return g_; }
    Graph build() const { return g_; }

private:
    Graph g_;
};

// C_t with vertices 0..t-1 in circular order (i adjacent to i±1 mod t).
Graph make_cycle(int t);

// K_s on vertices 0..s-1.
Graph make_clique(int s);

// Disjoint union plus all cross edges; g's vertices come first.
Graph join(const Graph& g, const Graph& h);

// Part sizes of a complete multipartite graph.
struct PartSizes {
    std::vector<int> parts;
};

// r parts of size ceil(n/r) or floor(n/r), non-increasing, summing to n.
// When r > n the trailing parts are empty.
PartSizes balanced_parts(int n, int r);

// Complete multipartite graph; parts occupy contiguous vertex ranges in the
// order given, edge uv present iff u and v lie in different parts.
Graph make_complete_multipartite(const PartSizes& parts);

// Balanced complete r-partite graph T_r(n).
inline Graph make_turan_graph(int n, int r) {
    return make_complete_multipartite(balanced_parts(n, r));
}

// Intersection of the neighbor sets over `s`; the empty set maps to V(g).
VertexSet common_neighborhood(const Graph& g, VertexSet s);

// graph6, bit-exact per the standard: 63-offset printable bytes, column-major
// upper triangle, zero-padded final chunk, '~'-prefixed long order form for
// n >= 63.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view s);

} // namespace tw
