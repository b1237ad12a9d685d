#pragma once

// Canonical labeling, isomorphism testing, and isomorph-free exhaustive
// generation.
//
// The canonical form of a graph is the lexicographically greatest upper
// triangle bitstring (column-major, the graph6 bit order) over all vertex
// relabelings.  It is found by branch and bound: positions are filled one
// vertex at a time, only candidates whose adjacency column to the placed
// prefix is maximal can extend (earlier bits dominate the comparison, so
// nothing else can reach the maximum), twin vertices collapse to one branch,
// and completed prefixes are compared against the best leaf so far.
// Equitable (degree) refinement orders the tie candidates so the first
// descent lands near the optimum; inside a refinement cell candidates are
// explored in ascending vertex index.
//
// Generation is orderly: vertex j is attached to every neighbor subset of
// 0..j-1, and a child survives iff its labeled code already is its canonical
// form.  Canonical codes are prefix-closed under deleting the last vertex,
// so every isomorphism class on n vertices is reached exactly once, with
// O(depth) memory.

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "turanwheel/graph.hpp"

namespace tw {

struct CanonicalForm {
    int order = 0;
    // Upper-triangle bits of the canonically relabeled graph, column-major;
    // bit b lives in word b/64 at position 63-(b%64), so word-wise
    // comparison equals bitstring comparison.
    std::vector<std::uint64_t> bits;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);

// g relabeled into canonical order; encode_graph6 of this is the class label.
Graph canonical_copy(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

// Enumeration refuses orders above this unless force_large is set; the cap
// exists because n = 11 already has ~10^9 classes.
inline constexpr int kMaxEnumerationOrder = 10;
// Absolute ceiling even with force_large.
inline constexpr int kMaxEnumerationOrderForced = 16;

// Visits every isomorphism class on n vertices with at least min_edges
// edges, exactly once, and returns the number of classes visited.
std::uint64_t enumerate_graphs(int n, int min_edges,
                               const std::function<void(const Graph&)>& visitor,
                               bool force_large = false);

// Pruning hooks for searches built on the same generation engine.
struct EnumerationHooks {
    // Dynamic lower bound on the final edge count; partial graphs that
    // cannot reach it are cut.  Sampled at every node.
    std::function<int()> min_edges;
    // Returns true to discard a partial graph and its whole subtree.  Only
    // hereditary predicates are sound here (ancestors in the generation
    // tree are induced subgraphs of their descendants).
    std::function<bool(const Graph&)> prune_subtree;
};

std::uint64_t enumerate_graphs_pruned(int n, const EnumerationHooks& hooks,
                                      const std::function<void(const Graph&)>& visitor,
                                      bool force_large = false);

} // namespace tw
