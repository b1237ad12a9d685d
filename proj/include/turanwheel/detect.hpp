#pragma once

// Decides whether a graph contains the generalized wheel K_m v C_t as a
// subgraph (ordinary subgraph containment, not induced), and computes exact
// clique and chromatic numbers for the chromatic side of the story.

#include <optional>
#include <utility>
#include <vector>

#include "turanwheel/graph.hpp"

namespace tw {

// The forbidden pattern K_m v C_t: an m-clique hub joined to a t-cycle.
// The detector takes any t >= 3; odd t is what the Turán machinery needs.
struct WheelSpec {
    int m = 0; // hub clique size, >= 0
    int t = 3; // cycle length, >= 3

    // t = 2k-1 for the odd family
    int k() const { return (t + 1) / 2; }
};

struct WheelWitness {
    std::vector<int> hub;   // m pairwise adjacent vertices, ascending
    std::vector<int> cycle; // t vertices, consecutive (and closing) pairs
                            // adjacent, each adjacent to every hub vertex
};

// Hub-first search: enumerate m-cliques in ascending order, then look for a
// t-cycle inside the common neighborhood of the hub.  Cycles are rooted at
// their minimum vertex with direction fixed (second vertex > last), and
// partial paths die when the BFS distance back to the root exceeds the
// remaining budget.  t = 3 routes to a clique search (K_m v C_3 = K_{m+3});
// m = 0 degenerates to a plain fixed-length cycle search.
std::optional<WheelWitness> contains_wheel(const Graph& g, const WheelSpec& spec);

// Re-verifies a witness edge by edge against the host graph.
bool witness_is_valid(const Graph& g, const WheelSpec& spec, const WheelWitness& w);

// A maximum clique (ascending vertex order), by branch and bound over bitset
// candidate sets with a greedy-coloring bound.
std::vector<int> max_clique(const Graph& g);

inline constexpr int kMaxChromaticOrder = 32;

// Exact chromatic number.  Lower bound from max_clique, upper bound from
// greedy over a degeneracy order, gap closed by k-colorability DFS.
int chromatic_number(const Graph& g);

// K_m v C_t itself; hub on vertices 0..m-1, cycle on m..m+t-1.
Graph wheel_graph(const WheelSpec& spec);

// An edge e of H = K_m v C_t with chi(H - e) = m + 2, cycle edges scanned
// first.  Requires odd t and m + t <= 32.
std::pair<int, int> find_critical_edge(const WheelSpec& spec);

} // namespace tw
