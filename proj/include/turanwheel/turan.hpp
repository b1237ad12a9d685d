#pragma once

// Exact Turán numbers ex(n, K_m v C_t) at desk scale, with all extremal
// witnesses up to isomorphism, plus a stochastic lower-bound search for
// orders beyond the exact range.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turanwheel/detect.hpp"
#include "turanwheel/graph.hpp"

namespace tw {

struct TuranResult {
    int n = 0;
    WheelSpec spec;
    int value = 0;                      // ex(n, K_m v C_t)
    std::vector<std::string> witnesses; // canonical graph6 of every extremal
                                        // class, lexicographically sorted
    std::uint64_t classes_visited = 0;  // leaf visits across both passes
    std::int64_t elapsed_ms = 0;
};

// Exhaustive isomorph-free search.  The enumeration is seeded with the edge
// count of T_{m+2}(n) whenever the detector certifies that construction
// wheel-free, the bound rises as better graphs appear, and subtrees die as
// soon as a partial graph already contains the wheel (containment is
// hereditary upward).  A second pass at the discovered optimum collects the
// witnesses, so the first pass stays memory-light.
TuranResult exact_turan(int n, const WheelSpec& spec, bool force_large = false);

struct SearchConfig {
    std::uint64_t budget = 20000; // edge-addition proposals per restart
    int restarts = 4;
    std::uint64_t seed = 1;
    std::optional<int> target;    // stop a restart once this many edges hold
    int plateau = 50;             // rejections before a random edge removal
    int jobs = 1;
};

struct LowerBoundResult {
    int n = 0;
    WheelSpec spec;
    Graph best;
    int edges = 0;
    int best_restart = 0;
    std::uint64_t proposals = 0;
    std::int64_t elapsed_ms = 0;
};

// Hill climb over wheel-free graphs: restart 0 starts from T_{m+2}(n),
// later restarts from random graphs stripped down to wheel-freeness;
// single-edge additions are kept only if the graph stays wheel-free, and a
// plateau triggers a random edge removal.  Deterministic for a fixed seed
// (restart i draws from its own generator, merge takes max edges with the
// lowest restart index).  The result is re-certified wheel-free before it
// is returned; it is a lower-bound certificate, never claimed optimal.
LowerBoundResult heuristic_lower_bound(int n, const WheelSpec& spec,
                                       const SearchConfig& cfg);

} // namespace tw
