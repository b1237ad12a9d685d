#pragma once

// Machine verification of the arithmetic behind the induction that pins
// ex(n, K_m v C_{2k-1}) to floor((m+1)n^2 / (2(m+2))) for
// n >= 2(m+2)k - 3(m+2) - 1.  Every inequality of the argument is its own
// check with value-carrying output, run over exhaustive (m, k, n, p) grids;
// failures localize to a parameter point.  All arithmetic is exact.
//
// The induction walks the hub size down by one: a vertex v of maximum
// degree n-p is removed together with p-1 non-neighbors, and the remaining
// graph is dense enough to contain K_{m-1} v C_{2k-1} by the (m-1)-level
// closed form (the induction hypothesis), which forces the full wheel
// around v.  The checks mirror that walk:
//
//   degree_forcing      a graph one edge above the closed form has a vertex
//                       of degree at least n - floor(n/(m+2))
//   delta_max_branch    the maximum-degree = n-1 branch: the edge count
//                       after deleting a dominating vertex still beats the
//                       (m-1)-level closed form, and the residual order
//                       still meets the (m-1)-level threshold
//   pmax_identity       max over p in [2, floor(n/(m+2))] of
//                       p(n-p) + floor(m(n-p)^2 / (2(m+1))) equals the
//                       closed form (equality reported separately from the
//                       <= the argument actually needs)
//   residual_threshold  n - floor(n/(m+2)) >= 2(m+1)k - 3(m+1) - 1
//   deletion_edge_bound the pointwise (per-p) form of pmax's <=

#include <cstdint>
#include <string>
#include <vector>

namespace tw {

struct CheckOutcome {
    bool pass = false;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

// (n - floor(n/(m+2)) - 1) n / 2  <  floor((m+1)n^2/(2(m+2))) + 1.
// The left side can be a half-integer; its floor is compared, which is
// equivalent because the right side is an integer.
CheckOutcome check_degree_forcing(std::int64_t n, std::int64_t m);

struct DeltaMaxOutcome {
    bool pass = false;
    bool edge_pass = false;
    std::int64_t edge_lhs = 0, edge_rhs = 0; // deleted-vertex edge count vs
                                             // (m-1)-level closed form
    bool order_pass = false;
    std::int64_t order_lhs = 0, order_rhs = 0; // n-1 vs (m-1)-level threshold
};
DeltaMaxOutcome check_delta_max_branch(std::int64_t n, std::int64_t m, std::int64_t k);

struct PMaxOutcome {
    std::int64_t max = 0;
    std::int64_t argmax = 0; // smallest maximizing p
    std::int64_t target = 0; // floor((m+1)n^2/(2(m+2)))
    bool equal = false;      // max == target, the claimed identity
    bool le = false;         // max <= target, what the argument needs
};
// Brute force over p in [2, floor(n/(m+2))]; throws RangeEmpty when the
// range is empty (n < 2(m+2)).
PMaxOutcome check_pmax_identity(std::int64_t n, std::int64_t m);

// n - floor(n/(m+2)) >= 2(m+1)k - 3(m+1) - 1; the m = 2 right side equals
// 6k - 10, asserted in tests rather than assumed.
CheckOutcome check_residual_threshold(std::int64_t n, std::int64_t m, std::int64_t k);

// floor((m+1)n^2/(2(m+2))) + 1 - p(n-p) > floor(m(n-p)^2/(2(m+1))).
CheckOutcome check_deletion_edge_bound(std::int64_t n, std::int64_t m, std::int64_t k,
                                       std::int64_t p);

struct GridPoint {
    std::int64_t m = 0, k = 0, n = 0;
    std::int64_t p = -1; // -1 when the check has no p
};

struct CheckFailure {
    std::string check;
    GridPoint point;
    std::int64_t lhs = 0, rhs = 0;
};

struct CheckStats {
    std::string name;
    bool required = true; // pmax_equal is informational, everything else required
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::vector<CheckFailure> failures;
};

struct CheckSelection {
    bool degree_forcing = true;
    bool delta_max = true;
    bool pmax = true;
    bool residual = true;
    bool deletion = true;
};

struct ProofReport {
    std::int64_t m_lo = 0, m_hi = 0;
    std::int64_t k_lo = 0, k_hi = 0;
    std::int64_t n_window = 0; // n runs from threshold(m,k) to threshold + window
    std::vector<CheckStats> checks;
    std::uint64_t required_failures = 0;
};

// Runs the selected checks on every grid point, n from the (m,k) threshold
// to threshold + window and every valid p for the p-dependent check.
// Deterministic: points are processed (and failures recorded) sorted by
// (m, k, n, p) regardless of worker count.
ProofReport run_grid(std::int64_t m_lo, std::int64_t m_hi, std::int64_t k_lo,
                     std::int64_t k_hi, std::int64_t n_window,
                     const CheckSelection& sel = {}, int jobs = 1);

} // namespace tw
