#pragma once

// Closed-form Turán values and order thresholds for generalized wheels
// W_{m,2k-1} = K_m v C_{2k-1}, with exact integer arithmetic throughout.
// Floor division is explicit; intermediates go through 128-bit integers so
// every value is exact for n up to 10^6 and far beyond.

#include <cstdint>

namespace tw {

// ex(n, W_{m,2k-1}) in the regime n >= wheel_order_threshold(m, k):
// floor((m+1) n^2 / (2(m+2))).  Requires n >= 0, m >= 1.
std::int64_t wheel_turan_value(std::int64_t n, std::int64_t m);

// Smallest order the closed form is certified for: 2(m+2)k - 3(m+2) - 1.
// Requires m >= 1, k >= 2.
std::int64_t wheel_order_threshold(std::int64_t m, std::int64_t k);

// Turán graph edge count / clique Turán value: floor((r-1) n^2 / (2r)).
// Requires n >= 0, r >= 1.
std::int64_t turan_graph_edges(std::int64_t n, std::int64_t r);

// Even wheel W_{2k} = K_1 v C_{2k-1}: ex(n, W_{2k}) = floor(n^2/3) once
// n >= 6k - 10.  These are the m = 1 specializations of the two functions
// above; the identity is asserted in tests rather than assumed.
std::int64_t even_wheel_turan_value(std::int64_t n);
std::int64_t even_wheel_order_threshold(std::int64_t k);

} // namespace tw
