#include "turanwheel/formula.hpp"

#include "turanwheel/errors.hpp"

namespace tw {

namespace {
using i128 = __int128;

std::int64_t floor_div_product(std::int64_t a, std::int64_t n, std::int64_t d) {
    // floor(a * n^2 / d) with non-negative a, n and positive d
    const i128 num = i128(a) * n * n;
    return static_cast<std::int64_t>(num / d);
}
} // namespace

std::int64_t wheel_turan_value(std::int64_t n, std::int64_t m) {
    if (n < 0) throw InvalidParameter("order must be non-negative");
    if (m < 1) throw InvalidParameter("hub size must be at least 1");
    return floor_div_product(m + 1, n, 2 * (m + 2));
}

std::int64_t wheel_order_threshold(std::int64_t m, std::int64_t k) {
    if (m < 1) throw InvalidParameter("hub size must be at least 1");
    if (k < 2) throw InvalidParameter("k must be at least 2");
    return 2 * (m + 2) * k - 3 * (m + 2) - 1;
}

std::int64_t turan_graph_edges(std::int64_t n, std::int64_t r) {
    if (n < 0) throw InvalidParameter("order must be non-negative");
    if (r < 1) throw InvalidParameter("part count must be positive");
    return floor_div_product(r - 1, n, 2 * r);
}

std::int64_t even_wheel_turan_value(std::int64_t n) {
    if (n < 0) throw InvalidParameter("order must be non-negative");
    return static_cast<std::int64_t>(i128(n) * n / 3);
}

std::int64_t even_wheel_order_threshold(std::int64_t k) {
    if (k < 3) throw InvalidParameter("k must be at least 3");
    return 6 * k - 10;
}

} // namespace tw
