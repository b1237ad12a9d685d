#include "turanwheel/proofcheck.hpp"

#include <algorithm>

#include "turanwheel/errors.hpp"
#include "turanwheel/formula.hpp"
#include "turanwheel/parallel.hpp"

namespace tw {

namespace {
using i64 = std::int64_t;

// p(n-p) + floor(m(n-p)^2 / (2(m+1))): edges a p-deletion can account for,
// plus the (m-1)-level closed form on the rest.
i64 deletion_budget(i64 n, i64 m, i64 p) {
    const i64 rest = n - p;
    return p * rest + turan_graph_edges(rest, m + 1);
}
} // namespace

CheckOutcome check_degree_forcing(i64 n, i64 m) {
    if (n < 1) throw InvalidParameter("order must be positive");
    if (m < 1) throw InvalidParameter("hub size must be at least 1");
    // Halving can truncate; comparing the floor against an integer right
    // side is equivalent to comparing the exact rational.
    const i64 numerator = (n - n / (m + 2) - 1) * n;
    CheckOutcome out;
    out.lhs = numerator / 2;
    out.rhs = wheel_turan_value(n, m) + 1;
    out.pass = out.lhs < out.rhs;
    return out;
}

DeltaMaxOutcome check_delta_max_branch(i64 n, i64 m, i64 k) {
    if (m < 2) throw InvalidParameter("the induction step needs m >= 2");
    if (k < 3) throw InvalidParameter("k must be at least 3");
    if (n < wheel_order_threshold(m, k))
        throw InvalidParameter("order below the (m,k) threshold");
    DeltaMaxOutcome out;
    out.edge_lhs = wheel_turan_value(n, m) + 1 - (n - 1);
    out.edge_rhs = wheel_turan_value(n - 1, m - 1);
    out.edge_pass = out.edge_lhs > out.edge_rhs;
    out.order_lhs = n - 1;
    out.order_rhs = wheel_order_threshold(m - 1, k);
    out.order_pass = out.order_lhs >= out.order_rhs;
    out.pass = out.edge_pass && out.order_pass;
    return out;
}

PMaxOutcome check_pmax_identity(i64 n, i64 m) {
    if (m < 1) throw InvalidParameter("hub size must be at least 1");
    if (n < 0) throw InvalidParameter("order must be non-negative");
    const i64 p_hi = n / (m + 2);
    if (p_hi < 2)
        throw RangeEmpty("p-range [2, floor(n/(m+2))] is empty; need n >= 2(m+2)");
    PMaxOutcome out;
    out.target = wheel_turan_value(n, m);
    for (i64 p = 2; p <= p_hi; ++p) {
        const i64 value = deletion_budget(n, m, p);
        if (p == 2 || value > out.max) {
            out.max = value;
            out.argmax = p;
        }
    }
    out.equal = out.max == out.target;
    out.le = out.max <= out.target;
    return out;
}

CheckOutcome check_residual_threshold(i64 n, i64 m, i64 k) {
    if (m < 2) throw InvalidParameter("the induction step needs m >= 2");
    if (k < 3) throw InvalidParameter("k must be at least 3");
    if (n < wheel_order_threshold(m, k))
        throw InvalidParameter("order below the (m,k) threshold");
    CheckOutcome out;
    out.lhs = n - n / (m + 2);
    out.rhs = wheel_order_threshold(m - 1, k);
    out.pass = out.lhs >= out.rhs;
    return out;
}

CheckOutcome check_deletion_edge_bound(i64 n, i64 m, i64 k, i64 p) {
    if (m < 1) throw InvalidParameter("hub size must be at least 1");
    if (k < 3) throw InvalidParameter("k must be at least 3");
    if (p < 2 || p > n / (m + 2))
        throw InvalidParameter("p outside [2, floor(n/(m+2))]");
    CheckOutcome out;
    out.lhs = wheel_turan_value(n, m) + 1 - p * (n - p);
    out.rhs = turan_graph_edges(n - p, m + 1);
    out.pass = out.lhs > out.rhs;
    return out;
}

namespace {

struct GridCell { // one (m, k) pair's worth of results
    std::vector<CheckStats> checks;
};

std::vector<CheckStats> make_stats(const CheckSelection& sel) {
    std::vector<CheckStats> stats;
    if (sel.degree_forcing) stats.push_back({"degree_forcing", true, 0, 0, {}});
    if (sel.delta_max) stats.push_back({"delta_max_branch", true, 0, 0, {}});
    if (sel.pmax) {
        stats.push_back({"pmax_le", true, 0, 0, {}});
        stats.push_back({"pmax_equal", false, 0, 0, {}});
    }
    if (sel.residual) stats.push_back({"residual_threshold", true, 0, 0, {}});
    if (sel.deletion) stats.push_back({"deletion_edge_bound", true, 0, 0, {}});
    return stats;
}

void record(CheckStats& st, bool pass, const GridPoint& pt, i64 lhs, i64 rhs) {
    if (pass) {
        ++st.pass;
    } else {
        ++st.fail;
        st.failures.push_back({st.name, pt, lhs, rhs});
    }
}

} // namespace

ProofReport run_grid(i64 m_lo, i64 m_hi, i64 k_lo, i64 k_hi, i64 n_window,
                     const CheckSelection& sel, int jobs) {
    if (m_lo < 2 || m_hi < m_lo) throw InvalidParameter("bad m range (need m >= 2)");
    if (k_lo < 3 || k_hi < k_lo) throw InvalidParameter("bad k range (need k >= 3)");
    if (n_window < 0) throw InvalidParameter("window must be non-negative");

    const int m_count = static_cast<int>(m_hi - m_lo + 1);
    const int k_count = static_cast<int>(k_hi - k_lo + 1);
    std::vector<GridCell> cells(static_cast<std::size_t>(m_count) * k_count);

    parallel_for(static_cast<int>(cells.size()), jobs, [&](int idx) {
        const i64 m = m_lo + idx / k_count;
        const i64 k = k_lo + idx % k_count;
        auto stats = make_stats(sel);
        const i64 n_lo = wheel_order_threshold(m, k);
        for (i64 n = n_lo; n <= n_lo + n_window; ++n) {
            std::size_t s = 0;
            if (sel.degree_forcing) {
                const auto out = check_degree_forcing(n, m);
                record(stats[s++], out.pass, {m, k, n, -1}, out.lhs, out.rhs);
            }
            if (sel.delta_max) {
                const auto out = check_delta_max_branch(n, m, k);
                // On failure report whichever half broke (edge half first).
                record(stats[s++], out.pass, {m, k, n, -1},
                       out.edge_pass ? out.order_lhs : out.edge_lhs,
                       out.edge_pass ? out.order_rhs : out.edge_rhs);
            }
            if (sel.pmax) {
                const auto out = check_pmax_identity(n, m);
                record(stats[s++], out.le, {m, k, n, -1}, out.max, out.target);
                record(stats[s++], out.equal, {m, k, n, -1}, out.max, out.target);
            }
            if (sel.residual) {
                const auto out = check_residual_threshold(n, m, k);
                record(stats[s++], out.pass, {m, k, n, -1}, out.lhs, out.rhs);
            }
            if (sel.deletion) {
                for (i64 p = 2; p <= n / (m + 2); ++p) {
                    const auto out = check_deletion_edge_bound(n, m, k, p);
                    record(stats[s], out.pass, {m, k, n, p}, out.lhs, out.rhs);
                }
                ++s;
            }
        }
        cells[idx].checks = std::move(stats);
    });

    ProofReport report;
    report.m_lo = m_lo;
    report.m_hi = m_hi;
    report.k_lo = k_lo;
    report.k_hi = k_hi;
    report.n_window = n_window;
    report.checks = make_stats(sel);
    for (const auto& cell : cells) {
        for (std::size_t i = 0; i < cell.checks.size(); ++i) {
            report.checks[i].pass += cell.checks[i].pass;
            report.checks[i].fail += cell.checks[i].fail;
            report.checks[i].failures.insert(report.checks[i].failures.end(),
                                             cell.checks[i].failures.begin(),
                                             cell.checks[i].failures.end());
        }
    }
    for (const auto& st : report.checks)
        if (st.required) report.required_failures += st.fail;
    return report;
}

} // namespace tw
