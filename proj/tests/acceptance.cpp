// Acceptance suite: one line per criterion, nonzero exit iff any fails.
// Each criterion pins its expected values and time budget in code.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "turanwheel/detect.hpp"
#include "turanwheel/formula.hpp"
#include "turanwheel/graph.hpp"
#include "turanwheel/iso.hpp"
#include "turanwheel/parallel.hpp"
#include "turanwheel/proofcheck.hpp"
#include "turanwheel/turan.hpp"

using namespace tw;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void report(int id, const char* title, bool pass, const std::string& detail,
            double seconds) {
    std::printf("[%s] criterion %d: %s — %s (%.1fs)\n", pass ? "PASS" : "FAIL", id,
                title, detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string class_label(const Graph& g) { return encode_graph6(canonical_copy(g)); }

// 1. triangle values floor(n^2/4) for n = 3..9 with the balanced bipartite
//    witness present each time; under 5 minutes total.
void criterion1() {
    Timer timer;
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 9 && pass; ++n) {
        const TuranResult res = exact_turan(n, {0, 3});
        const std::string want = class_label(make_turan_graph(n, 2));
        const bool witness_ok =
            std::find(res.witnesses.begin(), res.witnesses.end(), want) !=
            res.witnesses.end();
        if (res.value != n * n / 4 || !witness_ok) {
            pass = false;
            detail = "n=" + std::to_string(n) + " value " + std::to_string(res.value);
        }
    }
    const double secs = timer.seconds();
    if (pass && secs >= 300.0) {
        pass = false;
        detail = "over the 5 minute budget";
    }
    if (pass) detail = "ex(n,K_3) = floor(n^2/4), bipartite witness found, n = 3..9";
    report(1, "triangle reproduction", pass, detail, secs);
}

// 2. K_4 values floor(n^2/3) for n = 4..9.
void criterion2() {
    Timer timer;
    bool pass = true;
    std::string detail = "ex(n,K_4) = floor(n^2/3), n = 4..9";
    for (int n = 4; n <= 9 && pass; ++n) {
        const int value = exact_turan(n, {1, 3}).value;
        if (value != n * n / 3) {
            pass = false;
            detail = "n=" + std::to_string(n) + " got " + std::to_string(value);
        }
    }
    report(2, "K_4 reproduction", pass, detail, timer.seconds());
}

// 3. even-wheel values at the edge of the regime: ex(8, W_6) = 21 and
//    ex(9, W_6) = 27, each under 30 minutes.
void criterion3() {
    Timer timer;
    bool pass = true;
    std::string detail;
    for (const auto& [n, expected] : {std::pair{8, 21}, std::pair{9, 27}}) {
        Timer single;
        const TuranResult res = exact_turan(n, {1, 5});
        const std::string turan_label = class_label(make_turan_graph(n, 3));
        const bool witness_ok =
            std::find(res.witnesses.begin(), res.witnesses.end(), turan_label) !=
            res.witnesses.end();
        if (res.value != expected || !witness_ok || single.seconds() >= 1800.0) {
            pass = false;
            detail = "n=" + std::to_string(n) + " got " + std::to_string(res.value);
        }
    }
    if (pass) detail = "ex(8, K_1 v C_5) = 21, ex(9, K_1 v C_5) = 27, Turán witnesses";
    report(3, "even-wheel values at desk scale", pass, detail, timer.seconds());
}

// 4. construction side as stated: T_{m+2}(n) has exactly the closed-form
//    edge count on the whole grid, the detector confirms freeness on the
//    small corner, and the chromatic barrier holds everywhere.  The edge
//    claim is checked literally; where it fails, the diagnosis is printed
//    (the floor form exceeds what any (m+2)-partite graph can carry by
//    floor(s(r-s)/(2r)), s = n mod (m+2), nonzero from m = 6 on).
void criterion4() {
    Timer timer;
    long points = 0;
    long edge_violations = 0, other_violations = 0, undiagnosed = 0;
    std::string first_edge;
    for (int m = 1; m <= 10; ++m) {
        const int r = m + 2;
        for (int k = 3; k <= 10; ++k) {
            const std::int64_t thr = wheel_order_threshold(m, k);
            for (std::int64_t n = thr; n <= thr + 50 && n <= 64; ++n) {
                ++points;
                const Graph turan = make_turan_graph(static_cast<int>(n), r);
                if (turan.edge_count() != wheel_turan_value(n, m)) {
                    ++edge_violations;
                    if (first_edge.empty())
                        first_edge = "m=" + std::to_string(m) +
                                     " k=" + std::to_string(k) +
                                     " n=" + std::to_string(n) + ": T has " +
                                     std::to_string(turan.edge_count()) +
                                     ", closed form says " +
                                     std::to_string(wheel_turan_value(n, m));
                    const std::int64_t s = n % r;
                    if (wheel_turan_value(n, m) - turan.edge_count() !=
                        s * (r - s) / (2 * r))
                        ++undiagnosed;
                }
                if (n <= 12 && m <= 3 && k <= 4 &&
                    contains_wheel(turan, {m, 2 * k - 1}))
                    ++other_violations;
                if (n <= 32) {
                    if (chromatic_number(turan) != m + 2) ++other_violations;
                } else {
                    // every part nonempty, so chi = number of parts = m+2
                    for (int p : balanced_parts(static_cast<int>(n), r).parts)
                        if (p < 1) ++other_violations;
                }
            }
        }
    }
    const bool pass = edge_violations == 0 && other_violations == 0;
    std::string detail;
    if (pass) {
        detail = std::to_string(points) + " grid points, zero violations";
    } else {
        detail = std::to_string(points) + " points; edge-count claim false at " +
                 std::to_string(edge_violations) + " (first: " + first_edge + ")";
        detail += undiagnosed == 0
                      ? "; every gap equals the floor(s(r-s)/(2r)) overshoot"
                      : "; " + std::to_string(undiagnosed) + " gaps unexplained";
        detail += other_violations == 0
                      ? "; wheel-freeness and chromatic barrier hold at all points"
                      : "; " + std::to_string(other_violations) + " other violations";
    }
    report(4, "construction attains the closed form, wheel-free", pass, detail,
           timer.seconds());
}

// 5. chi(K_m v C_{2k-1}) = m+3 and one edge drops it to m+2, for
//    m = 0..3, k = 2..4.
void criterion5() {
    Timer timer;
    bool pass = true;
    std::string detail = "chi = m+3 and a critical edge exists, m <= 3, k <= 4";
    for (int m = 0; m <= 3 && pass; ++m) {
        for (int k = 2; k <= 4 && pass; ++k) {
            const WheelSpec spec{m, 2 * k - 1};
            const Graph h = wheel_graph(spec);
            if (chromatic_number(h) != m + 3) {
                pass = false;
                detail = "chi off at m=" + std::to_string(m) + " k=" + std::to_string(k);
                break;
            }
            const auto [u, v] = find_critical_edge(spec);
            GraphBuilder b(h);
            b.remove_edge(u, v);
            if (chromatic_number(b.view()) != m + 2) {
                pass = false;
                detail = "removed edge not critical at m=" + std::to_string(m);
            }
        }
    }
    report(5, "chromatic claims", pass, detail, timer.seconds());
}

// 6. the full arithmetic grid: m = 2..12, k = 3..12, window 300; zero
//    failures on the required checks, <= holds everywhere in the p-max
//    scan, equality at the two spot points; under a minute.
void criterion6() {
    Timer timer;
    bool pass = true;
    std::string detail;
    const ProofReport rep = run_grid(2, 12, 3, 12, 300, {}, default_jobs());
    std::uint64_t points = 0;
    for (const auto& st : rep.checks) {
        points = std::max(points, st.pass + st.fail);
        if (st.name == "pmax_equal") continue; // informational, tracked separately
        if (st.fail != 0) {
            pass = false;
            detail = st.name + " failed " + std::to_string(st.fail) + " times";
        }
    }
    const auto spot16 = check_pmax_identity(16, 2);
    const auto spot15 = check_pmax_identity(15, 2);
    if (!(spot16.max == 96 && spot16.equal && spot15.max == 84 && spot15.equal)) {
        pass = false;
        detail = "spot equality points off";
    }
    const double secs = timer.seconds();
    if (pass && secs >= 60.0) {
        pass = false;
        detail = "over the 1 minute budget";
    }
    if (pass)
        detail = std::to_string(points) + " (m,k,n) points, zero required failures, "
                 "p-max <= everywhere, equality at (16,2) and (15,2)";
    report(6, "proof-arithmetic grid", pass, detail, secs);
}

// 7. threshold consistency with the even-wheel bound and the m = 2 line.
void criterion7() {
    Timer timer;
    bool pass = true;
    std::string detail = "threshold(1,k) = 6k-10 for k = 3..50; threshold(2,3) = 11";
    for (std::int64_t k = 3; k <= 50; ++k)
        if (wheel_order_threshold(1, k) != 6 * k - 10) {
            pass = false;
            detail = "mismatch at k=" + std::to_string(k);
        }
    if (wheel_order_threshold(2, 3) != 11 || 8 * 3 - 13 != 11) {
        pass = false;
        detail = "m=2 base line off";
    }
    report(7, "threshold consistency", pass, detail, timer.seconds());
}

// 8. property suites: detector vs oracle on every graph of order <= 7;
//    canonical iso-invariance over 1000 relabelings per order <= 9;
//    enumeration counts 11 and 34 at n = 4, 5 against the labeled oracle;
//    graph6 round-trip at every order <= 64.
void criterion8() {
    Timer timer;
    bool pass = true;
    std::string detail;

    const WheelSpec specs[] = {{0, 3}, {1, 3}, {2, 3}, {0, 5}, {1, 5}, {2, 5}};
    for (int n = 0; n <= 7 && pass; ++n) {
        enumerate_graphs(n, 0, [&](const Graph& g) {
            if (!pass) return;
            for (const auto& spec : specs) {
                const auto got = contains_wheel(g, spec);
                if (got.has_value() !=
                    oracle::contains_subgraph(g, wheel_graph(spec))) {
                    pass = false;
                    detail = "detector/oracle disagree at n=" + std::to_string(n);
                    return;
                }
                if (got && !witness_is_valid(g, spec, *got)) {
                    pass = false;
                    detail = "invalid witness at n=" + std::to_string(n);
                    return;
                }
            }
        });
    }

    std::mt19937_64 rng(2026);
    for (int n = 1; n <= 9 && pass; ++n) {
        for (int rep = 0; rep < 1000; ++rep) {
            const Graph g =
                oracle::random_graph(n, static_cast<int>(rng() % 101), rng);
            const auto perm = oracle::random_permutation(n, rng);
            if (!(canonical_form(g) == canonical_form(oracle::permute_graph(g, perm)))) {
                pass = false;
                detail = "canonical form not iso-invariant at n=" + std::to_string(n);
                break;
            }
        }
    }

    if (pass) {
        const auto count4 = enumerate_graphs(4, 0, [](const Graph&) {});
        const auto count5 = enumerate_graphs(5, 0, [](const Graph&) {});
        if (count4 != 11 || count5 != 34 || oracle::count_classes(4) != 11 ||
            oracle::count_classes(5) != 34) {
            pass = false;
            detail = "class counts off";
        }
    }

    for (int n = 0; n <= 64 && pass; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const Graph g =
                oracle::random_graph(n, static_cast<int>(rng() % 101), rng);
            if (decode_graph6(encode_graph6(g)) != g) {
                pass = false;
                detail = "graph6 round-trip failed at n=" + std::to_string(n);
                break;
            }
        }
    }

    if (pass)
        detail = "oracle agreement to order 7, iso-invariance, class counts, "
                 "graph6 round-trips";
    report(8, "property suites", pass, detail, timer.seconds());
}

// 9. the n = 11 regime point is out of exhaustive reach; the accepted
//    evidence is that the construction attains 45 and ten seeded restarts
//    never exceed it.
void criterion9() {
    Timer timer;
    SearchConfig cfg;
    cfg.budget = 3000;
    cfg.restarts = 10;
    cfg.seed = 2026;
    const LowerBoundResult res = heuristic_lower_bound(11, {2, 5}, cfg);
    const bool pass = res.edges == 45 && !contains_wheel(res.best, {2, 5});
    report(9, "heuristic pins ex(11, K_2 v C_5) = 45", pass,
           "best over 10 restarts = " + std::to_string(res.edges), timer.seconds());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
