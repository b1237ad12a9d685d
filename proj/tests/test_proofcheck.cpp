#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "turanwheel/errors.hpp"
#include "turanwheel/formula.hpp"
#include "turanwheel/proofcheck.hpp"

using namespace tw;

TEST_CASE("degree forcing") {
    const auto a = check_degree_forcing(11, 2);
    CHECK(a.pass);
    CHECK(a.lhs == 44);
    CHECK(a.rhs == 46);
    const auto b = check_degree_forcing(8, 1);
    CHECK(b.pass);
    CHECK(b.lhs == 20);
    CHECK(b.rhs == 22);
    const auto odd = check_degree_forcing(13, 2); // numerator 117 is odd
    CHECK(odd.lhs == 58);
    CHECK(odd.pass);
}

TEST_CASE("delta max branch") {
    const auto a = check_delta_max_branch(11, 2, 3);
    CHECK(a.pass);
    CHECK(a.edge_lhs == 36);
    CHECK(a.edge_rhs == 33);
    CHECK(a.order_lhs == 10);
    CHECK(a.order_rhs == 8); // threshold(1,3) = 6k-10 = 8
    CHECK(check_delta_max_branch(19, 2, 4).pass);
    CHECK_THROWS_AS(check_delta_max_branch(10, 2, 3), InvalidParameter);
    CHECK_THROWS_AS(check_delta_max_branch(11, 1, 3), InvalidParameter);
}

TEST_CASE("pmax identity") {
    const auto a = check_pmax_identity(16, 2);
    CHECK(a.max == 96);
    CHECK(a.argmax == 4);
    CHECK(a.target == 96);
    CHECK(a.equal);
    CHECK(a.le);
    const auto b = check_pmax_identity(15, 2);
    CHECK(b.max == 84);
    CHECK(b.argmax == 3);
    CHECK(b.equal);
    const auto c = check_pmax_identity(11, 2); // single-point range {2}
    CHECK(c.max == 45);
    CHECK(c.argmax == 2);
    CHECK(c.equal);
    CHECK_THROWS_AS(check_pmax_identity(7, 2), RangeEmpty);
}

TEST_CASE("residual threshold") {
    const auto a = check_residual_threshold(11, 2, 3);
    CHECK(a.pass);
    CHECK(a.lhs == 9);
    CHECK(a.rhs == 8);
    const auto b = check_residual_threshold(12, 2, 3);
    CHECK(b.pass);
    CHECK(b.lhs == 9);
}

TEST_CASE("deletion edge bound") {
    const auto a = check_deletion_edge_bound(16, 2, 3, 4);
    CHECK(a.pass);
    CHECK(a.lhs == 49);
    CHECK(a.rhs == 48);
    const auto b = check_deletion_edge_bound(11, 2, 3, 2);
    CHECK(b.pass);
    CHECK(b.lhs == 28);
    CHECK(b.rhs == 27);
    const auto c = check_deletion_edge_bound(16, 2, 3, 2);
    CHECK(c.pass);
    CHECK(c.lhs == 69);
    CHECK(c.rhs == 65);
    CHECK_THROWS_AS(check_deletion_edge_bound(16, 2, 3, 5), InvalidParameter);
    CHECK_THROWS_AS(check_deletion_edge_bound(16, 2, 3, 1), InvalidParameter);
}

TEST_CASE("m = 2 reproduces the independently coded base-case lines") {
    for (std::int64_t n = 11; n <= 120; ++n) {
        // floor(3n^2/8) and its +1 right side
        const std::int64_t base_target = 3 * n * n / 8;
        CHECK(wheel_turan_value(n, 2) == base_target);
        const auto df = check_degree_forcing(n, 2);
        CHECK(df.lhs == (n - n / 4 - 1) * n / 2);
        CHECK(df.rhs == base_target + 1);
        if (n >= 16) {
            const auto pm = check_pmax_identity(n, 2);
            CHECK(pm.target == base_target);
            // brute force with the base-case expression floor((n-p)^2/3)
            std::int64_t best = 0;
            for (std::int64_t p = 2; p <= n / 4; ++p)
                best = std::max(best, p * (n - p) + (n - p) * (n - p) / 3);
            CHECK(pm.max == best);
        }
        for (std::int64_t p = 2; p <= n / 4; ++p) {
            const auto del = check_deletion_edge_bound(n, 2, 3, p);
            CHECK(del.rhs == (n - p) * (n - p) / 3);
            CHECK(del.lhs == base_target + 1 - p * (n - p));
        }
    }
}

TEST_CASE("single-point grid") {
    const ProofReport rep = run_grid(2, 2, 3, 3, 0);
    CHECK(rep.required_failures == 0);
    for (const auto& st : rep.checks) {
        CHECK(st.fail == 0);
        CHECK(st.pass == 1); // one (m,k,n) point, one valid p
        CHECK(st.failures.empty());
    }
}

TEST_CASE("grid runs are worker-count independent") {
    const ProofReport serial = run_grid(2, 4, 3, 4, 5, {}, 1);
    const ProofReport parallel = run_grid(2, 4, 3, 4, 5, {}, 3);
    REQUIRE(serial.checks.size() == parallel.checks.size());
    for (std::size_t i = 0; i < serial.checks.size(); ++i) {
        CHECK(serial.checks[i].name == parallel.checks[i].name);
        CHECK(serial.checks[i].pass == parallel.checks[i].pass);
        CHECK(serial.checks[i].fail == parallel.checks[i].fail);
    }
    CHECK(serial.required_failures == 0);
}

TEST_CASE("check selection") {
    CheckSelection only_pmax{false, false, true, false, false};
    const ProofReport rep = run_grid(2, 3, 3, 3, 2, only_pmax);
    REQUIRE(rep.checks.size() == 2);
    CHECK(rep.checks[0].name == "pmax_le");
    CHECK(rep.checks[1].name == "pmax_equal");
    CHECK(rep.checks[0].pass == 6); // two m values, three n each
    CHECK_THROWS_AS(run_grid(1, 2, 3, 3, 0), InvalidParameter);
    CHECK_THROWS_AS(run_grid(2, 2, 2, 3, 0), InvalidParameter);
}

TEST_CASE("pmax target equals the closed form recomputed longhand") {
    for (std::int64_t m = 2; m <= 6; ++m)
        for (std::int64_t n = 2 * (m + 2); n <= 2 * (m + 2) + 40; ++n) {
            const auto pm = check_pmax_identity(n, m);
            CHECK(pm.target == (m + 1) * n * n / (2 * (m + 2)));
        }
}
