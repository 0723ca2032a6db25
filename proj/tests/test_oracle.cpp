#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <future>
#include <vector>

#include "noether/oracle.hpp"

using namespace noether;
using namespace noether::oracle;
using fibration::validate;

TEST_CASE("brute-force branch counts") {
    CHECK(h0_branch_bruteforce(validate(24, 36)) == 3036);
    CHECK(h0_branch_bruteforce(validate(24, 21)) == 3121);
    CHECK(h0_branch_bruteforce(validate(5, 7)) == 661); // 125 d + 36
}

TEST_CASE("brute-force automorphism dimensions") {
    CHECK(dim_aut_bruteforce(validate(24, 36)) == 82);
    CHECK(dim_aut_bruteforce(validate(24, 6)) == 176);
}

TEST_CASE("automorphism summands match the monomial decompositions") {
    // h^0 at (1,0) is always the pencil; at (d0-2d, 1) it is
    // max(0, 2d0 - 3d + 1) + 1; at (d-d0, 1) it is max(0, 3d - 2d0 + 1) + 1;
    // at (0,2) it is max(0, 2(d0-d) + 1) + (d+1) + (2(2d-d0) + 1) + 1.
    for (std::int64_t d = 5; d <= 40; ++d) {
        for (std::int64_t d0 = (d + 3) / 4; 2 * d0 <= 3 * d; ++d0) {
            auto s = aut_summands(validate(d, d0));
            CHECK(s[0] == 2);
            CHECK(s[1] == 2);
            CHECK(s[2] == std::max<std::int64_t>(0, 3 * d - 2 * d0 + 1) + 1);
            CHECK(s[3] == std::max<std::int64_t>(0, 2 * d0 - 3 * d + 1) + 1);
            CHECK(s[4] == std::max<std::int64_t>(0, 2 * (d0 - d) + 1) + (d + 1) +
                              (2 * (2 * d - d0) + 1) + 1);
        }
    }
}

TEST_CASE("the two middle summands are both pencils of x0, x1 when 2d0 = 3d") {
    for (std::int64_t d : {2, 4, 8, 24, 100}) {
        auto s = aut_summands(validate(d, 3 * d / 2));
        CHECK(s[2] == 2);
        CHECK(s[3] == 2);
    }
}

TEST_CASE("ratio-threshold table reproduces vanishing monomials") {
    for (std::int64_t d = 1; d <= 100; ++d) {
        for (std::int64_t d0 = (d + 3) / 4; 2 * d0 <= 3 * d; ++d0) {
            const auto f = validate(d, d0);
            CHECK(vanishing_from_ratio_thresholds(f) == fibration::vanishing_monomials(f));
        }
    }
}

TEST_CASE("verify_range rejects bad ranges") {
    CHECK_THROWS_AS(verify_range(60, 5), RangeInvalidError);
    CHECK_THROWS_AS(verify_range(4, 10), RangeInvalidError);
}

TEST_CASE("the full sweep passes") {
    const auto report = verify_range(5, 60);
    CHECK(report.passed());
    CHECK(report.failures.empty());
    CHECK(report.checks_run > 0);
}

TEST_CASE("single-d sweep covers the d0 range") {
    const auto report = verify_range(5, 5);
    CHECK(report.passed());
    // 6 strata (d0 = 2..7), several checks each, plus the profile checks.
    CHECK(report.checks_run > 6 * 5);
}

TEST_CASE("the d = 24 sweep covers the reference table rows") {
    const auto report = verify_range(24, 24);
    CHECK(report.passed());
    CHECK(report.checks_run >= 31 * 5); // d0 = 6..36, five per-stratum checks
}

TEST_CASE("verify_range is idempotent") {
    const auto a = verify_range(20, 30);
    const auto b = verify_range(20, 30);
    CHECK(a == b);
}

TEST_CASE("concurrent sweeps give sequential-identical reports") {
    const auto sequential = verify_range(5, 40);
    std::vector<std::future<VerificationReport>> futures;
    for (int i = 0; i < 4; ++i) {
        futures.push_back(std::async(std::launch::async, [] { return verify_range(5, 40); }));
    }
    for (auto& fut : futures) CHECK(fut.get() == sequential);
}
