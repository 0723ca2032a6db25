#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "noether/moduli.hpp"

using namespace noether;
using namespace noether::moduli;
using fibration::validate;

namespace {

struct Row {
    std::int64_t d0, h0, aut, delta;
};

// The d = 24 reference table (the first case with an undetermined stratum).
const Row kD24Rows[] = {
    {36, 3036, 82, 2953}, {35, 3036, 83, 2952}, {34, 3036, 85, 2950}, {33, 3036, 87, 2948},
    {25, 3036, 103, 2932}, {24, 3036, 105, 2930}, {23, 3061, 108, 2952}, {22, 3091, 112, 2978},
    {21, 3121, 116, 3004}, {8, 3793, 168, 3624}, {7, 3853, 172, 3680}, {6, 3913, 176, 3736},
};

} // namespace

TEST_CASE("closed forms reproduce the d = 24 table") {
    for (const Row& row : kD24Rows) {
        const auto f = validate(24, row.d0);
        CHECK(h0_branch_closed(f) == row.h0);
        CHECK(dim_aut_closed(f) == row.aut);
        CHECK(delta(f) == row.delta);
    }
}

TEST_CASE("h0_branch_closed case selection") {
    CHECK(h0_branch_closed(validate(24, 36)) == 3036);
    CHECK(h0_branch_closed(validate(24, 22)) == 3091);
    CHECK(h0_branch_closed(validate(24, 7)) == 3853);
    CHECK(h0_branch_closed(validate(5, 7)) == 661); // d <= d0 case: 125d + 36
}

TEST_CASE("dim_aut_closed case selection") {
    CHECK(dim_aut_closed(validate(24, 36)) == 82); // 2 d0 = 3 d
    CHECK(dim_aut_closed(validate(24, 35)) == 83);
    CHECK(dim_aut_closed(validate(24, 8)) == 168);
}

TEST_CASE("delta on the d = 5 range") {
    // Dual-path values; the brute-force oracle confirms them independently.
    const std::int64_t expected[] = {749, 698, 655, 631, 633, 635};
    for (std::int64_t d0 = 2; d0 <= 7; ++d0) {
        CHECK(delta(validate(5, d0)) == expected[d0 - 2]);
    }
}

TEST_CASE("delta profile lists all seven discontinuities with their gaps") {
    const auto profile = delta_profile(24);
    REQUIRE(profile.segments.size() == 8);
    REQUIRE(profile.discontinuities.size() == 7);
    const std::int64_t breakpoints[] = {12, 16, 18, 20, 21, 24, 36};
    const std::int64_t gaps[] = {2, 1, 1, 1, 1, 4, -1};
    for (int i = 0; i < 7; ++i) {
        CHECK(profile.discontinuities[i].d0 == Rational(breakpoints[i]));
        CHECK(profile.discontinuities[i].gap == gaps[i]);
    }
}

TEST_CASE("gap values are the same constants for every d in [5, 60]") {
    for (std::int64_t d = 5; d <= 60; ++d) {
        const auto profile = delta_profile(d);
        const std::int64_t gaps[] = {2, 1, 1, 1, 1, 4, -1};
        REQUIRE(profile.discontinuities.size() == 7);
        for (int i = 0; i < 7; ++i) CHECK(profile.discontinuities[i].gap == gaps[i]);
    }
}

TEST_CASE("segments agree with delta at every integer point") {
    for (std::int64_t d : {5, 11, 24, 37, 60}) {
        const auto profile = delta_profile(d);
        for (std::int64_t d0 = (d + 3) / 4; 2 * d0 <= 3 * d; ++d0) {
            CHECK(profile.evaluate(Rational(d0)) == Rational(delta(validate(d, d0))));
        }
    }
}

TEST_CASE("the top value coincides with the value at (25d - 3)/26") {
    for (std::int64_t d = 5; d <= 60; ++d) {
        const auto profile = delta_profile(d);
        const Rational top = profile.evaluate(Rational(3 * d, 2));
        CHECK(top == Rational(122 * d + 25));
        CHECK(top == profile.evaluate(Rational(25 * d - 3, 26)));
    }
}

TEST_CASE("profile domain and precondition") {
    CHECK_THROWS_AS(delta_profile(4), DTooSmallError);
    const auto profile = delta_profile(8);
    CHECK(profile.segments.front().d0_range.lo == Rational(2));
    CHECK(profile.segments.back().d0_range.hi == Rational(12));
    CHECK_THROWS_AS(profile.evaluate(Rational(13)), OutOfRangeError);
    CHECK_THROWS_AS(profile.evaluate(Rational(1)), OutOfRangeError);
}

TEST_CASE("integer-restricted monotonicity on both sides of d") {
    for (std::int64_t d = 5; d <= 60; ++d) {
        std::int64_t prev = 0;
        for (std::int64_t d0 = (d + 3) / 4; 2 * d0 <= 3 * d; ++d0) {
            std::int64_t cur = delta(validate(d, d0));
            if (d0 > (d + 3) / 4) {
                if (d0 <= d)
                    CHECK(cur < prev);
                else
                    CHECK(cur > prev);
            }
            prev = cur;
        }
    }
}

TEST_CASE("argmax of delta is unique at d0 = ceil(d/4)") {
    for (std::int64_t d = 5; d <= 200; ++d) {
        std::int64_t d0_min = (d + 3) / 4;
        std::int64_t best = delta(validate(d, d0_min));
        for (std::int64_t d0 = d0_min + 1; 2 * d0 <= 3 * d; ++d0) {
            CHECK(delta(validate(d, d0)) < best);
        }
    }
}

TEST_CASE("stratum status at d = 24") {
    CHECK(stratum_status(validate(24, 36)) == StratumStatus::TopStratum);
    CHECK(stratum_status(validate(24, 24)) == StratumStatus::InClosureOfTop);
    CHECK(stratum_status(validate(24, 23)) == StratumStatus::Undetermined);
    CHECK(stratum_status(validate(24, 22)) == StratumStatus::DenseInComponent);
    CHECK_THROWS_AS(stratum_status(validate(4, 3)), DTooSmallError);
}

TEST_CASE("undetermined strata count floor((d+2)/26), none below d = 24") {
    for (std::int64_t d = 5; d <= 500; ++d) {
        std::int64_t undetermined = 0;
        for (std::int64_t d0 = (d + 3) / 4; 2 * d0 <= 3 * d; ++d0) {
            if (stratum_status(validate(d, d0)) == StratumStatus::Undetermined) ++undetermined;
        }
        CHECK(undetermined == (d + 2) / 26);
        if (d < 24) CHECK(undetermined == 0);
    }
}

TEST_CASE("component bounds") {
    CHECK(component_bounds(70) == ComponentBounds{19, 18});
    CHECK(component_bounds(13) == ComponentBounds{4, 4});
    CHECK(component_bounds(67) == ComponentBounds{18, 18});
    CHECK_THROWS_AS(component_bounds(12), EmptyModuliError);
    CHECK_THROWS_AS(component_bounds(9), PGTooSmallError);
}

TEST_CASE("moduli dimension closed form") {
    CHECK(moduli_dimension(70) == 3736);
    CHECK(moduli_dimension(13) == 749);
    CHECK(moduli_dimension(16) == 918);
    CHECK_THROWS_AS(moduli_dimension(11), EmptyModuliError); // 11 = 2 mod 3
    CHECK_THROWS_AS(moduli_dimension(10), PGTooSmallError);
}

TEST_CASE("stratum record is self-consistent") {
    const auto rec = make_stratum_record(validate(24, 23));
    CHECK(rec.h0_branch == 3061);
    CHECK(rec.dim_aut == 108);
    CHECK(rec.delta == rec.h0_branch - rec.dim_aut - 1);
    CHECK(rec.singularity.name() == "terminal");
    REQUIRE(rec.status.has_value());
    CHECK(*rec.status == StratumStatus::Undetermined);
    CHECK(rec.model == fibration::ModelStatus::CanonicalModel);

    // Below d = 5 the status is not defined, but the record still works.
    const auto small = make_stratum_record(validate(4, 2));
    CHECK_FALSE(small.status.has_value());
    CHECK(small.model == fibration::ModelStatus::MinimalNotCanonical);
    CHECK(small.delta == small.h0_branch - small.dim_aut - 1);
}

TEST_CASE("moduli summary for p_g = 70") {
    const auto summary = moduli_summary(70);
    CHECK(summary.nonempty);
    CHECK(summary.d == 24);
    CHECK(summary.strata.size() == 31); // d0 = 6..36
    CHECK(summary.strata.front().d0 == 6);
    CHECK(summary.strata.back().d0 == 36);
    CHECK(summary.components == ComponentBounds{19, 18});
    CHECK(summary.dimension == 3736);
    CHECK(summary.argmax_d0 == 6);
    for (const auto& rec : summary.strata) {
        CHECK(rec.delta == rec.h0_branch - rec.dim_aut - 1);
        CHECK(rec.status.has_value());
    }
}

TEST_CASE("moduli summary for p_g = 13") {
    const auto summary = moduli_summary(13);
    CHECK(summary.nonempty);
    CHECK(summary.d == 5);
    CHECK(summary.strata.size() == 6); // d0 = 2..7
    CHECK(summary.components == ComponentBounds{4, 4});
    CHECK(summary.dimension == 749);
    CHECK(summary.argmax_d0 == 2);
    // d0 = 2 rows are visible as minimal-but-not-canonical models.
    CHECK(summary.strata.front().model == fibration::ModelStatus::MinimalNotCanonical);
}

TEST_CASE("moduli summary emptiness and preconditions") {
    const auto empty = moduli_summary(12);
    CHECK_FALSE(empty.nonempty);
    CHECK(empty.strata.empty());
    CHECK_FALSE(empty.d.has_value());
    CHECK_FALSE(empty.dimension.has_value());

    CHECK_THROWS_AS(moduli_summary(10), PGTooSmallError); // d = 4 is below the classification
    for (std::int64_t pg = 11; pg <= 300; ++pg) {
        CHECK(moduli_summary(pg).nonempty == (pg % 3 == 1));
    }
}
