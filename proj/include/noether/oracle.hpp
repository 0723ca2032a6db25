#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "noether/moduli.hpp"

// Independent brute-force re-derivations of every closed-form count, by
// direct monomial enumeration, plus the sweep verifier that cross-checks the
// two routes over a (d, d0) grid.
namespace noether::oracle {

using fibration::FibrationType;

/// Branch-class dimension by enumeration at bidegree (0, 10), z excluded.
std::int64_t h0_branch_bruteforce(const FibrationType& f);

/// The five automorphism summands: section counts at the bidegrees of
/// t0, t1, x0, x1, y — (1,0), (1,0), (d-d0,1), (d0-2d,1), (0,2) — z excluded.
std::array<std::int64_t, 5> aut_summands(const FibrationType& f);

/// Sum of the five summands minus 2.
std::int64_t dim_aut_bruteforce(const FibrationType& f);

/// The vanishing monomials read off the ratio-threshold table (each row of
/// z-free degree-10 monomials drops out once d0/d falls below its threshold),
/// independent of any coefficient-degree computation. Enumeration order.
std::vector<grading::XMonomial> vanishing_from_ratio_thresholds(const FibrationType& f);

struct CheckFailure {
    std::int64_t d = 0;
    std::int64_t d0 = 0; // 0 for whole-profile checks
    std::string check;
    std::string expected;
    std::string actual;

    friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct VerificationReport {
    std::int64_t d_min = 0;
    std::int64_t d_max = 0;
    std::int64_t checks_run = 0;
    std::vector<CheckFailure> failures; // sorted by (d, d0, check)

    bool passed() const { return failures.empty(); }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Runs, for every d in [d_min, d_max] and every valid d0: closed forms vs
/// brute force, delta dual-route agreement, vanishing-monomial table match,
/// integer monotonicity, discontinuity gaps, the top-stratum dimension
/// coincidence, and the status partition with its undetermined count.
/// Requires 5 <= d_min <= d_max.
VerificationReport verify_range(std::int64_t d_min, std::int64_t d_max);

} // namespace noether::oracle
