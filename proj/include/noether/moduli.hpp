#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "noether/fibration.hpp"

// Closed-form dimension theory of the strata M_d(d0) and the global structure
// of the moduli space of canonical threefolds on the Noether line.
namespace noether::moduli {

using fibration::FibrationType;

/// Dimension of the space of branch-divisor classes (bidegree (0,10), z
/// excluded), as the 7-case closed form selected by the exact ratio d0/d.
std::int64_t h0_branch_closed(const FibrationType& f);

/// Dimension of the automorphism group of the ambient P(1,1,2)-bundle:
/// 3d+10 at d0 = 3d/2, 6d-2d0+9 for d <= d0 < 3d/2, 8d-4d0+8 for d0 < d.
std::int64_t dim_aut_closed(const FibrationType& f);

/// Stratum dimension Delta_d(d0) = h0_branch - dim_aut - 1. Evaluated through
/// both the difference formula and the 8-case table; a mismatch throws.
std::int64_t delta(const FibrationType& f);

/// One affine piece of the profile: slope * d0 + intercept_d * d + intercept_const.
struct ProfileSegment {
    RationalInterval d0_range;
    std::int64_t slope = 0;
    std::int64_t intercept_d = 0;
    std::int64_t intercept_const = 0;

    Rational value_at(const Rational& d0, std::int64_t d) const;
};

struct Discontinuity {
    Rational d0;      // breakpoint, a rational multiple of d
    std::int64_t gap; // value at the breakpoint minus the left limit
};

/// Delta_d as a piecewise-linear function of a real d0 in [d/4, 3d/2], with
/// its seven discontinuities (gaps 2, 1, 1, 1, 1, 4, -1 in ascending order).
struct DeltaProfile {
    std::int64_t d = 0;
    std::vector<ProfileSegment> segments;       // ascending, tiling [d/4, 3d/2]
    std::vector<Discontinuity> discontinuities; // at d0/d = 1/2, 2/3, 3/4, 5/6, 7/8, 1, 3/2

    Rational evaluate(const Rational& d0) const;
};

/// Requires d >= 5 (DTooSmallError below that).
DeltaProfile delta_profile(std::int64_t d);

enum class StratumStatus {
    TopStratum,       // d0 = floor(3d/2): dense in an irreducible component
    InClosureOfTop,   // d <= d0 < floor(3d/2)
    DenseInComponent, // 26 d0 <= 25d - 3
    Undetermined,     // (25d - 3)/26 < d0 < d: open case
};

/// Requires d >= 5 (DTooSmallError below that).
StratumStatus stratum_status(const FibrationType& f);

struct ComponentBounds {
    std::int64_t upper; // floor((p_g + 6)/4)
    std::int64_t lower; // upper - floor((p_g + 8)/78)

    friend bool operator==(const ComponentBounds&, const ComponentBounds&) = default;
};

/// Requires pg >= 11 and pg = 1 mod 3 (PGTooSmallError / EmptyModuliError).
ComponentBounds component_bounds(std::int64_t pg);

/// Maximal component dimension 169/3 p_g - 56 ceil((p_g+2)/12) + 386/3,
/// evaluated in exact rationals with an integrality assertion, cross-checked
/// against delta(d, ceil(d/4)). Same preconditions as component_bounds.
std::int64_t moduli_dimension(std::int64_t pg);

/// One row of the stratification table. status is absent when d < 5.
struct StratumRecord {
    std::int64_t d = 0;
    std::int64_t d0 = 0;
    std::int64_t h0_branch = 0;
    std::int64_t dim_aut = 0;
    std::int64_t delta = 0;
    fibration::SingularityClass singularity;
    fibration::CanonicalImage image;
    std::optional<StratumStatus> status;
    fibration::ModelStatus model = fibration::ModelStatus::CanonicalModel;
};

StratumRecord make_stratum_record(const FibrationType& f);

/// The global answer for one p_g: emptiness, strata, component bounds, and
/// the maximal dimension. The numeric fields are absent for empty moduli.
struct ModuliSummary {
    std::int64_t pg = 0;
    bool nonempty = false;
    std::optional<std::int64_t> d;
    std::vector<StratumRecord> strata; // ascending d0 in [ceil(d/4), floor(3d/2)]
    std::optional<ComponentBounds> components;
    std::optional<std::int64_t> dimension;
    std::optional<std::int64_t> argmax_d0; // always ceil(d/4)
};

/// Requires pg >= 11; empty (all residues != 1 mod 3) is a result, not an error.
ModuliSummary moduli_summary(std::int64_t pg);

} // namespace noether::moduli
