#include "noether/moduli.hpp"

#include <algorithm>
#include <stdexcept>

#include "noether/errors.hpp"

namespace noether::moduli {

namespace {

using checked::add;
using checked::ceil_div;
using checked::floor_div;
using checked::mul;
using checked::sub;

struct LinearForm {
    std::int64_t d_coeff;
    std::int64_t d0_coeff;
    std::int64_t constant;

    std::int64_t eval(std::int64_t d, std::int64_t d0) const {
        return add(add(mul(d_coeff, d), mul(d0_coeff, d0)), constant);
    }
};

struct PiecewiseCase {
    RationalInterval ratio; // interval of d0/d
    LinearForm form;
};

// Either a fixed constant or a fraction of d; avoids rebuilding Rational
// endpoints per call.
RationalInterval scale_ratio(const RationalInterval& ratio, std::int64_t d) {
    return RationalInterval{ratio.lo * Rational(d), ratio.hi * Rational(d), ratio.lo_closed,
                            ratio.hi_closed};
}

const RationalInterval kQuarterToHalf{Rational(1, 4), Rational(1, 2), true, false};
const RationalInterval kHalfToTwoThirds{Rational(1, 2), Rational(2, 3), true, false};
const RationalInterval kTwoThirdsToThreeQuarters{Rational(2, 3), Rational(3, 4), true, false};
const RationalInterval kThreeQuartersToFiveSixths{Rational(3, 4), Rational(5, 6), true, false};
const RationalInterval kFiveSixthsToSevenEighths{Rational(5, 6), Rational(7, 8), true, false};
const RationalInterval kSevenEighthsToOne{Rational(7, 8), Rational(1), true, false};
const RationalInterval kOneToThreeHalvesOpen{Rational(1), Rational(3, 2), true, false};
const RationalInterval kThreeHalvesPoint{Rational(3, 2), Rational(3, 2), true, true};
const RationalInterval kOneToThreeHalvesClosed{Rational(1), Rational(3, 2), true, true};

// h^0 of the branch-divisor class, by ratio interval (ascending).
const PiecewiseCase kH0Cases[] = {
    {kQuarterToHalf, {177, -60, 25}},
    {kHalfToTwoThirds, {174, -54, 27}},
    {kTwoThirdsToThreeQuarters, {170, -48, 28}},
    {kThreeQuartersToFiveSixths, {167, -44, 29}},
    {kFiveSixthsToSevenEighths, {162, -38, 30}},
    {kSevenEighthsToOne, {155, -30, 31}},
    {kOneToThreeHalvesClosed, {125, 0, 36}},
};

// dim Aut of the P(1,1,2)-bundle, by ratio interval (ascending).
const PiecewiseCase kAutCases[] = {
    {{Rational(1, 4), Rational(1), true, false}, {8, -4, 8}},
    {kOneToThreeHalvesOpen, {6, -2, 9}},
    {kThreeHalvesPoint, {3, 0, 10}},
};

// Delta_d(d0) = h^0 - dim Aut - 1, by ratio interval (ascending).
const PiecewiseCase kDeltaCases[] = {
    {kQuarterToHalf, {169, -56, 16}},
    {kHalfToTwoThirds, {166, -50, 18}},
    {kTwoThirdsToThreeQuarters, {162, -44, 19}},
    {kThreeQuartersToFiveSixths, {159, -40, 20}},
    {kFiveSixthsToSevenEighths, {154, -34, 21}},
    {kSevenEighthsToOne, {147, -26, 22}},
    {kOneToThreeHalvesOpen, {119, 2, 26}},
    {kThreeHalvesPoint, {122, 0, 25}},
};

template <std::size_t N>
const LinearForm& select_case(const PiecewiseCase (&cases)[N], const FibrationType& f,
                              const char* what) {
    const Rational r = f.ratio();
    for (const PiecewiseCase& c : cases) {
        if (c.ratio.contains(r)) return c.form;
    }
    throw OutOfRangeError(std::string(what) + ": ratio " + r.str() + " outside [1/4, 3/2]");
}

} // namespace

std::int64_t h0_branch_closed(const FibrationType& f) {
    return select_case(kH0Cases, f, "h0_branch_closed").eval(f.d, f.d0);
}

std::int64_t dim_aut_closed(const FibrationType& f) {
    return select_case(kAutCases, f, "dim_aut_closed").eval(f.d, f.d0);
}

std::int64_t delta(const FibrationType& f) {
    std::int64_t difference = sub(sub(h0_branch_closed(f), dim_aut_closed(f)), 1);
    std::int64_t table = select_case(kDeltaCases, f, "delta").eval(f.d, f.d0);
    if (difference != table)
        throw std::logic_error("delta: difference formula and case table disagree at (" +
                               std::to_string(f.d) + ", " + std::to_string(f.d0) + ")");
    return difference;
}

Rational ProfileSegment::value_at(const Rational& d0, std::int64_t d) const {
    return Rational(slope) * d0 + Rational(add(mul(intercept_d, d), intercept_const));
}

Rational DeltaProfile::evaluate(const Rational& d0) const {
    for (const ProfileSegment& s : segments) {
        if (s.d0_range.contains(d0)) return s.value_at(d0, d);
    }
    throw OutOfRangeError("DeltaProfile: d0 = " + d0.str() + " outside [d/4, 3d/2] for d = " +
                          std::to_string(d));
}

DeltaProfile delta_profile(std::int64_t d) {
    if (d < 5) throw DTooSmallError("delta_profile requires d >= 5, got " + std::to_string(d));

    DeltaProfile profile;
    profile.d = d;
    for (const PiecewiseCase& c : kDeltaCases) {
        profile.segments.push_back(ProfileSegment{scale_ratio(c.ratio, d), c.form.d0_coeff,
                                                  c.form.d_coeff, c.form.constant});
    }

    // Gap at each breakpoint: the value of the starting segment minus the left
    // limit from the previous one. The result is a constant independent of d.
    for (std::size_t i = 1; i < profile.segments.size(); ++i) {
        const ProfileSegment& prev = profile.segments[i - 1];
        const ProfileSegment& next = profile.segments[i];
        const Rational breakpoint = next.d0_range.lo;
        Rational gap = next.value_at(breakpoint, d) - prev.value_at(breakpoint, d);
        if (!gap.is_integer())
            throw std::logic_error("delta_profile: non-integer gap at d0 = " + breakpoint.str());
        profile.discontinuities.push_back(Discontinuity{breakpoint, gap.num()});
    }
    return profile;
}

StratumStatus stratum_status(const FibrationType& f) {
    if (f.d < 5)
        throw DTooSmallError("stratum_status requires d >= 5, got " + std::to_string(f.d));
    if (f.d0 == floor_div(mul(3, f.d), 2)) return StratumStatus::TopStratum;
    if (f.d0 >= f.d) return StratumStatus::InClosureOfTop;
    if (mul(26, f.d0) <= sub(mul(25, f.d), 3)) return StratumStatus::DenseInComponent;
    return StratumStatus::Undetermined;
}

namespace {

void require_nonempty_moduli(std::int64_t pg) {
    if (pg < 11) throw PGTooSmallError("p_g must be >= 11, got " + std::to_string(pg));
    if (pg % 3 != 1)
        throw EmptyModuliError("moduli space is empty: p_g = " + std::to_string(pg) +
                               " is not 1 mod 3");
}

} // namespace

ComponentBounds component_bounds(std::int64_t pg) {
    require_nonempty_moduli(pg);
    std::int64_t upper = floor_div(add(pg, 6), 4);
    std::int64_t lower = sub(upper, floor_div(add(pg, 8), 78));
    return ComponentBounds{upper, lower};
}

std::int64_t moduli_dimension(std::int64_t pg) {
    require_nonempty_moduli(pg);
    // 169/3 p_g - 56 ceil((p_g + 2)/12) + 386/3, exactly.
    Rational dim = Rational(169, 3) * Rational(pg) +
                   Rational(mul(-56, ceil_div(add(pg, 2), 12))) + Rational(386, 3);
    if (!dim.is_integer())
        throw std::logic_error("moduli_dimension: non-integer value at p_g = " +
                               std::to_string(pg));
    // The maximum is attained at the stratum with d0 = ceil(d/4).
    std::int64_t d = (pg + 2) / 3;
    std::int64_t at_argmax = delta(fibration::validate(d, ceil_div(d, 4)));
    if (dim.num() != at_argmax)
        throw std::logic_error("moduli_dimension: closed form disagrees with delta at p_g = " +
                               std::to_string(pg));
    return dim.num();
}

StratumRecord make_stratum_record(const FibrationType& f) {
    StratumRecord rec;
    rec.d = f.d;
    rec.d0 = f.d0;
    rec.h0_branch = h0_branch_closed(f);
    rec.dim_aut = dim_aut_closed(f);
    rec.delta = moduli::delta(f);
    rec.singularity = fibration::classify_singularities(f);
    rec.image = fibration::canonical_image(f);
    if (f.d >= 5) rec.status = stratum_status(f);
    rec.model = fibration::model_status(f).status;
    return rec;
}

ModuliSummary moduli_summary(std::int64_t pg) {
    if (pg < 11) throw PGTooSmallError("moduli_summary requires p_g >= 11, got " +
                                       std::to_string(pg));
    ModuliSummary out;
    out.pg = pg;
    out.nonempty = (pg % 3 == 1);
    if (!out.nonempty) return out;

    std::int64_t d = (pg + 2) / 3;
    out.d = d;
    std::int64_t d0_min = ceil_div(d, 4);
    std::int64_t d0_max = floor_div(mul(3, d), 2);
    for (std::int64_t d0 = d0_min; d0 <= d0_max; ++d0) {
        out.strata.push_back(make_stratum_record(fibration::validate(d, d0)));
    }
    out.components = component_bounds(pg);
    out.dimension = moduli_dimension(pg);
    out.argmax_d0 = d0_min;

    const auto max_it = std::max_element(
        out.strata.begin(), out.strata.end(),
        [](const StratumRecord& a, const StratumRecord& b) { return a.delta < b.delta; });
    if (max_it->d0 != d0_min || max_it->delta != *out.dimension)
        throw std::logic_error("moduli_summary: maximum not at d0 = ceil(d/4) for p_g = " +
                               std::to_string(pg));
    return out;
}

} // namespace noether::moduli
