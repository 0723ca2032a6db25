#include "noether/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "noether/errors.hpp"

namespace noether::oracle {

namespace {

using checked::add;
using checked::floor_div;
using checked::mul;
using checked::sub;
using fibration::validate;
using grading::Multidegree;
using grading::XMonomial;

std::string monomials_str(const std::vector<XMonomial>& ms) {
    std::string s = "{";
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i > 0) s += ", ";
        s += ms[i].str();
    }
    return s + "}";
}

} // namespace

std::int64_t h0_branch_bruteforce(const FibrationType& f) {
    return grading::count_sections(fibration::weight_matrix(f), Multidegree{0, 10}, 0);
}

std::array<std::int64_t, 5> aut_summands(const FibrationType& f) {
    const grading::WeightMatrix w = fibration::weight_matrix(f);
    return {grading::count_sections(w, Multidegree{1, 0}, 0),
            grading::count_sections(w, Multidegree{1, 0}, 0),
            grading::count_sections(w, Multidegree{w.x0_row1(), 1}, 0),
            grading::count_sections(w, Multidegree{w.x1_row1(), 1}, 0),
            grading::count_sections(w, Multidegree{0, 2}, 0)};
}

std::int64_t dim_aut_bruteforce(const FibrationType& f) {
    std::int64_t total = 0;
    for (std::int64_t s : aut_summands(f)) total = add(total, s);
    return sub(total, 2);
}

std::vector<XMonomial> vanishing_from_ratio_thresholds(const FibrationType& f) {
    struct Row {
        Rational threshold; // monomials vanish once d0/d < threshold
        std::vector<XMonomial> monomials;
    };
    static const std::vector<Row> rows = {
        {Rational(1),
         {{10, 0, 0, 0}, {8, 0, 1, 0}, {6, 0, 2, 0}, {4, 0, 3, 0}, {2, 0, 4, 0}}},
        {Rational(7, 8), {{9, 1, 0, 0}}},
        {Rational(5, 6), {{7, 1, 1, 0}}},
        {Rational(3, 4), {{5, 1, 2, 0}}},
        {Rational(2, 3), {{8, 2, 0, 0}}},
        {Rational(1, 2), {{6, 2, 1, 0}, {3, 1, 3, 0}}},
    };

    const Rational r = f.ratio();
    std::vector<XMonomial> out;
    for (const Row& row : rows) {
        if (r < row.threshold) out.insert(out.end(), row.monomials.begin(), row.monomials.end());
    }
    std::sort(out.begin(), out.end(), grading::enumeration_less);
    return out;
}

VerificationReport verify_range(std::int64_t d_min, std::int64_t d_max) {
    if (d_min < 5)
        throw RangeInvalidError("verify_range requires d_min >= 5, got " + std::to_string(d_min));
    if (d_min > d_max)
        throw RangeInvalidError("verify_range requires d_min <= d_max, got [" +
                                std::to_string(d_min) + ", " + std::to_string(d_max) + "]");

    VerificationReport report{d_min, d_max, 0, {}};

    auto check = [&report](std::int64_t d, std::int64_t d0, const char* name, const auto& expected,
                           const auto& actual, auto&& to_str) {
        ++report.checks_run;
        if (!(expected == actual)) {
            report.failures.push_back(CheckFailure{d, d0, name, to_str(expected), to_str(actual)});
        }
    };
    auto int_str = [](std::int64_t v) { return std::to_string(v); };
    auto rat_str = [](const Rational& v) { return v.str(); };

    for (std::int64_t d = d_min; d <= d_max; ++d) {
        const std::int64_t d0_min = checked::ceil_div(d, 4);
        const std::int64_t d0_max = floor_div(mul(3, d), 2);
        const moduli::DeltaProfile profile = moduli::delta_profile(d);

        std::vector<std::int64_t> deltas;
        std::int64_t status_counts[4] = {0, 0, 0, 0};

        for (std::int64_t d0 = d0_min; d0 <= d0_max; ++d0) {
            const FibrationType f = validate(d, d0);

            check(d, d0, "h0_branch_closed_vs_bruteforce", moduli::h0_branch_closed(f),
                  h0_branch_bruteforce(f), int_str);
            check(d, d0, "dim_aut_closed_vs_bruteforce", moduli::dim_aut_closed(f),
                  dim_aut_bruteforce(f), int_str);

            // The two delta routes: difference of the closed forms vs the
            // piecewise-linear profile evaluated at the integer point.
            std::int64_t by_difference =
                sub(sub(moduli::h0_branch_closed(f), moduli::dim_aut_closed(f)), 1);
            check(d, d0, "delta_difference_vs_case_table", Rational(by_difference),
                  profile.evaluate(Rational(d0)), rat_str);

            check(d, d0, "vanishing_monomials_vs_ratio_table",
                  monomials_str(vanishing_from_ratio_thresholds(f)),
                  monomials_str(fibration::vanishing_monomials(f)),
                  [](const std::string& s) { return s; });

            deltas.push_back(moduli::delta(f));

            // Status recomputed bottom-up, the reverse of the classifier order.
            moduli::StratumStatus expected_status;
            if (mul(26, d0) <= sub(mul(25, d), 3)) {
                expected_status = moduli::StratumStatus::DenseInComponent;
            } else if (d0 < d) {
                expected_status = moduli::StratumStatus::Undetermined;
            } else if (d0 < d0_max) {
                expected_status = moduli::StratumStatus::InClosureOfTop;
            } else {
                expected_status = moduli::StratumStatus::TopStratum;
            }
            const moduli::StratumStatus actual_status = moduli::stratum_status(f);
            check(d, d0, "status_partition", static_cast<std::int64_t>(expected_status),
                  static_cast<std::int64_t>(actual_status), int_str);
            ++status_counts[static_cast<int>(actual_status)];
        }

        // Integer monotonicity: strictly decreasing on [ceil(d/4), d],
        // strictly increasing on [d, floor(3d/2)].
        for (std::int64_t d0 = d0_min; d0 < d0_max; ++d0) {
            std::int64_t cur = deltas[static_cast<std::size_t>(d0 - d0_min)];
            std::int64_t nxt = deltas[static_cast<std::size_t>(d0 + 1 - d0_min)];
            if (d0 < d) {
                check(d, d0, "delta_strictly_decreasing_below_d", true, cur > nxt,
                      [&](bool ok) {
                          return ok ? std::string("decreasing")
                                    : std::to_string(cur) + " -> " + std::to_string(nxt);
                      });
            } else {
                check(d, d0, "delta_strictly_increasing_above_d", true, cur < nxt,
                      [&](bool ok) {
                          return ok ? std::string("increasing")
                                    : std::to_string(cur) + " -> " + std::to_string(nxt);
                      });
            }
        }

        // The seven discontinuities and their gaps.
        static const Rational kBreakRatios[] = {Rational(1, 2), Rational(2, 3), Rational(3, 4),
                                                Rational(5, 6), Rational(7, 8), Rational(1),
                                                Rational(3, 2)};
        static const std::int64_t kGaps[] = {2, 1, 1, 1, 1, 4, -1};
        check(d, 0, "discontinuity_count", std::int64_t(7),
              std::int64_t(profile.discontinuities.size()), int_str);
        if (profile.discontinuities.size() == 7) {
            for (int i = 0; i < 7; ++i) {
                check(d, 0, "discontinuity_breakpoint", kBreakRatios[i] * Rational(d),
                      profile.discontinuities[static_cast<std::size_t>(i)].d0, rat_str);
                check(d, 0, "discontinuity_gap", kGaps[i],
                      profile.discontinuities[static_cast<std::size_t>(i)].gap, int_str);
            }
        }

        // Delta at the top equals delta at (25d - 3)/26, both 122d + 25.
        const Rational top_value(add(mul(122, d), 25));
        check(d, 0, "top_value_at_3d_over_2", top_value,
              profile.evaluate(Rational(mul(3, d), 2)), rat_str);
        check(d, 0, "top_value_at_25d_minus_3_over_26", top_value,
              profile.evaluate(Rational(sub(mul(25, d), 3), 26)), rat_str);

        check(d, 0, "top_stratum_count", std::int64_t(1), status_counts[0], int_str);
        check(d, 0, "in_closure_count", sub(d0_max, d), status_counts[1], int_str);
        std::int64_t undetermined = floor_div(add(d, 2), 26);
        check(d, 0, "dense_count", sub(sub(d, d0_min), undetermined), status_counts[2], int_str);
        check(d, 0, "undetermined_count", undetermined, status_counts[3], int_str);
    }

    std::sort(report.failures.begin(), report.failures.end(),
              [](const CheckFailure& a, const CheckFailure& b) {
                  return std::tie(a.d, a.d0, a.check) < std::tie(b.d, b.d0, b.check);
              });
    return report;
}

} // namespace noether::oracle
