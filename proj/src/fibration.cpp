#include "noether/fibration.hpp"

#include <stdexcept>

#include "noether/errors.hpp"

namespace noether::fibration {

namespace {

std::string pair_str(std::int64_t d, std::int64_t d0) {
    return "(d, d0) = (" + std::to_string(d) + ", " + std::to_string(d0) + ")";
}

} // namespace

FibrationType validate(std::int64_t d, std::int64_t d0) {
    if (d < 1) throw OutOfRangeError(pair_str(d, d0) + " violates d >= 1");
    if (d0 < 1) throw OutOfRangeError(pair_str(d, d0) + " violates d0 >= 1");
    if (d > checked::mul(4, d0)) throw OutOfRangeError(pair_str(d, d0) + " violates d <= 4*d0");
    if (checked::mul(2, d0) > checked::mul(3, d))
        throw OutOfRangeError(pair_str(d, d0) + " violates 2*d0 <= 3*d");
    std::int64_t e = checked::sub(checked::mul(3, d), checked::mul(2, d0));
    return FibrationType{d, d0, e};
}

grading::WeightMatrix weight_matrix(const FibrationType& f) {
    return grading::WeightMatrix{f.d, f.d0};
}

NumericalInvariants invariants(const FibrationType& f) {
    NumericalInvariants inv{checked::sub(checked::mul(3, f.d), 2), 0,
                            checked::sub(checked::mul(4, f.d), 6)};
    // 3 K^3 = 4 p_g - 10: the Noether line identity.
    if (checked::mul(3, inv.k3) != checked::sub(checked::mul(4, inv.pg), 10))
        throw std::logic_error("invariants: Noether line identity failed");
    return inv;
}

std::int64_t coefficient_degree(std::int64_t a0, std::int64_t a1, const FibrationType& f) {
    if (a0 < 0 || a1 < 0) throw OutOfRangeError("coefficient_degree: negative exponent");
    // -a0(d - d0) - a1(d0 - 2d)
    std::int64_t deg = checked::sub(checked::neg(checked::mul(a0, checked::sub(f.d, f.d0))),
                                    checked::mul(a1, checked::sub(f.d0, checked::mul(2, f.d))));
    // Parity identity: 2 deg = (a0 + a1) d + (a1 - a0) e.
    std::int64_t twice = checked::add(checked::mul(checked::add(a0, a1), f.d),
                                      checked::mul(checked::sub(a1, a0), f.e));
    if (twice != checked::mul(2, deg))
        throw std::logic_error("coefficient_degree: parity identity failed");
    return deg;
}

std::vector<grading::XMonomial> vanishing_monomials(const FibrationType& f) {
    std::vector<grading::XMonomial> out;
    for (const grading::XMonomial& m : grading::xmonomials_of_fibre_degree(10)) {
        if (!m.z_free()) continue;
        if (coefficient_degree(m.a0, m.a1, f) < 0) out.push_back(m);
    }
    return out;
}

std::string SingularityClass::name() const {
    switch (kind) {
    case Kind::Smooth:
        return "smooth";
    case Kind::Terminal:
        return "terminal";
    case Kind::Canonical:
        switch (canonical_type) {
        case CanonicalType::cA1: return "cA1";
        case CanonicalType::cA3: return "cA3";
        case CanonicalType::cA4: return "cA4";
        case CanonicalType::cD6: return "cD6";
        case CanonicalType::cE8: return "cE8";
        }
    }
    throw std::logic_error("SingularityClass::name: bad kind");
}

SingularityClass classify_singularities(const FibrationType& f) {
    const Rational r = f.ratio();
    SingularityClass out;

    // The isolated smooth ratio 7/8 takes precedence over the terminal window.
    if (r == Rational(7, 8)) {
        out.kind = SingularityClass::Kind::Smooth;
        out.matched = RationalInterval{Rational(7, 8), Rational(7, 8), true, true};
        return out;
    }
    if (Rational(1) <= r) {
        out.kind = SingularityClass::Kind::Smooth;
        out.matched = RationalInterval{Rational(1), Rational(3, 2), true, true};
        return out;
    }
    if (Rational(7, 8) < r) { // 7/8 < d0/d < 1
        out.kind = SingularityClass::Kind::Terminal;
        out.terminal_count =
            checked::sub(checked::mul(8, f.d0), checked::mul(7, f.d)); // counted with multiplicity
        out.matched = RationalInterval{Rational(7, 8), Rational(1), false, false};
        if (out.terminal_count <= 0)
            throw std::logic_error("classify_singularities: non-positive terminal count");
        return out;
    }

    struct CanonicalCase {
        RationalInterval range;
        SingularityClass::CanonicalType type;
    };
    static const CanonicalCase cases[] = {
        {{Rational(5, 6), Rational(7, 8), true, false}, SingularityClass::CanonicalType::cA1},
        {{Rational(3, 4), Rational(5, 6), true, false}, SingularityClass::CanonicalType::cA3},
        {{Rational(2, 3), Rational(3, 4), true, false}, SingularityClass::CanonicalType::cA4},
        {{Rational(1, 2), Rational(2, 3), true, false}, SingularityClass::CanonicalType::cD6},
        {{Rational(1, 4), Rational(1, 2), true, false}, SingularityClass::CanonicalType::cE8},
    };
    for (const CanonicalCase& c : cases) {
        if (c.range.contains(r)) {
            out.kind = SingularityClass::Kind::Canonical;
            out.canonical_type = c.type;
            out.matched = c.range;
            return out;
        }
    }
    throw OutOfRangeError("classify_singularities: ratio " + r.str() +
                          " outside [1/4, 3/2]");
}

std::vector<grading::SectionTerm> branch_basis(const FibrationType& f) {
    return grading::section_terms(weight_matrix(f), grading::Multidegree{0, 10}, 0);
}

CanonicalImage canonical_image(const FibrationType& f) {
    CanonicalImage img;
    if (f.d0 == 1) {
        img.kind = CanonicalImage::Kind::RationalNormalCurve;
        img.degree = checked::sub(checked::mul(3, f.d), 3);
    } else if (f.d0 == 2) {
        img.kind = CanonicalImage::Kind::ConeOverRationalNormalCurve;
        img.degree = checked::sub(checked::mul(3, f.d), 4);
    } else {
        img.kind = CanonicalImage::Kind::HirzebruchSurface;
        img.e = f.e;
    }
    return img;
}

ModelReport model_status(const FibrationType& f) {
    std::int64_t m = std::min(f.d, f.d0);
    ModelStatus s = m >= 3   ? ModelStatus::CanonicalModel
                    : m == 2 ? ModelStatus::MinimalNotCanonical
                             : ModelStatus::NotOnNoetherLineOrNotGeneralType;
    return ModelReport{s, m >= 3};
}

Rational noether_line(std::int64_t pg) {
    return Rational(checked::sub(checked::mul(4, pg), 10), 3);
}

NoetherClass noether_classification(std::int64_t pg, const Rational& k3) {
    if (pg < 7) throw PGTooSmallError("noether_classification requires p_g >= 7, got " +
                                      std::to_string(pg));
    const Rational line = noether_line(pg);
    NoetherClass out;
    switch (pg % 3) {
    case 1:
        if (k3 == line) {
            out.kind = NoetherClass::Kind::OnLine;
        } else if (k3 >= line + Rational(1, 2)) {
            out.kind = NoetherClass::Kind::AboveLine;
            out.gap = k3 - line;
        } else {
            out.kind = NoetherClass::Kind::Forbidden; // below the line or in (L, L + 1/2)
        }
        break;
    case 2:
        if (k3 >= line + Rational(1, 6)) {
            out.kind = NoetherClass::Kind::AboveLine;
            out.gap = k3 - line;
        }
        break;
    case 0:
        if (k3 >= line + Rational(1, 3)) {
            out.kind = NoetherClass::Kind::AboveLine;
            out.gap = k3 - line;
        }
        break;
    }
    return out;
}

} // namespace noether::fibration
