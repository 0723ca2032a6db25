#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "noether/grading.hpp"
#include "noether/rational.hpp"

// Numerical model of one Gorenstein regular simple fibration in
// (1,2)-surfaces of type (d, d0): a bidegree-(0,10) divisor z^2 = y^5 + ...
// in the toric 4-fold F(d; d0).
namespace noether::fibration {

/// A validated type (d, d0). Construct through validate(); e = 3d - 2d0.
struct FibrationType {
    std::int64_t d = 0;
    std::int64_t d0 = 0;
    std::int64_t e = 0;

    Rational ratio() const { return Rational(d0, d); }

    friend bool operator==(const FibrationType&, const FibrationType&) = default;
};

/// Checks 1 <= d, 1 <= d0, d <= 4 d0, 2 d0 <= 3 d; throws OutOfRangeError
/// naming the violated inequality otherwise.
FibrationType validate(std::int64_t d, std::int64_t d0);

grading::WeightMatrix weight_matrix(const FibrationType& f);

struct NumericalInvariants {
    std::int64_t pg; // 3d - 2
    std::int64_t q;  // 0
    std::int64_t k3; // 4d - 6; satisfies 3 K^3 = 4 p_g - 10

    friend bool operator==(const NumericalInvariants&, const NumericalInvariants&) = default;
};

NumericalInvariants invariants(const FibrationType& f);

/// Degree of the binary form multiplying x0^a0 x1^a1 y^a2 in a bidegree-(0,10)
/// equation: -a0(d-d0) - a1(d0-2d). Verifies the identity
/// 2 deg = (a0+a1) d + (a1-a0) e before returning.
std::int64_t coefficient_degree(std::int64_t a0, std::int64_t a1, const FibrationType& f);

/// The z-free degree-10 monomials whose coefficient degree is negative, in
/// enumeration order. Empty exactly when d0 >= d.
std::vector<grading::XMonomial> vanishing_monomials(const FibrationType& f);

/// Singular locus of the general member, classified by the exact ratio d0/d.
struct SingularityClass {
    enum class Kind { Smooth, Terminal, Canonical };
    enum class CanonicalType { cA1, cA3, cA4, cD6, cE8 };

    Kind kind = Kind::Smooth;
    CanonicalType canonical_type = CanonicalType::cA1; // valid when Canonical
    std::int64_t terminal_count = 0;                   // 8 d0 - 7 d when Terminal
    RationalInterval matched;                          // the ratio interval matched

    /// "smooth", "terminal", or the canonical type name "cA1", ..., "cE8".
    std::string name() const;
};

SingularityClass classify_singularities(const FibrationType& f);

/// Monomial basis of the branch-divisor class: the bidegree-(0,10) section
/// terms with z excluded. Terms with zero contribution are exactly the
/// vanishing monomials.
std::vector<grading::SectionTerm> branch_basis(const FibrationType& f);

/// Image of the canonical map, determined by d0 alone.
struct CanonicalImage {
    enum class Kind { RationalNormalCurve, ConeOverRationalNormalCurve, HirzebruchSurface };

    Kind kind = Kind::HirzebruchSurface;
    std::int64_t degree = 0; // curve / cone cases
    std::int64_t e = 0;      // Hirzebruch parameter

    friend bool operator==(const CanonicalImage&, const CanonicalImage&) = default;
};

CanonicalImage canonical_image(const FibrationType& f);

enum class ModelStatus {
    CanonicalModel,                   // min(d, d0) >= 3: K ample
    MinimalNotCanonical,              // min(d, d0) == 2: crepant map to the canonical model
    NotOnNoetherLineOrNotGeneralType, // min(d, d0) == 1
};

struct ModelReport {
    ModelStatus status;
    bool canonical_model_is_isomorphic; // true iff min(d, d0) >= 3
};

ModelReport model_status(const FibrationType& f);

/// Position of (p_g, K^3) relative to the Noether line K^3 = (4 p_g - 10)/3,
/// by residue of p_g mod 3.
struct NoetherClass {
    enum class Kind { OnLine, AboveLine, Forbidden };

    Kind kind = Kind::Forbidden;
    Rational gap; // K^3 minus the line value, when AboveLine
};

Rational noether_line(std::int64_t pg);

/// Requires pg >= 7 (PGTooSmallError below that).
NoetherClass noether_classification(std::int64_t pg, const Rational& k3);

} // namespace noether::fibration
