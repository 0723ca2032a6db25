#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "noether/checked.hpp"

// Bigraded monomial bookkeeping for the coordinate ring of the toric 4-fold
// F(d; d0) with variables t0, t1, x0, x1, y, z and weight matrix
//
//     t0  t1    x0      x1    y  z
//      1   1  d-d0  d0-2d    0  0
//      0   0     1      1    2  5
//
// Section spaces of a bidegree (w1, w2) decompose as a direct sum over the
// monomials m in x0, x1, y, z of fibre degree w2, each tensored with the
// binary forms of degree w1 - (first-row weight of m) in t0, t1.
namespace noether::grading {

struct VariableWeight {
    const char* name;
    std::int64_t row1;
    std::int64_t row2;
};

/// The 2x6 integer grading of F(d; d0). The second row is the constant
/// vector (0, 0, 1, 1, 2, 5) independent of (d, d0).
struct WeightMatrix {
    std::int64_t d = 0;
    std::int64_t d0 = 0;

    std::int64_t x0_row1() const { return checked::sub(d, d0); }
    std::int64_t x1_row1() const { return checked::sub(d0, checked::mul(2, d)); }

    std::array<VariableWeight, 6> columns() const {
        return {{{"t0", 1, 0},
                 {"t1", 1, 0},
                 {"x0", x0_row1(), 1},
                 {"x1", x1_row1(), 1},
                 {"y", 0, 2},
                 {"z", 0, 5}}};
    }
};

/// Bidegree under the two grading rows; w2 is the fibre degree.
struct Multidegree {
    std::int64_t w1 = 0;
    std::int64_t w2 = 0;
};

/// Monomial x0^a0 x1^a1 y^a2 z^a3 in the fibre variables.
struct XMonomial {
    std::int64_t a0 = 0;
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    std::int64_t a3 = 0;

    std::int64_t fibre_degree() const {
        return checked::add(checked::add(a0, a1),
                            checked::add(checked::mul(2, a2), checked::mul(5, a3)));
    }

    bool z_free() const { return a3 == 0; }

    std::string str() const;

    friend bool operator==(const XMonomial&, const XMonomial&) = default;
};

/// Enumeration order of the library: lexicographic by (a3, a2, a1, a0).
bool enumeration_less(const XMonomial& a, const XMonomial& b);

/// One summand of a section-space decomposition: the monomial, the degree of
/// its binary-form coefficient in t0, t1, and the dimension it contributes.
struct SectionTerm {
    XMonomial monomial;
    std::int64_t coeff_degree = 0;
    std::int64_t contribution = 0; // coeff_degree + 1 if >= 0, else 0

    friend bool operator==(const SectionTerm&, const SectionTerm&) = default;
};

/// First-row weight of a monomial: a0(d-d0) + a1(d0-2d); y and z carry none.
std::int64_t first_row_weight(const WeightMatrix& w, const XMonomial& m);

/// All monomials with a0 + a1 + 2 a2 + 5 a3 = fibre_degree, in enumeration
/// order. Negative input yields an empty list.
std::vector<XMonomial> xmonomials_of_fibre_degree(std::int64_t fibre_degree);

/// Decomposition of the section space of the given bidegree over monomials
/// with a3 <= max_z_exponent (0 restricts to the divisor z = 0).
std::vector<SectionTerm> section_terms(const WeightMatrix& w, Multidegree target,
                                       std::int64_t max_z_exponent);

/// Dimension of the section space: the sum of the term contributions.
std::int64_t count_sections(const WeightMatrix& w, Multidegree target,
                            std::int64_t max_z_exponent);

} // namespace noether::grading
