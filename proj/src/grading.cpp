#include "noether/grading.hpp"

#include <tuple>

namespace noether::grading {

std::string XMonomial::str() const {
    if (a0 == 0 && a1 == 0 && a2 == 0 && a3 == 0) return "1";
    std::string s;
    auto factor = [&s](const char* name, std::int64_t exp) {
        if (exp == 0) return;
        if (!s.empty()) s += " ";
        s += name;
        if (exp != 1) s += "^" + std::to_string(exp);
    };
    factor("x0", a0);
    factor("x1", a1);
    factor("y", a2);
    factor("z", a3);
    return s;
}

bool enumeration_less(const XMonomial& a, const XMonomial& b) {
    return std::tie(a.a3, a.a2, a.a1, a.a0) < std::tie(b.a3, b.a2, b.a1, b.a0);
}

std::int64_t first_row_weight(const WeightMatrix& w, const XMonomial& m) {
    return checked::add(checked::mul(m.a0, w.x0_row1()), checked::mul(m.a1, w.x1_row1()));
}

std::vector<XMonomial> xmonomials_of_fibre_degree(std::int64_t fibre_degree) {
    std::vector<XMonomial> out;
    if (fibre_degree < 0) return out;
    for (std::int64_t a3 = 0; 5 * a3 <= fibre_degree; ++a3) {
        for (std::int64_t a2 = 0; 5 * a3 + 2 * a2 <= fibre_degree; ++a2) {
            std::int64_t rest = fibre_degree - 5 * a3 - 2 * a2;
            for (std::int64_t a1 = 0; a1 <= rest; ++a1) {
                out.push_back(XMonomial{rest - a1, a1, a2, a3});
            }
        }
    }
    return out;
}

std::vector<SectionTerm> section_terms(const WeightMatrix& w, Multidegree target,
                                       std::int64_t max_z_exponent) {
    std::vector<SectionTerm> out;
    for (const XMonomial& m : xmonomials_of_fibre_degree(target.w2)) {
        if (m.a3 > max_z_exponent) continue;
        std::int64_t deg = checked::sub(target.w1, first_row_weight(w, m));
        out.push_back(SectionTerm{m, deg, deg >= 0 ? checked::add(deg, 1) : 0});
    }
    return out;
}

std::int64_t count_sections(const WeightMatrix& w, Multidegree target,
                            std::int64_t max_z_exponent) {
    std::int64_t total = 0;
    for (const SectionTerm& t : section_terms(w, target, max_z_exponent)) {
        total = checked::add(total, t.contribution);
    }
    return total;
}

} // namespace noether::grading
