#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "noether/checked.hpp"

namespace noether {

/// Exact rational number over overflow-checked int64. Always normalized:
/// denominator > 0, gcd(|num|, den) == 1. All stratum boundaries in the
/// library are exact fractions, so comparisons must never go through floats.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }

    std::int64_t floor() const { return checked::floor_div(num_, den_); }
    std::int64_t ceil() const { return checked::ceil_div(num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t g = std::gcd(a.den_, b.den_);
        std::int64_t bs = b.den_ / g;
        std::int64_t n = checked::add(checked::mul(a.num_, bs), checked::mul(b.num_, a.den_ / g));
        return Rational(n, checked::mul(a.den_, bs));
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        std::int64_t g1 = gcd_magnitude(a.num_, b.den_);
        std::int64_t g2 = gcd_magnitude(b.num_, a.den_);
        return Rational(checked::mul(a.num_ / g1, b.num_ / g2),
                        checked::mul(a.den_ / g2, b.den_ / g1));
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = checked::neg(num_);
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        // Denominators are positive, so cross multiplication preserves order.
        return checked::mul(a.num_, b.den_) < checked::mul(b.num_, a.den_);
    }

    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    /// Lowest-terms string, "p/q", or just "p" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    // gcd over unsigned magnitudes, so INT64_MIN numerators are handled; the
    // result fits in int64 because the positive argument does.
    static std::int64_t gcd_magnitude(std::int64_t n, std::int64_t positive) {
        std::uint64_t mag =
            n < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
        return static_cast<std::int64_t>(std::gcd(mag, static_cast<std::uint64_t>(positive)));
    }

    void normalize() {
        if (den_ < 0) {
            num_ = checked::neg(num_);
            den_ = checked::neg(den_);
        }
        std::int64_t g = gcd_magnitude(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Interval of rationals with per-endpoint inclusivity.
struct RationalInterval {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = false;

    bool contains(const Rational& x) const {
        if (x < lo || (x == lo && !lo_closed)) return false;
        if (hi < x || (x == hi && !hi_closed)) return false;
        return true;
    }

    std::string str() const {
        return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() +
               (hi_closed ? "]" : ")");
    }

    friend bool operator==(const RationalInterval& a, const RationalInterval& b) noexcept {
        return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
               a.hi_closed == b.hi_closed;
    }
};

} // namespace noether
