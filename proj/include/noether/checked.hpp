#pragma once

#include <cstdint>

#include "noether/errors.hpp"

// Overflow-checked 64-bit signed arithmetic. Every formula evaluation in the
// library goes through these; an overflow raises OverflowError instead of
// wrapping silently.
namespace noether::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
    return r;
}

inline std::int64_t neg(std::int64_t a) {
    return sub(0, a);
}

// Floor/ceil division for a positive divisor; exact over negatives as well.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

} // namespace noether::checked
