#ifndef RADO_CHECKED_HPP
#define RADO_CHECKED_HPP

#include <cstdint>

#include "rado/errors.hpp"

namespace rado {

using Int = std::int64_t;

// Overflow is a hard error throughout, never wraparound.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

} // namespace rado

#endif
