#pragma once

#include <cstdint>

#include "ruled/error.hpp"

// Overflow-checked 64-bit integer arithmetic. Every lattice computation goes
// through these so a result is either exact or an Overflow error.

namespace ruled {

using Int = std::int64_t;

namespace checked {

inline Int add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r))
        throw Error(ErrorCode::Overflow, "integer overflow in addition");
    return r;
}

inline Int sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r))
        throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
    return r;
}

inline Int mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r))
        throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
    return r;
}

inline Int neg(Int x) { return sub(0, x); }

/// Floor division, rounding toward -infinity. `den` must be nonzero.
inline Int floor_div(Int num, Int den) {
    if (den == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
    if (num == INT64_MIN && den == -1)
        throw Error(ErrorCode::Overflow, "integer overflow in division");
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

/// Ceiling division, rounding toward +infinity. `den` must be nonzero.
inline Int ceil_div(Int num, Int den) {
    if (den == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
    if (num == INT64_MIN && den == -1)
        throw Error(ErrorCode::Overflow, "integer overflow in division");
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
    return q;
}

/// Largest r >= 0 with r*r <= n; n must be nonnegative.
inline Int isqrt(Int n) {
    if (n < 0) throw Error(ErrorCode::InvalidInput, "isqrt of a negative number");
    Int r = 0;
    Int hi = 3037000499;  // floor(sqrt(2^63 - 1))
    while (r < hi) {
        Int mid = r + (hi - r + 1) / 2;
        if (mid * mid <= n)
            r = mid;
        else
            hi = mid - 1;
    }
    return r;
}

}  // namespace checked
}  // namespace ruled
