#pragma once

#include <cstdint>

#include "ratknot/error.hpp"

namespace ratknot {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

}  // namespace checked

/// Residue of a in [0, m), m > 0.
inline Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

__extension__ using Wide = __int128;

/// (a * b) mod m without intermediate overflow; m > 0.

inline Int mulmod(Int a, Int b, Int m) {
    auto r = static_cast<Wide>(mod(a, m)) * mod(b, m) % m;
    return static_cast<Int>(r);
}

inline bool is_even(Int a) { return a % 2 == 0; }

}  // namespace ratknot
