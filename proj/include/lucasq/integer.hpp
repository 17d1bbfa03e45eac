// Arbitrary-precision integer type shared by the whole library, plus the
// index type used for sequence subscripts and a small exact-power helper.

#pragma once

#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace lucasq {

using Integer = boost::multiprecision::cpp_int;
using Index = std::uint64_t;

// base^exp by binary exponentiation; exact, no overflow.
inline Integer ipow(Integer base, std::uint64_t exp) {
    Integer out = 1;
    while (exp != 0) {
        if (exp & 1u) out *= base;
        exp >>= 1;
        if (exp != 0) base *= base;
    }
    return out;
}

// A value together with the modulus it was reduced by.  Values are always
// normalized into [0, modulus).
struct Residue {
    Integer value;
    Integer modulus;

    friend bool operator==(const Residue&, const Residue&) = default;
};

}  // namespace lucasq
