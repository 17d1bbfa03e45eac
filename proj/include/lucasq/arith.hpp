// Integer arithmetic helpers: floor square root, k*x^2 form recognition,
// gcd, Jacobi symbol, and the cofactor-gcd identity used to split power sums.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <lucasq/integer.hpp>

namespace lucasq {

// Floor of sqrt(n) by Newton's method.  The seed comes from a double-precision
// root of the top ~48 bits (always an over-estimate of the true root), after
// which the iteration x <- (x + n/x)/2 descends monotonically and stops at the
// first non-decrease, which is exactly floor(sqrt(n)).
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    if (n < 2) return n;

    const unsigned bits = boost::multiprecision::msb(n) + 1;
    Integer x;
    if (bits <= 48) {
        const auto v = n.convert_to<std::uint64_t>();
        x = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v))) + 2;
    } else {
        unsigned shift = bits - 48;
        shift += shift & 1u;  // even shift so the square root shifts by shift/2
        const auto top = Integer(n >> shift).convert_to<std::uint64_t>();
        x = Integer(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(top))) + 2)
            << (shift / 2);
    }
    for (;;) {
        Integer y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

inline bool is_square(const Integer& n) {
    if (n < 0) return false;
    const Integer r = isqrt(n);
    return r * r == n;
}

// Result of testing n == k * x^2.  When holds is false the witness x carries
// no information and must be ignored.
struct FormWitness {
    Integer k;
    Integer x;
    bool holds;

    friend bool operator==(const FormWitness&, const FormWitness&) = default;
};

inline FormWitness is_k_times_square(const Integer& n, const Integer& k) {
    if (k < 1) throw std::domain_error("is_k_times_square: k must be >= 1");
    if (n < 0) throw std::domain_error("is_k_times_square: n must be >= 0");
    if (n % k != 0) return {k, 0, false};
    const Integer q = n / k;
    Integer r = isqrt(q);
    if (r * r != q) return {k, 0, false};
    return {k, std::move(r), true};
}

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

// Jacobi symbol (a/n) for odd n >= 1, by the binary algorithm: strip twos
// (each pair of factors is a square; an odd count contributes (2/n), which is
// -1 exactly when n = +-3 mod 8), then flip per quadratic reciprocity and
// swap.  A negative numerator contributes (-1/n) = (-1)^((n-1)/2) up front.
// Runs in O(log a * log n) word operations, no factorization.
inline int jacobi(Integer a, Integer n) {
    if (n <= 0 || n % 2 == 0)
        throw std::domain_error("jacobi: lower argument must be positive and odd");
    int result = 1;
    if (a < 0) {
        a = -a;
        if (n % 4 == 3) result = -result;
    }
    a %= n;
    while (a != 0) {
        const unsigned twos = boost::multiprecision::lsb(a);
        a >>= twos;
        if (twos & 1u) {
            const auto r = Integer(n % 8).convert_to<unsigned>();
            if (r == 3 || r == 5) result = -result;
        }
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        std::swap(a, n);
        a %= n;
    }
    return n == 1 ? result : 0;
}

// Deterministic trial-division primality check; used only to validate the
// small prime parameters of the cofactor identity.
inline bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// gcd(a + b, (a^p + b^p) / (a + b)) for coprime a, b >= 0 (not both zero) and
// an odd prime p.  The quotient is an integer because a + b divides a^p + b^p
// for odd p; the result is always 1 or p, which callers verify as the
// cofactor-splitting step of the power-sum classification.
inline Integer zhang_cofactor_gcd(const Integer& a, const Integer& b, std::uint64_t p) {
    if (a < 0 || b < 0) throw std::domain_error("zhang_cofactor_gcd: a and b must be >= 0");
    if (!is_odd_prime(p)) throw std::domain_error("zhang_cofactor_gcd: p must be an odd prime");
    if (gcd(a, b) != 1) throw std::domain_error("zhang_cofactor_gcd: a and b must be coprime");
    const Integer s = a + b;
    Integer q, r;
    boost::multiprecision::divide_qr(ipow(a, p) + ipow(b, p), s, q, r);
    return gcd(s, q);
}

}  // namespace lucasq
