// Fibonacci and Lucas evaluation.
//
// All point evaluations go through the fast-doubling recurrences
//
//     F(2k)   = F(k) * (2*F(k+1) - F(k))
//     F(2k+1) = F(k)^2 + F(k+1)^2
//
// processed from the most significant bit of the index downwards, so a single
// evaluation costs O(log n) big-integer multiplications.  Lucas values are
// recovered from the Fibonacci pair via L(n) = 2*F(n+1) - F(n).  The modular
// variants run the same ladder with every product reduced, so huge indices
// stay cheap when only a residue is needed.
//
// PairCursor / ModPairCursor hold a consecutive pair of sequence values and
// step it with the first-order recurrence; they let range sweeps start at an
// arbitrary index (seeded by fast doubling) and then pay O(1) big-integer
// additions per step instead of a fresh O(log n) evaluation.

#pragma once

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

#include <lucasq/integer.hpp>

namespace lucasq {

namespace detail {

// (F(n), F(n+1)) by bit-descent fast doubling.
inline std::pair<Integer, Integer> fib_pair(Index n) {
    Integer a = 0;  // F(0)
    Integer b = 1;  // F(1)
    if (n == 0) return {std::move(a), std::move(b)};
    for (int i = std::bit_width(n) - 1; i >= 0; --i) {
        Integer c = a * (2 * b - a);  // F(2k)
        Integer d = a * a + b * b;    // F(2k+1)
        if ((n >> i) & 1u) {
            a = std::move(d);
            b = c + a;  // F(2k+2) = F(2k) + F(2k+1)
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {std::move(a), std::move(b)};
}

inline Integer mod_norm(Integer v, const Integer& m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}

// (F(n) mod m, F(n+1) mod m) for m >= 2.
inline std::pair<Integer, Integer> fib_pair_mod(Index n, const Integer& m) {
    Integer a = 0;
    Integer b = mod_norm(1, m);
    if (n == 0) return {std::move(a), std::move(b)};
    for (int i = std::bit_width(n) - 1; i >= 0; --i) {
        Integer c = mod_norm(a * (2 * b - a), m);
        Integer d = (a * a + b * b) % m;
        if ((n >> i) & 1u) {
            a = std::move(d);
            b = (c + a) % m;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {std::move(a), std::move(b)};
}

inline void require_modulus(const Integer& m, const char* who) {
    if (m < 2) throw std::domain_error(std::string(who) + ": modulus must be >= 2");
}

}  // namespace detail

inline Integer fibonacci(Index n) { return detail::fib_pair(n).first; }

inline Integer lucas(Index n) {
    auto [f, f1] = detail::fib_pair(n);
    return 2 * f1 - f;
}

// (F(n), L(n)) from one ladder run.
inline std::pair<Integer, Integer> fib_lucas_pair(Index n) {
    auto [f, f1] = detail::fib_pair(n);
    return {f, 2 * f1 - f};
}

inline Residue fibonacci_mod(Index n, const Integer& m) {
    detail::require_modulus(m, "fibonacci_mod");
    return {detail::fib_pair_mod(n, m).first, m};
}

inline Residue lucas_mod(Index n, const Integer& m) {
    detail::require_modulus(m, "lucas_mod");
    auto [f, f1] = detail::fib_pair_mod(n, m);
    return {detail::mod_norm(2 * f1 - f, m), m};
}

// L(-n) = (-1)^n * L(n), reported as an explicit sign and magnitude so the
// caller never confuses the reflected value with an index-(-n) lookup.
struct SignedValue {
    int sign;  // +1 or -1
    Integer magnitude;

    friend bool operator==(const SignedValue&, const SignedValue&) = default;
};

inline SignedValue lucas_negative_reflect(Index n) {
    return {n % 2 == 0 ? +1 : -1, lucas(n)};
}

// Consecutive pair (S(n), S(n+1)) of a Fibonacci-rule sequence, advanced one
// index at a time.  Construct with the factory for the sequence wanted.
class PairCursor {
public:
    static PairCursor fibonacci_at(Index n) {
        auto [a, b] = detail::fib_pair(n);
        return PairCursor(n, std::move(a), std::move(b));
    }

    static PairCursor lucas_at(Index n) {
        auto [f, f1] = detail::fib_pair(n);
        // L(n) = 2*F(n+1) - F(n), L(n+1) = 2*F(n) + F(n+1)
        return PairCursor(n, 2 * f1 - f, 2 * f + f1);
    }

    Index index() const { return n_; }
    const Integer& first() const { return a_; }   // S(n)
    const Integer& second() const { return b_; }  // S(n+1)

    void advance() {
        a_ += b_;
        std::swap(a_, b_);
        ++n_;
    }

    void advance(Index steps) {
        while (steps-- > 0) advance();
    }

private:
    PairCursor(Index n, Integer a, Integer b) : n_(n), a_(std::move(a)), b_(std::move(b)) {}

    Index n_;
    Integer a_;
    Integer b_;
};

// Same as PairCursor but every value is kept reduced mod m.
class ModPairCursor {
public:
    static ModPairCursor fibonacci_at(Index n, Integer m) {
        detail::require_modulus(m, "ModPairCursor");
        auto [a, b] = detail::fib_pair_mod(n, m);
        return ModPairCursor(n, std::move(a), std::move(b), std::move(m));
    }

    static ModPairCursor lucas_at(Index n, Integer m) {
        detail::require_modulus(m, "ModPairCursor");
        auto [f, f1] = detail::fib_pair_mod(n, m);
        return ModPairCursor(n, detail::mod_norm(2 * f1 - f, m), detail::mod_norm(2 * f + f1, m),
                             std::move(m));
    }

    Index index() const { return n_; }
    const Integer& modulus() const { return m_; }
    const Integer& first() const { return a_; }
    const Integer& second() const { return b_; }

    void advance() {
        a_ += b_;
        if (a_ >= m_) a_ -= m_;
        std::swap(a_, b_);
        ++n_;
    }

    void advance(Index steps) {
        while (steps-- > 0) advance();
    }

private:
    ModPairCursor(Index n, Integer a, Integer b, Integer m)
        : n_(n), a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {}

    Index n_;
    Integer a_;
    Integer b_;
    Integer m_;
};

}  // namespace lucasq
