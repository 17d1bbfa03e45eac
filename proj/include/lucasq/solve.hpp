// Bounded exhaustive classification of the square-form Diophantine equations:
// the main equation L(n)^a + L(n+1)^a = x^2, the k*x^2 forms of single Lucas
// and Fibonacci values, the Pythagorean-style case a = 2, and bounded
// confirmations of the Catalan (Mihailescu) and Poonen power-sum statements.
//
// Search is pure exhaustive enumeration with exact arithmetic; the known_*
// tables carry the classically proven complete solution lists (Cohn's square
// classifications, Mihailescu's theorem) restricted to a scanned box, so
// callers can flag any divergence.  Results are always reported relative to
// the scanned bound - nothing here claims unboundedness.

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <lucasq/arith.hpp>
#include <lucasq/sequences.hpp>

namespace lucasq {

// L(n)^alpha + L(n+1)^alpha = x^2, witness x >= 0.
struct SolutionTriple {
    Index n;
    std::uint32_t alpha;
    Integer x;

    friend bool operator==(const SolutionTriple&, const SolutionTriple&) = default;
};

// Sequence value at n equals form_k * x^2 (for the Pythagorean case the
// "value" is L(n)^2 + L(n+1)^2 and form_k is 1).
struct IndexSolution {
    Index n;
    Integer x;
    Integer form_k;

    friend bool operator==(const IndexSolution&, const IndexSolution&) = default;
};

// a^x - b^y = 1 with a, b, x, y all >= 2.
struct CatalanSolution {
    std::uint64_t a;
    std::uint64_t b;
    std::uint64_t x;
    std::uint64_t y;

    friend bool operator==(const CatalanSolution&, const CatalanSolution&) = default;
};

// Primitive a^n + b^n = x^2 with a, b, x >= 1 and gcd(a, b, x) = 1.
struct PoonenSolution {
    std::uint64_t a;
    std::uint64_t b;
    Integer x;
    std::uint32_t n;

    friend bool operator==(const PoonenSolution&, const PoonenSolution&) = default;
};

// All (n, alpha, x) in the box n <= n_max, alpha <= alpha_max solving the main
// equation, in ascending (n, alpha) order.  Powers are built incrementally so
// each (n, alpha) cell costs two multiplications plus one squareness test.
inline std::vector<SolutionTriple> solve_main(Index n_max, std::uint32_t alpha_max) {
    std::vector<SolutionTriple> out;
    PairCursor l = PairCursor::lucas_at(0);
    for (Index n = 0;; ++n) {
        Integer pa = 1, pb = 1;
        for (std::uint32_t alpha = 0; alpha <= alpha_max; ++alpha) {
            if (alpha > 0) {
                pa *= l.first();
                pb *= l.second();
            }
            FormWitness w = is_k_times_square(pa + pb, 1);
            if (w.holds) out.push_back({n, alpha, std::move(w.x)});
        }
        if (n == n_max) break;
        l.advance();
    }
    return out;
}

namespace detail {

template <class Cursor>
std::vector<IndexSolution> scan_form(Cursor cur, const Integer& k, Index n_max,
                                     bool skip_zero_value) {
    std::vector<IndexSolution> out;
    for (Index n = 0;; ++n) {
        if (!(skip_zero_value && cur.first() == 0)) {
            FormWitness w = is_k_times_square(cur.first(), k);
            if (w.holds) out.push_back({n, std::move(w.x), k});
        }
        if (n == n_max) break;
        cur.advance();
    }
    return out;
}

}  // namespace detail

// All n <= n_max with L(n) = k * x^2, for k in {1, 2, 3}.
inline std::vector<IndexSolution> solve_lucas_form(const Integer& k, Index n_max) {
    if (k != 1 && k != 2 && k != 3)
        throw std::domain_error("solve_lucas_form: k must be 1, 2, or 3");
    return detail::scan_form(PairCursor::lucas_at(0), k, n_max, false);
}

// All n <= n_max with F(n) = k * x^2, for k in {1, 2, 5}.  For k = 5 the
// degenerate value F(0) = 0 is excluded: the k = 5 classification concerns
// genuine five-times-square values and lists (5, 1) alone, while 0 = 5*0^2
// would only add a zero witness.  (k = 1 and k = 2 keep their zero entries.)
inline std::vector<IndexSolution> solve_fib_form(const Integer& k, Index n_max) {
    if (k != 1 && k != 2 && k != 5)
        throw std::domain_error("solve_fib_form: k must be 1, 2, or 5");
    return detail::scan_form(PairCursor::fibonacci_at(0), k, n_max, k == 5);
}

// All n <= n_max with L(n)^2 + L(n+1)^2 = x^2, computed twice: directly, and
// through the identity L(n)^2 + L(n+1)^2 = 5F(2n+1) (so x = 5k exactly when
// F(2n+1) = 5k^2).  The two paths must agree or the call aborts.
inline std::vector<IndexSolution> solve_pythagorean(Index n_max) {
    std::vector<IndexSolution> direct;
    {
        PairCursor l = PairCursor::lucas_at(0);
        for (Index n = 0;; ++n) {
            FormWitness w = is_k_times_square(l.first() * l.first() + l.second() * l.second(), 1);
            if (w.holds) direct.push_back({n, std::move(w.x), 1});
            if (n == n_max) break;
            l.advance();
        }
    }
    std::vector<IndexSolution> reduced;
    {
        PairCursor f = PairCursor::fibonacci_at(1);
        for (Index n = 0;; ++n) {
            FormWitness w = is_k_times_square(f.first(), 5);  // F(2n+1) = 5k^2
            if (w.holds) reduced.push_back({n, 5 * w.x, 1});
            if (n == n_max) break;
            f.advance(2);
        }
    }
    if (direct != reduced)
        throw std::logic_error("solve_pythagorean: direct and reduction paths disagree");
    return direct;
}

// All a^x - b^y = 1 with 2 <= a, b <= base_max and 2 <= x, y <= exp_max,
// found by indexing every perfect power b^y and probing each a^x - 1.
inline std::vector<CatalanSolution> catalan_search(std::uint64_t base_max, std::uint64_t exp_max) {
    if (base_max < 2 || exp_max < 2)
        throw std::domain_error("catalan_search: base_max and exp_max must be >= 2");
    std::map<Integer, std::vector<std::pair<std::uint64_t, std::uint64_t>>> powers;
    for (std::uint64_t b = 2; b <= base_max; ++b) {
        Integer v = Integer(b) * b;
        for (std::uint64_t y = 2; y <= exp_max; ++y) {
            powers[v].push_back({b, y});
            v *= b;
        }
    }
    std::vector<CatalanSolution> out;
    for (std::uint64_t a = 2; a <= base_max; ++a) {
        Integer v = Integer(a) * a;
        for (std::uint64_t x = 2; x <= exp_max; ++x) {
            if (auto hit = powers.find(v - 1); hit != powers.end())
                for (const auto& [b, y] : hit->second) out.push_back({a, b, x, y});
            v *= a;
        }
    }
    std::sort(out.begin(), out.end(), [](const CatalanSolution& s, const CatalanSolution& t) {
        return std::tie(s.a, s.b, s.x, s.y) < std::tie(t.a, t.b, t.x, t.y);
    });
    return out;
}

// All primitive solutions of a^n + b^n = x^2 with 1 <= a, b <= ab_max and
// n_lo <= n <= n_hi; expected empty for n >= 4.
inline std::vector<PoonenSolution> poonen_search(std::uint32_t n_lo, std::uint32_t n_hi,
                                                 std::uint64_t ab_max) {
    if (n_lo < 4) throw std::domain_error("poonen_search: n_lo must be >= 4");
    if (ab_max < 1) throw std::domain_error("poonen_search: ab_max must be >= 1");
    std::vector<PoonenSolution> out;
    for (std::uint32_t n = n_lo; n <= n_hi; ++n) {
        std::vector<Integer> pow_n(ab_max + 1);
        for (std::uint64_t a = 1; a <= ab_max; ++a) pow_n[a] = ipow(Integer(a), n);
        for (std::uint64_t a = 1; a <= ab_max; ++a) {
            for (std::uint64_t b = 1; b <= ab_max; ++b) {
                FormWitness w = is_k_times_square(pow_n[a] + pow_n[b], 1);
                if (!w.holds || w.x == 0) continue;
                if (gcd(gcd(Integer(a), Integer(b)), w.x) != 1) continue;
                out.push_back({a, b, std::move(w.x), n});
            }
        }
    }
    return out;
}

// --- Proof-case dispatch for the main equation ------------------------------

enum class AlphaCaseKind {
    unsatisfiable_constant,  // alpha = 0
    lucas_square_shift,      // alpha = 1
    fib_five_square,         // alpha = 2
    cofactor_split,          // alpha = 3
    power_sum_vacuous,       // alpha >= 4
};

struct AlphaCase {
    std::uint32_t alpha;
    int case_number;  // 1..5
    AlphaCaseKind kind;
    std::string_view reduction;

    friend bool operator==(const AlphaCase&, const AlphaCase&) = default;
};

inline AlphaCase classify_alpha_case(std::uint32_t alpha) {
    switch (alpha) {
        case 0:
            return {alpha, 1, AlphaCaseKind::unsatisfiable_constant,
                    "sum is the constant 2, never a square"};
        case 1:
            return {alpha, 2, AlphaCaseKind::lucas_square_shift,
                    "reduces to L(n+2) = x^2"};
        case 2:
            return {alpha, 3, AlphaCaseKind::fib_five_square,
                    "reduces to F(2n+1) = 5k^2 with x = 5k"};
        case 3:
            return {alpha, 4, AlphaCaseKind::cofactor_split,
                    "cofactor split: L(n+2) = x^2 or L(n+2) = 3x^2"};
        default:
            return {alpha, 5, AlphaCaseKind::power_sum_vacuous,
                    "coprime power sum with exponent >= 4, no solution"};
    }
}

// --- Classically proven complete lists, clipped to a scanned box ------------

namespace detail {

inline std::vector<IndexSolution> clip_form(std::initializer_list<IndexSolution> all,
                                            Index n_max) {
    std::vector<IndexSolution> out;
    for (const auto& s : all)
        if (s.n <= n_max) out.push_back(s);
    return out;
}

}  // namespace detail

inline std::vector<SolutionTriple> known_main_solutions(Index n_max, std::uint32_t alpha_max) {
    std::vector<SolutionTriple> out;
    for (const SolutionTriple& s : {SolutionTriple{0, 3, 3}, SolutionTriple{1, 1, 2},
                                    SolutionTriple{2, 2, 5}})
        if (s.n <= n_max && s.alpha <= alpha_max) out.push_back(s);
    return out;
}

// Cohn: L(n) = x^2 only for n in {1, 3}; L(n) = 2x^2 only for n in {0, 6};
// L(n) = 3x^2 only at n = 2 (non-negative indices).
inline std::vector<IndexSolution> known_lucas_form(const Integer& k, Index n_max) {
    if (k == 1) return detail::clip_form({{1, 1, 1}, {3, 2, 1}}, n_max);
    if (k == 2) return detail::clip_form({{0, 1, 2}, {6, 3, 2}}, n_max);
    if (k == 3) return detail::clip_form({{2, 1, 3}}, n_max);
    throw std::domain_error("known_lucas_form: k must be 1, 2, or 3");
}

// Cohn: F(n) = x^2 only for n in {0, 1, 2, 12}; F(n) = 2x^2 only for
// n in {0, 3, 6}; and F(n) = 5x^2 only at n = 5 (zero value excluded).
inline std::vector<IndexSolution> known_fib_form(const Integer& k, Index n_max) {
    if (k == 1) return detail::clip_form({{0, 0, 1}, {1, 1, 1}, {2, 1, 1}, {12, 12, 1}}, n_max);
    if (k == 2) return detail::clip_form({{0, 0, 2}, {3, 1, 2}, {6, 2, 2}}, n_max);
    if (k == 5) return detail::clip_form({{5, 1, 5}}, n_max);
    throw std::domain_error("known_fib_form: k must be 1, 2, or 5");
}

inline std::vector<IndexSolution> known_pythagorean(Index n_max) {
    return detail::clip_form({{2, 5, 1}}, n_max);
}

// Mihailescu: the only solution with all entries >= 2 is 3^2 - 2^3 = 1.
inline std::vector<CatalanSolution> known_catalan(std::uint64_t base_max, std::uint64_t exp_max) {
    if (base_max >= 3 && exp_max >= 3) return {{3, 2, 2, 3}};
    return {};
}

}  // namespace lucasq
