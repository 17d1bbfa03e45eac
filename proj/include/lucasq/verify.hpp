// Range sweeps over the sequence identities and congruences, plus the
// step-by-step replay of the Jacobi-symbol argument that rules out
// L(n) = 3x^2 for n > 2.
//
// Every sweep produces a VerificationReport.  Sweeps partition the index
// range across worker threads; each worker seeds its cursors once with fast
// doubling and then steps linearly, and the merged report is identical
// whatever the worker count (chunks are merged in index order, and the
// violation total is counted before the listing cap is applied).

#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <lucasq/arith.hpp>
#include <lucasq/sequences.hpp>

namespace lucasq {

enum class ClaimId {
    eq2_literal,          // 2 | L(n) => 3 does not divide n  (as printed; falsified)
    eq2_corrected,        // 2 | L(n) <=> 3 | n
    eq3,                  // 3 | L(n) => n = 2 (mod 4)
    eq4,                  // 2|n, 3 does not divide n => L(n) = 3 (mod 4)
    eq5,                  // L(n+2m) = -L(n) (mod L(m)) for even m, 3 not dividing m
    lemma21,              // F(n)^2 + F(n+1)^2 = F(2n+1)
    lucas_fib_link,       // L(n)^2 = 4(-1)^n + 5F(n)^2
    pyth_link,            // L(n)^2 + L(n+1)^2 = 5F(2n+1)
    f5alpha,              // F(5a) = 5F(a)(5F(a)^4 + 5(-1)^a F(a)^2 + 1)
    coprime_consecutive,  // gcd(L(n), L(n+1)) = 1
    gcd_falpha,           // gcd(F(a), 5F(a)^4 + 5(-1)^a F(a)^2 + 1) = 1
    lemma32_replay,       // residue/Jacobi replay certifying L(n) != 3x^2, n = 2 (mod 4), n > 2
    zhang_cofactor,       // gcd(a+b, (a^p+b^p)/(a+b)) = gcd(a+b, p), coprime a,b
};

inline std::string_view to_string(ClaimId id) {
    switch (id) {
        case ClaimId::eq2_literal: return "EQ2_LITERAL";
        case ClaimId::eq2_corrected: return "EQ2_CORRECTED";
        case ClaimId::eq3: return "EQ3";
        case ClaimId::eq4: return "EQ4";
        case ClaimId::eq5: return "EQ5";
        case ClaimId::lemma21: return "LEMMA21";
        case ClaimId::lucas_fib_link: return "LUCAS_FIB_LINK";
        case ClaimId::pyth_link: return "PYTH_LINK";
        case ClaimId::f5alpha: return "F5ALPHA";
        case ClaimId::coprime_consecutive: return "COPRIME_CONSECUTIVE";
        case ClaimId::gcd_falpha: return "GCD_FALPHA";
        case ClaimId::lemma32_replay: return "LEMMA32_REPLAY";
        case ClaimId::zhang_cofactor: return "ZHANG_COFACTOR";
    }
    return "UNKNOWN";
}

inline std::optional<ClaimId> claim_from_string(std::string_view token) {
    for (ClaimId id : {ClaimId::eq2_literal, ClaimId::eq2_corrected, ClaimId::eq3, ClaimId::eq4,
                       ClaimId::eq5, ClaimId::lemma21, ClaimId::lucas_fib_link, ClaimId::pyth_link,
                       ClaimId::f5alpha, ClaimId::coprime_consecutive, ClaimId::gcd_falpha,
                       ClaimId::lemma32_replay, ClaimId::zhang_cofactor}) {
        if (token == to_string(id)) return id;
    }
    return std::nullopt;
}

inline std::string_view claim_description(ClaimId id) {
    switch (id) {
        case ClaimId::eq2_literal: return "2 | L(n) implies 3 does not divide n (as printed)";
        case ClaimId::eq2_corrected: return "2 | L(n) if and only if 3 | n";
        case ClaimId::eq3: return "3 | L(n) implies n = 2 (mod 4)";
        case ClaimId::eq4: return "L(n) = 3 (mod 4) when 2 | n and 3 does not divide n";
        case ClaimId::eq5: return "L(n+2m) = -L(n) (mod L(m))";
        case ClaimId::lemma21: return "F(n)^2 + F(n+1)^2 = F(2n+1)";
        case ClaimId::lucas_fib_link: return "L(n)^2 = 4(-1)^n + 5F(n)^2";
        case ClaimId::pyth_link: return "L(n)^2 + L(n+1)^2 = 5F(2n+1)";
        case ClaimId::f5alpha: return "F(5a) = 5F(a)(5F(a)^4 + 5(-1)^a F(a)^2 + 1)";
        case ClaimId::coprime_consecutive: return "gcd(L(n), L(n+1)) = 1";
        case ClaimId::gcd_falpha: return "gcd(F(a), 5F(a)^4 + 5(-1)^a F(a)^2 + 1) = 1";
        case ClaimId::lemma32_replay: return "residue and Jacobi replay: L(n) != 3x^2 for n = 2 (mod 4), n > 2";
        case ClaimId::zhang_cofactor: return "gcd(a+b, (a^p+b^p)/(a+b)) = gcd(a+b, p)";
    }
    return "";
}

enum class Status { pass, fail };

// A violating index, or index tuple for multi-parameter claims
// ((m, n) for the shift congruence, (a, b, p) for the cofactor sweep).
using IndexTuple = std::vector<std::uint64_t>;

struct VerificationReport {
    ClaimId claim_id;
    Index range_lo = 0;
    Index range_hi = 0;
    Status status = Status::pass;
    std::uint64_t counterexample_count = 0;   // total found, not truncated
    std::vector<IndexTuple> counterexamples;  // first few, in index order

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct SweepOptions {
    std::size_t counterexample_cap = 32;  // listing cap; totals are always exact
    unsigned workers = 0;                 // 0 = one per hardware thread
};

namespace detail {

struct ChunkHits {
    std::vector<IndexTuple> listed;
    std::uint64_t count = 0;
};

inline unsigned resolve_workers(unsigned requested, std::uint64_t span) {
    unsigned w = requested != 0 ? requested : std::thread::hardware_concurrency();
    if (w == 0) w = 1;
    if (span < 1024) w = 1;  // cursor seeding would dominate the work
    if (w > span) w = static_cast<unsigned>(span);
    return w;
}

// Generic partitioned sweep.  factory(chunk_lo) builds a stateful checker for
// a worker starting at chunk_lo; checker(n) returns true when the claim holds
// at n and is called for consecutive n.  tuple_of(n) is recorded on failure.
template <class Factory, class TupleOf>
VerificationReport sweep(ClaimId claim, Index lo, Index hi, const SweepOptions& opt,
                         const Factory& factory, const TupleOf& tuple_of) {
    if (lo > hi) throw std::domain_error("verify: range_lo must be <= range_hi");
    const std::size_t cap = std::max<std::size_t>(opt.counterexample_cap, 1);
    const std::uint64_t span = hi - lo + 1;
    const unsigned workers = resolve_workers(opt.workers, span);
    const std::uint64_t chunk = (span + workers - 1) / workers;

    std::vector<std::future<ChunkHits>> parts;
    parts.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const Index c_lo = lo + w * chunk;
        if (c_lo > hi || (w > 0 && c_lo < lo)) break;  // past the end (or wrapped)
        const Index c_hi = hi - c_lo >= chunk - 1 ? c_lo + (chunk - 1) : hi;
        parts.push_back(std::async(std::launch::async, [&factory, &tuple_of, cap, c_lo, c_hi] {
            ChunkHits hits;
            auto check = factory(c_lo);
            for (Index n = c_lo;; ++n) {
                if (!check(n)) {
                    ++hits.count;
                    if (hits.listed.size() < cap) hits.listed.push_back(tuple_of(n));
                }
                if (n == c_hi) break;
            }
            return hits;
        }));
    }

    VerificationReport report{claim, lo, hi, Status::pass, 0, {}};
    for (auto& part : parts) {
        ChunkHits hits = part.get();
        report.counterexample_count += hits.count;
        for (auto& t : hits.listed)
            if (report.counterexamples.size() < cap) report.counterexamples.push_back(std::move(t));
    }
    if (report.counterexample_count != 0) report.status = Status::fail;
    return report;
}

inline IndexTuple single(Index n) { return {n}; }

}  // namespace detail

// --- Identity sweeps (exact big-integer arithmetic) -------------------------

inline VerificationReport verify_sum_squares(Index lo, Index hi, const SweepOptions& opt = {}) {
    return detail::sweep(
        ClaimId::lemma21, lo, hi, opt,
        [](Index c) {
            return [f = PairCursor::fibonacci_at(c), g = PairCursor::fibonacci_at(2 * c + 1)](
                       Index) mutable {
                const bool ok = f.first() * f.first() + f.second() * f.second() == g.first();
                f.advance();
                g.advance(2);
                return ok;
            };
        },
        detail::single);
}

inline VerificationReport verify_lucas_fib_link(Index lo, Index hi, const SweepOptions& opt = {}) {
    return detail::sweep(
        ClaimId::lucas_fib_link, lo, hi, opt,
        [](Index c) {
            return [f = PairCursor::fibonacci_at(c)](Index n) mutable {
                const Integer lucas_n = 2 * f.second() - f.first();
                const int unit = n % 2 == 0 ? 4 : -4;
                const bool ok = lucas_n * lucas_n == unit + 5 * f.first() * f.first();
                f.advance();
                return ok;
            };
        },
        detail::single);
}

inline VerificationReport verify_pyth_link(Index lo, Index hi, const SweepOptions& opt = {}) {
    return detail::sweep(
        ClaimId::pyth_link, lo, hi, opt,
        [](Index c) {
            return [l = PairCursor::lucas_at(c), f = PairCursor::fibonacci_at(2 * c + 1)](
                       Index) mutable {
                const bool ok =
                    l.first() * l.first() + l.second() * l.second() == 5 * f.first();
                l.advance();
                f.advance(2);
                return ok;
            };
        },
        detail::single);
}

namespace detail {

// 5F(a)^4 + 5(-1)^a F(a)^2 + 1 with the signed middle term.
inline Integer f5alpha_cofactor(const Integer& fib_a, Index a) {
    const Integer sq = fib_a * fib_a;
    return 5 * sq * sq + (a % 2 == 0 ? 5 : -5) * sq + 1;
}

}  // namespace detail

inline VerificationReport verify_f5alpha(Index lo, Index hi, const SweepOptions& opt = {}) {
    return detail::sweep(
        ClaimId::f5alpha, lo, hi, opt,
        [](Index c) {
            return [f = PairCursor::fibonacci_at(c), g = PairCursor::fibonacci_at(5 * c)](
                       Index a) mutable {
                const bool ok = g.first() == 5 * f.first() * detail::f5alpha_cofactor(f.first(), a);
                f.advance();
                g.advance(5);
                return ok;
            };
        },
        detail::single);
}

inline VerificationReport verify_coprime_consecutive(Index lo, Index hi,
                                                     const SweepOptions& opt = {}) {
    return detail::sweep(
        ClaimId::coprime_consecutive, lo, hi, opt,
        [](Index c) {
            return [l = PairCursor::lucas_at(c)](Index) mutable {
                const bool ok = gcd(l.first(), l.second()) == 1;
                l.advance();
                return ok;
            };
        },
        detail::single);
}

inline VerificationReport verify_gcd_falpha(Index lo, Index hi, const SweepOptions& opt = {}) {
    return detail::sweep(
        ClaimId::gcd_falpha, lo, hi, opt,
        [](Index c) {
            return [f = PairCursor::fibonacci_at(c)](Index a) mutable {
                const bool ok = gcd(f.first(), detail::f5alpha_cofactor(f.first(), a)) == 1;
                f.advance();
                return ok;
            };
        },
        detail::single);
}

// --- Congruence sweeps (modular arithmetic only) ----------------------------

inline VerificationReport verify_divisibility_2(Index lo, Index hi, bool literal,
                                                const SweepOptions& opt = {}) {
    return detail::sweep(
        literal ? ClaimId::eq2_literal : ClaimId::eq2_corrected, lo, hi, opt,
        [literal](Index c) {
            return [m = ModPairCursor::lucas_at(c, 2), literal](Index n) mutable {
                const bool even = m.first() == 0;
                m.advance();
                if (literal) return !(even && n % 3 == 0);  // 2 | L(n) => 3 does not divide n
                return even == (n % 3 == 0);                // 2 | L(n) <=> 3 | n
            };
        },
        detail::single);
}

inline VerificationReport verify_divisibility_3(Index lo, Index hi, const SweepOptions& opt = {}) {
    return detail::sweep(
        ClaimId::eq3, lo, hi, opt,
        [](Index c) {
            return [m = ModPairCursor::lucas_at(c, 3)](Index n) mutable {
                const bool divisible = m.first() == 0;
                m.advance();
                return !divisible || n % 4 == 2;
            };
        },
        detail::single);
}

inline VerificationReport verify_mod4(Index lo, Index hi, const SweepOptions& opt = {}) {
    return detail::sweep(
        ClaimId::eq4, lo, hi, opt,
        [](Index c) {
            return [m = ModPairCursor::lucas_at(c, 4)](Index n) mutable {
                const bool applies = n % 2 == 0 && n % 3 != 0;
                const bool ok = !applies || m.first() == 3;
                m.advance();
                return ok;
            };
        },
        detail::single);
}

inline const std::vector<Index> default_shift_moduli = {2, 4, 8, 10, 14, 16, 20, 22};

inline VerificationReport verify_shift_congruence(const std::vector<Index>& m_list, Index n_lo,
                                                  Index n_hi, const SweepOptions& opt = {}) {
    for (Index m : m_list)
        if (m == 0 || m % 2 != 0 || m % 3 == 0)
            throw std::domain_error("verify_shift_congruence: m must be even and not divisible by 3");
    if (n_lo > n_hi) throw std::domain_error("verify: range_lo must be <= range_hi");

    const std::size_t cap = std::max<std::size_t>(opt.counterexample_cap, 1);
    VerificationReport merged{ClaimId::eq5, n_lo, n_hi, Status::pass, 0, {}};
    for (Index m : m_list) {
        const Integer modulus = lucas(m);
        VerificationReport part = detail::sweep(
            ClaimId::eq5, n_lo, n_hi, opt,
            [m, &modulus](Index c) {
                return [a = ModPairCursor::lucas_at(c, modulus),
                        b = ModPairCursor::lucas_at(c + 2 * m, modulus)](Index) mutable {
                    const Integer& mod = a.modulus();
                    const bool ok = b.first() == (mod - a.first()) % mod;
                    a.advance();
                    b.advance();
                    return ok;
                };
            },
            [m](Index n) { return IndexTuple{m, n}; });
        merged.counterexample_count += part.counterexample_count;
        for (auto& t : part.counterexamples)
            if (merged.counterexamples.size() < cap) merged.counterexamples.push_back(std::move(t));
    }
    if (merged.counterexample_count != 0) merged.status = Status::fail;
    return merged;
}

// --- Shift-decomposition proof replay ---------------------------------------

// n = 2 + 2 * 3^alpha * m with 2 | m and 3 not dividing m.
struct ShiftDecomposition {
    std::uint32_t alpha;
    Index m;

    friend bool operator==(const ShiftDecomposition&, const ShiftDecomposition&) = default;
};

inline ShiftDecomposition decompose_shift(Index n) {
    if (n <= 2 || n % 4 != 2)
        throw std::domain_error("decompose_shift: need n = 2 (mod 4) with n > 2");
    Index m = (n - 2) / 2;  // even, since 4 | n - 2
    std::uint32_t alpha = 0;
    while (m % 3 == 0) {
        m /= 3;
        ++alpha;
    }
    if (m % 2 != 0)  // cannot happen: dividing an even number by 3 keeps it even
        throw std::logic_error("decompose_shift: decomposition produced odd m");
    return {alpha, m};
}

// Replays the residue/Jacobi chain certifying that L(n) is not 3 times a
// square, for n = 2 (mod 4), n > 2:
//   1. with (alpha, m) = decompose_shift(n), check L(n) = -3 (mod L(m));
//   2. check L(m) = 3 (mod 4);
//   3. check the Jacobi symbol of 3*L(n) over L(m) is -1.
// Step 3 evaluates the symbol on the reduced numerator 3*(L(n) mod L(m)),
// which is = -9 (mod L(m)).  When 3 | L(m) (every m = 2 mod 4) that symbol
// degenerates to 0, so the square factor 9 is stripped first and the chain
// closes with (-1/L(m)) = -1, which step 2 guarantees.  If L(n) = 3x^2 held,
// 3*L(n) = (3x)^2 would force the symbol to be 0 or +1 - contradiction.
inline bool replay_lemma32(Index n) {
    const ShiftDecomposition d = decompose_shift(n);
    const Integer lm = lucas(d.m);
    const Integer residue = lucas_mod(n, lm).value;
    if (residue != lm - 3) return false;
    if (lm % 4 != 3) return false;
    if (gcd(Integer(3), lm) == 1) return jacobi(3 * residue, lm) == -1;
    return jacobi(-1, lm) == -1;
}

// Sweep of replay_lemma32 over every admissible n = 4j + 2 <= hi.
inline VerificationReport verify_lemma32_replay(Index hi, const SweepOptions& opt = {}) {
    const Index j_max = hi >= 6 ? (hi - 2) / 4 : 0;
    if (j_max == 0) return {ClaimId::lemma32_replay, 0, hi, Status::pass, 0, {}};
    VerificationReport report = detail::sweep(
        ClaimId::lemma32_replay, 1, j_max, opt,
        [](Index) { return [](Index j) { return replay_lemma32(4 * j + 2); }; },
        [](Index j) { return detail::single(4 * j + 2); });
    report.range_lo = 0;  // swept domain: n = 2 (mod 4), 2 < n <= hi
    report.range_hi = hi;
    return report;
}

// --- Cofactor-gcd sweep -----------------------------------------------------

inline const std::vector<std::uint64_t> default_zhang_primes = {3, 5, 7, 11};

// Exhaustive check of gcd(a+b, (a^p+b^p)/(a+b)) = gcd(a+b, p) in {1, p} over
// all coprime pairs a, b <= ab_max and the given odd primes.
inline VerificationReport verify_zhang_cofactor(std::uint64_t ab_max,
                                                const std::vector<std::uint64_t>& primes,
                                                const SweepOptions& opt = {}) {
    for (std::uint64_t p : primes)
        if (!is_odd_prime(p))
            throw std::domain_error("verify_zhang_cofactor: p must be an odd prime");
    const std::size_t cap = std::max<std::size_t>(opt.counterexample_cap, 1);
    VerificationReport report{ClaimId::zhang_cofactor, 0, ab_max, Status::pass, 0, {}};
    for (std::uint64_t p : primes) {
        for (std::uint64_t a = 0; a <= ab_max; ++a) {
            for (std::uint64_t b = 0; b <= ab_max; ++b) {
                if (gcd(Integer(a), Integer(b)) != 1) continue;
                const Integer g = zhang_cofactor_gcd(a, b, p);
                const bool ok = g == gcd(Integer(a + b), Integer(p)) && (g == 1 || g == p);
                if (!ok) {
                    ++report.counterexample_count;
                    if (report.counterexamples.size() < cap)
                        report.counterexamples.push_back({a, b, p});
                }
            }
        }
    }
    if (report.counterexample_count != 0) report.status = Status::fail;
    return report;
}

// Shipped sweep defaults, shared by the CLI `verify` and `audit` subcommands.
struct ClaimBounds {
    Index lo;
    Index hi;
};

inline ClaimBounds default_bounds(ClaimId id) {
    switch (id) {
        case ClaimId::eq2_literal:
        case ClaimId::eq2_corrected:
        case ClaimId::eq3:
        case ClaimId::eq4: return {0, 100000};
        case ClaimId::eq5: return {0, 500};
        case ClaimId::lemma21:
        case ClaimId::coprime_consecutive: return {0, 10000};
        case ClaimId::lucas_fib_link:
        case ClaimId::pyth_link: return {0, 1000};
        case ClaimId::f5alpha: return {1, 200};
        case ClaimId::gcd_falpha: return {1, 1000};
        case ClaimId::lemma32_replay: return {0, 2000};
        case ClaimId::zhang_cofactor: return {0, 50};
    }
    return {0, 0};
}

}  // namespace lucasq
