#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <lucasq/solve.hpp>

#include "oracle.hpp"

using namespace lucasq;

TEST_CASE("main equation: the three classical triples and nothing else") {
    const auto found = solve_main(200, 12);
    REQUIRE(found == std::vector<SolutionTriple>{{0, 3, 3}, {1, 1, 2}, {2, 2, 5}});
    // Witnesses substitute back exactly.
    const auto luc = oracle::lucas_upto(201);
    for (const auto& s : found) {
        Integer lhs = 1, rhs = 1;
        for (std::uint32_t i = 0; i < s.alpha; ++i) {
            lhs *= luc[s.n];
            rhs *= luc[s.n + 1];
        }
        REQUIRE(lhs + rhs == s.x * s.x);
    }
}

TEST_CASE("main equation: clipped boxes") {
    CHECK(solve_main(0, 2).empty());
    CHECK(solve_main(2, 1) == std::vector<SolutionTriple>{{1, 1, 2}});
    CHECK(solve_main(0, 3) == std::vector<SolutionTriple>{{0, 3, 3}});
}

TEST_CASE("main equation agrees with a naive double-loop oracle") {
    const auto luc = oracle::lucas_upto(121);
    std::vector<SolutionTriple> expected;
    for (Index n = 0; n <= 120; ++n) {
        for (std::uint32_t alpha = 0; alpha <= 6; ++alpha) {
            Integer pa = 1, pb = 1;
            for (std::uint32_t i = 0; i < alpha; ++i) {
                pa *= luc[n];
                pb *= luc[n + 1];
            }
            const Integer sum = pa + pb;
            const Integer r = isqrt(sum);
            if (r * r == sum) expected.push_back({n, alpha, r});
        }
    }
    CHECK(solve_main(120, 6) == expected);
}

TEST_CASE("main equation: monotone in the box bounds") {
    const auto small = solve_main(60, 6);
    const auto large = solve_main(90, 8);
    for (const auto& s : small)
        CHECK(std::find(large.begin(), large.end(), s) != large.end());
}

TEST_CASE("Lucas square forms") {
    CHECK(solve_lucas_form(1, 2000) == std::vector<IndexSolution>{{1, 1, 1}, {3, 2, 1}});
    CHECK(solve_lucas_form(2, 2000) == std::vector<IndexSolution>{{0, 1, 2}, {6, 3, 2}});
    CHECK(solve_lucas_form(3, 2000) == std::vector<IndexSolution>{{2, 1, 3}});
    CHECK(solve_lucas_form(1, 0).empty());
    CHECK_THROWS_AS(solve_lucas_form(5, 100), std::domain_error);
    CHECK_THROWS_AS(solve_lucas_form(7, 100), std::domain_error);
}

TEST_CASE("Fibonacci square forms") {
    CHECK(solve_fib_form(1, 2000) ==
          std::vector<IndexSolution>{{0, 0, 1}, {1, 1, 1}, {2, 1, 1}, {12, 12, 1}});
    CHECK(solve_fib_form(2, 2000) == std::vector<IndexSolution>{{0, 0, 2}, {3, 1, 2}, {6, 2, 2}});
    CHECK(solve_fib_form(5, 2000) == std::vector<IndexSolution>{{5, 1, 5}});
    CHECK_THROWS_AS(solve_fib_form(3, 100), std::domain_error);
}

TEST_CASE("classical lists clip to the scanned box") {
    CHECK(known_lucas_form(1, 2) == std::vector<IndexSolution>{{1, 1, 1}});
    CHECK(known_fib_form(1, 5) == std::vector<IndexSolution>{{0, 0, 1}, {1, 1, 1}, {2, 1, 1}});
    CHECK(known_main_solutions(1, 12) ==
          std::vector<SolutionTriple>{{0, 3, 3}, {1, 1, 2}});
    CHECK(known_catalan(2, 30).empty());
    CHECK(known_catalan(100, 20) == std::vector<CatalanSolution>{{3, 2, 2, 3}});
    CHECK(known_pythagorean(1).empty());
}

TEST_CASE("scanned forms equal the classical lists at scale") {
    CHECK(solve_lucas_form(1, 3000) == known_lucas_form(1, 3000));
    CHECK(solve_lucas_form(2, 3000) == known_lucas_form(2, 3000));
    CHECK(solve_lucas_form(3, 3000) == known_lucas_form(3, 3000));
    CHECK(solve_fib_form(1, 3000) == known_fib_form(1, 3000));
    CHECK(solve_fib_form(2, 3000) == known_fib_form(2, 3000));
    CHECK(solve_fib_form(5, 3000) == known_fib_form(5, 3000));
}

TEST_CASE("Pythagorean case: both paths, one solution") {
    CHECK(solve_pythagorean(1).empty());
    CHECK(solve_pythagorean(2) == std::vector<IndexSolution>{{2, 5, 1}});
    CHECK(solve_pythagorean(1000) == std::vector<IndexSolution>{{2, 5, 1}});
}

TEST_CASE("case-reduction identity behind the Pythagorean path") {
    // L(n)^2 + L(n+1)^2 = 5 F(2n+1) for n <= 500.
    const auto luc = oracle::lucas_upto(501);
    const auto fib = oracle::fib_upto(1001);
    for (Index n = 0; n <= 500; ++n)
        REQUIRE(luc[n] * luc[n] + luc[n + 1] * luc[n + 1] == 5 * fib[2 * n + 1]);
}

TEST_CASE("bounded Catalan search") {
    CHECK(catalan_search(2, 2).empty());
    CHECK(catalan_search(30, 30) == std::vector<CatalanSolution>{{3, 2, 2, 3}});
    CHECK_THROWS_AS(catalan_search(1, 10), std::domain_error);
    CHECK_THROWS_AS(catalan_search(10, 1), std::domain_error);
}

TEST_CASE("Catalan search agrees with a swapped-order brute force") {
    // Same box, enumeration nested the other way round and without the
    // perfect-power index.
    std::vector<CatalanSolution> expected;
    for (std::uint64_t y = 2; y <= 10; ++y)
        for (std::uint64_t x = 2; x <= 10; ++x)
            for (std::uint64_t b = 2; b <= 20; ++b)
                for (std::uint64_t a = 2; a <= 20; ++a)
                    if (ipow(Integer(a), x) - ipow(Integer(b), y) == 1)
                        expected.push_back({a, b, x, y});
    std::sort(expected.begin(), expected.end(), [](const auto& s, const auto& t) {
        return std::tie(s.a, s.b, s.x, s.y) < std::tie(t.a, t.b, t.x, t.y);
    });
    CHECK(catalan_search(20, 10) == expected);
}

TEST_CASE("bounded Poonen search is empty") {
    CHECK(poonen_search(4, 4, 1).empty());
    CHECK(poonen_search(5, 5, 50).empty());
    CHECK(poonen_search(4, 6, 60).empty());
    CHECK(poonen_search(5, 4, 10).empty());  // inverted range: nothing to scan
    CHECK_THROWS_AS(poonen_search(3, 5, 10), std::domain_error);
    CHECK_THROWS_AS(poonen_search(4, 5, 0), std::domain_error);
}

TEST_CASE("Poonen search keeps imprimitive squares out but finds none anyway") {
    // 2^4 + 2^4 = 32 is not a square; but e.g. a = b = 2, n = 5: 64 = 8^2 is a
    // square yet gcd(2,2,8) = 2, so it must not be reported.  Verify the scan
    // classifies it as imprimitive rather than missing it.
    CHECK(poonen_search(5, 5, 2).empty());
    const Integer s = ipow(Integer(2), 5) + ipow(Integer(2), 5);
    CHECK(isqrt(s) * isqrt(s) == s);  // the square exists and was filtered by primitivity
}

TEST_CASE("alpha case dispatch follows the five proof cases") {
    CHECK(classify_alpha_case(0).case_number == 1);
    CHECK(classify_alpha_case(0).kind == AlphaCaseKind::unsatisfiable_constant);
    CHECK(classify_alpha_case(1).case_number == 2);
    CHECK(classify_alpha_case(1).kind == AlphaCaseKind::lucas_square_shift);
    CHECK(classify_alpha_case(2).case_number == 3);
    CHECK(classify_alpha_case(2).kind == AlphaCaseKind::fib_five_square);
    CHECK(classify_alpha_case(3).case_number == 4);
    CHECK(classify_alpha_case(3).kind == AlphaCaseKind::cofactor_split);
    for (std::uint32_t a : {4u, 7u, 100u}) {
        CHECK(classify_alpha_case(a).case_number == 5);
        CHECK(classify_alpha_case(a).kind == AlphaCaseKind::power_sum_vacuous);
        CHECK_FALSE(classify_alpha_case(a).reduction.empty());
    }
}
