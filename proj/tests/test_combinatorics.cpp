#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <thread>
#include <vector>

#include "arcsid/combinatorics.hpp"
#include "oracles.hpp"

using arcsid::BigInt;
using arcsid::QPi2;
using arcsid::Rat;

TEST_CASE("factorial matches a direct product", "[combinatorics]") {
    for (long long n = 0; n <= 30; ++n) {
        CHECK(arcsid::factorial(n) == oracle::factorial(n));
    }
    CHECK(arcsid::factorial(0) == 1);
    CHECK(arcsid::factorial(20) == BigInt("2432902008176640000"));
    CHECK_THROWS_AS(arcsid::factorial(-1), std::domain_error);
}

TEST_CASE("double factorial covers the -1 and 0 base cases", "[combinatorics]") {
    CHECK(arcsid::double_factorial(-1) == 1);
    CHECK(arcsid::double_factorial(0) == 1);
    CHECK(arcsid::double_factorial(1) == 1);
    CHECK(arcsid::double_factorial(5) == 15);
    CHECK(arcsid::double_factorial(6) == 48);
    for (long long m = -1; m <= 25; ++m) {
        CHECK(arcsid::double_factorial(m) == oracle::double_factorial(m));
    }
    CHECK_THROWS_AS(arcsid::double_factorial(-2), std::domain_error);
}

TEST_CASE("binomial agrees with the Pascal recurrence", "[combinatorics]") {
    for (long long n = 0; n <= 25; ++n) {
        for (long long k = -2; k <= n + 2; ++k) {
            CHECK(arcsid::binomial(n, k) == oracle::binom(n, k));
        }
    }
    CHECK(arcsid::binomial(5, -1) == 0);
    CHECK(arcsid::binomial(5, 6) == 0);
    CHECK_THROWS_AS(arcsid::binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("central binomials and Catalan numbers", "[combinatorics]") {
    const long long catalans[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (long long n = 0; n <= 10; ++n) {
        CHECK(arcsid::central_binomial(n) == oracle::binom(2 * n, n));
        CHECK(arcsid::catalan(n) == catalans[n]);
    }
    for (long long n = 0; n <= 40; ++n) {
        CHECK(arcsid::catalan(n) == oracle::catalan(n));
        CHECK(arcsid::catalan(n) * (n + 1) == arcsid::central_binomial(n));
    }
    CHECK_THROWS_AS(arcsid::catalan(-1), std::invalid_argument);
    CHECK_THROWS_AS(arcsid::central_binomial(-3), std::invalid_argument);
}

TEST_CASE("partial sums over odd squares", "[combinatorics]") {
    CHECK(arcsid::odd_square_partial_sum(-1) == Rat(0));
    CHECK(arcsid::odd_square_partial_sum(0) == Rat(1));
    CHECK(arcsid::odd_square_partial_sum(1) == Rat(BigInt(10), BigInt(9)));
    CHECK(arcsid::odd_square_partial_sum(2) == Rat(BigInt(259), BigInt(225)));
    for (long long m = -1; m <= 50; ++m) {
        CHECK(arcsid::odd_square_partial_sum(m) == oracle::odd_square_sum(m));
    }
    CHECK_THROWS_AS(arcsid::odd_square_partial_sum(-2), std::invalid_argument);
}

TEST_CASE("trigamma at half-integers", "[combinatorics]") {
    // psi'(1/2) = pi^2/2; each further half-step subtracts 4/(2m-1)^2.
    CHECK(arcsid::trigamma_half_integer(0) == QPi2(Rat(0), Rat(BigInt(1), BigInt(2))));
    CHECK(arcsid::trigamma_half_integer(1) == QPi2(Rat(-4), Rat(BigInt(1), BigInt(2))));
    CHECK(arcsid::trigamma_half_integer(2) ==
          QPi2(Rat(BigInt(-40), BigInt(9)), Rat(BigInt(1), BigInt(2))));
    for (long long m = 0; m <= 30; ++m) {
        QPi2 v = arcsid::trigamma_half_integer(m);
        CHECK(v.pi2_part() == Rat(BigInt(1), BigInt(2)));
        CHECK(v.rational_part() == Rat(-4) * oracle::odd_square_sum(m - 1));
    }
    CHECK_THROWS_AS(arcsid::trigamma_half_integer(-1), std::invalid_argument);
}

TEST_CASE("memo tables are safe under concurrent access", "[combinatorics]") {
    arcsid::prewarm_combinatorics(64);
    std::vector<std::thread> threads;
    std::vector<int> bad(8, 0);
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([t, &bad] {
            for (long long n = 0; n <= 80; ++n) {
                if (arcsid::binomial(2 * n, n) != oracle::binom(2 * n, n)) bad[t] = 1;
                if (arcsid::catalan(n) != oracle::catalan(n)) bad[t] = 1;
            }
        });
    }
    for (auto& th : threads) th.join();
    for (int t = 0; t < 8; ++t) CHECK(bad[t] == 0);
}
