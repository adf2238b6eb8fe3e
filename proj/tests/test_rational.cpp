#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "arcsid/rational.hpp"

using arcsid::BigInt;
using arcsid::Rat;

TEST_CASE("construction normalizes sign and lowest terms", "[rational]") {
    CHECK(Rat(BigInt(6), BigInt(-4)) == Rat(BigInt(-3), BigInt(2)));
    CHECK(arcsid::to_string(Rat(BigInt(6), BigInt(-4))) == "-3/2");
    CHECK(Rat(BigInt(-2), BigInt(4)) == Rat(BigInt(-1), BigInt(2)));
    CHECK(Rat(BigInt(-6), BigInt(-4)) == Rat(BigInt(3), BigInt(2)));
    CHECK(Rat(BigInt(0), BigInt(5)) == Rat(0));
    CHECK(Rat(BigInt(0), BigInt(-5)) == Rat(0));
    CHECK(Rat(BigInt(10), BigInt(5)).is_integer());
    CHECK(Rat(BigInt(10), BigInt(5)).den() == 1);
}

TEST_CASE("zero denominator is rejected with context", "[rational]") {
    CHECK_THROWS_AS(Rat(BigInt(3), BigInt(0)), arcsid::arith_error);
    CHECK_THROWS_WITH(Rat(BigInt(3), BigInt(0)),
                      Catch::Matchers::ContainsSubstring("3/0"));
}

TEST_CASE("field operations are exact", "[rational]") {
    Rat third(BigInt(1), BigInt(3));
    Rat sixth(BigInt(1), BigInt(6));
    CHECK(third + sixth == Rat(BigInt(1), BigInt(2)));
    CHECK(third - sixth == sixth);
    CHECK(third * sixth == Rat(BigInt(1), BigInt(18)));
    CHECK(third / sixth == Rat(2));
    CHECK(-third == Rat(BigInt(-1), BigInt(3)));
    CHECK(third < Rat(BigInt(1), BigInt(2)));
    CHECK(Rat(BigInt(-1), BigInt(2)) < third);
}

TEST_CASE("division by zero names both operands", "[rational]") {
    Rat a(BigInt(1), BigInt(3));
    CHECK_THROWS_AS(a / Rat(0), arcsid::arith_error);
    CHECK_THROWS_WITH(a / Rat(0), Catch::Matchers::ContainsSubstring("1/3") &&
                                      Catch::Matchers::ContainsSubstring("0"));
}

TEST_CASE("to_string renders integers plainly, fractions as num/den", "[rational]") {
    CHECK(arcsid::to_string(Rat(5)) == "5");
    CHECK(arcsid::to_string(Rat(-5)) == "-5");
    CHECK(arcsid::to_string(Rat(0)) == "0");
    CHECK(arcsid::to_string(Rat(BigInt(-3), BigInt(6))) == "-1/2");
    CHECK(arcsid::to_string(Rat(BigInt(22), BigInt(7))) == "22/7");
}

TEST_CASE("integer powers", "[rational]") {
    CHECK(arcsid::pow(Rat(BigInt(2), BigInt(3)), 3) == Rat(BigInt(8), BigInt(27)));
    CHECK(arcsid::pow(Rat(7), 0) == Rat(1));
    CHECK(arcsid::pow(Rat(0), 0) == Rat(1));
    CHECK(arcsid::pow(Rat(0), 5) == Rat(0));
    CHECK(arcsid::pow(Rat(2), -2) == Rat(BigInt(1), BigInt(4)));
    CHECK(arcsid::pow(Rat(BigInt(-2), BigInt(3)), 2) == Rat(BigInt(4), BigInt(9)));
    CHECK(arcsid::pow(Rat(BigInt(-2), BigInt(3)), 3) == Rat(BigInt(-8), BigInt(27)));
    CHECK_THROWS_AS(arcsid::pow(Rat(0), -1), arcsid::arith_error);
    CHECK(arcsid::ipow(BigInt(3), 5) == 243);
    CHECK(arcsid::ipow(BigInt(2), 0) == 1);
}

TEST_CASE("randomized field laws", "[rational]") {
    std::mt19937 rng(0xA11CE);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    auto draw = [&] { return Rat(BigInt(num(rng)), BigInt(den(rng))); };

    for (int i = 0; i < 100; ++i) {
        Rat a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rat(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // Round-trip through the printed form.
        Rat back(a.num(), a.den());
        CHECK(back == a);
    }
}
