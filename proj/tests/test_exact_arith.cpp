#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "reversive/exact_arith.hpp"

using namespace reversive;

TEST_CASE("binomial: listed values") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(-1, 2) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-2, 1) == -2);
    CHECK(binomial(-2, -2) == 0);
}

TEST_CASE("binomial: Pascal recurrence with generalized upper argument") {
    for (long r = -25; r <= 25; ++r) {
        for (long k = 0; k <= 20; ++k) {
            INFO("r=" << r << " k=" << k);
            CHECK(binomial(r, k) == binomial(r - 1, k - 1) + binomial(r - 1, k));
        }
    }
}

TEST_CASE("binomial: factorial oracle for 0 <= k <= r <= 30") {
    for (long r = 0; r <= 30; ++r) {
        for (long k = 0; k <= r; ++k) {
            CHECK(binomial(r, k) == oracle::factorial_binomial(r, k));
        }
    }
}

TEST_CASE("binomial: falling-factorial oracle, including negative r") {
    for (long r = -12; r <= 12; ++r) {
        for (long k = -3; k <= 12; ++k) {
            CHECK(Rational(binomial(r, k)) == oracle::falling_binomial(r, k));
        }
    }
}

TEST_CASE("binomial: vanishes for 0 <= r < k") {
    for (long r = 0; r <= 20; ++r) {
        for (long k = r + 1; k <= 25; ++k) {
            CHECK(binomial(r, k) == 0);
        }
    }
}

TEST_CASE("binomial: large arguments stay exact") {
    // C(400, 200) has 120 digits.
    CHECK(binomial(400, 200) == oracle::factorial_binomial(400, 200));
    CHECK(to_string(binomial(400, 200)).size() == 120);
}

TEST_CASE("exact_div") {
    CHECK(exact_div(20, 5) == 4);
    CHECK(exact_div(44, 4) == 11);
    CHECK(exact_div(-44, 4) == -11);
    CHECK_THROWS_AS(exact_div(7, 2), DivisibilityViolation);
    CHECK_THROWS_AS(exact_div(7, 0), ZeroDivisor);
}

TEST_CASE("exact_div(a*b, b) == a on random operands") {
    std::mt19937_64 rng(20260116);
    std::uniform_int_distribution<long> dist(-1'000'000'000L, 1'000'000'000L);
    for (int trial = 0; trial < 2000; ++trial) {
        const Integer a = Integer(dist(rng)) * Integer(dist(rng)) * Integer(dist(rng));
        Integer b = dist(rng);
        if (b == 0) b = 1;
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("rationals are normalized") {
    const Rational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), ZeroDivisor);
    CHECK(to_integer(make_rational(12, 4)) == 3);
    CHECK_THROWS_AS(to_integer(make_rational(1, 2)), NonIntegerCoefficient);
}

TEST_CASE("parse_integer") {
    CHECK(parse_integer("-17") == -17);
    CHECK(parse_integer("+5") == 5);
    CHECK(parse_integer("123456789012345678901234567890") ==
          Integer("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_integer(""), ParseError);
    CHECK_THROWS_AS(parse_integer("-"), ParseError);
    CHECK_THROWS_AS(parse_integer("1x"), ParseError);
}
