#include <doctest.h>

#include "ffsq/rational.hpp"

using namespace ffsq;

TEST_CASE("binomial and factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(18, 9) == 48620);
    CHECK(binomial(24, 12) == 2704156);
}

TEST_CASE("number-theory helpers") {
    CHECK(totient(1) == 1);
    CHECK(totient(2) == 1);
    CHECK(totient(4) == 2);
    CHECK(totient(8) == 4);
    CHECK(totient(24) == 8);
    CHECK(divisors(8) == std::vector<uint64_t>{1, 2, 4, 8});
    CHECK(divisors(1) == std::vector<uint64_t>{1});
    CHECK(prime_factors(12) == std::vector<uint64_t>{2, 3});
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
}

TEST_CASE("decimal rendering is exact and platform independent") {
    CHECK(decimal_string(Rat(1, 2)) == "0.5");
    CHECK(decimal_string(Rat(0)) == "0");
    CHECK(decimal_string(Rat(-3, 4)) == "-0.75");
    CHECK(decimal_string(Rat(2, 3), 6) == "0.666667");
    CHECK(decimal_string(Rat(1, 3), 4) == "0.3333");
    CHECK(decimal_string(Rat(713, 4096), 6) == "0.174072");
    CHECK(decimal_string(Rat(1000), 4) == "1000");
    CHECK(decimal_string(Rat(999999, 1000), 4) == "1000");  // rounds up a digit
    CHECK(decimal_string(Rat(1, 100000), 3) == "0.00001");
    CHECK(decimal_string(Rat(1, 10000000), 3) == "1e-7");
    CHECK(decimal_string(Rat(Int("123456789123"), 1), 12) == "123456789123");
}

TEST_CASE("rational strings round trip") {
    CHECK(rational_string(Rat(35, 128)) == "35/128");
    CHECK(parse_rational("35/128") == Rat(35, 128));
    CHECK(parse_rational("0.5") == Rat(1, 2));
    CHECK(parse_rational("-0.25") == Rat(-1, 4));
    CHECK(parse_rational("7") == Rat(7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}
