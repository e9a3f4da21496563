#include <catch2/catch_amalgamated.hpp>

#include <cstar/rational.hpp>

using namespace cstar;

TEST_CASE("construction reduces to lowest terms") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(7, 1).den() == BigInt(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic identities") {
    Rational a(1, 2), b(-1, 3);
    CHECK(a + b == Rational(1, 6));
    CHECK(a - b == Rational(5, 6));
    CHECK(a * b == Rational(-1, 6));
    CHECK(a / b == Rational(-3, 2));
    CHECK(-b == Rational(1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("floor ceil and fractional part") {
    CHECK(Rational(7, 2).floor() == BigInt(3));
    CHECK(Rational(-3, 2).floor() == BigInt(-2));
    CHECK(Rational(-3, 2).ceil() == BigInt(-1));
    CHECK(Rational(-3, 2).frac() == Rational(1, 2));
    CHECK(Rational(5).frac() == Rational(0));
    CHECK(Rational(-7, 3).floor() == BigInt(-3));
    CHECK(Rational(-7, 3).frac() == Rational(2, 3));
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(2, 7).sign() == 1);
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}

TEST_CASE("rational printing") {
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(10, 4).str() == "5/2");
}

TEST_CASE("arbitrary precision survives large products") {
    Rational big(1);
    for (int i = 1; i <= 40; ++i)
        big = big * Rational(i, 1);
    Rational back = big;
    for (int i = 1; i <= 40; ++i)
        back = back / Rational(i, 1);
    CHECK(back == Rational(1));
    CHECK(big > Rational(1000000000));
}

TEST_CASE("extended gcd produces a Bezout identity") {
    long x = 0, y = 0;
    CHECK(ext_gcd(240, 46, x, y) == 2);
    CHECK(240 * x + 46 * y == 2);
    CHECK(ext_gcd(-6, 4, x, y) == 2);
    CHECK(-6 * x + 4 * y == 2);
    CHECK(ext_gcd(0, 5, x, y) == 5);
    CHECK(5 * y == 5);
}

TEST_CASE("modular inverse") {
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(1, 2) == 1);
    CHECK(mod_inverse(-1, 5) == 4);
    CHECK(mod_inverse(9, 5) == 4);
    CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);
}

TEST_CASE("gcd and lcm on big integers") {
    CHECK(big_gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(big_lcm(BigInt(4), BigInt(6)) == BigInt(12));
    CHECK(big_gcd(BigInt(0), BigInt(7)) == BigInt(7));
}

TEST_CASE("narrowing to long is checked") {
    CHECK(to_long(BigInt(42)) == 42);
    BigInt huge(1);
    for (int i = 0; i < 70; ++i)
        huge *= 2;
    CHECK_THROWS_AS(to_long(huge), std::overflow_error);
}

TEST_CASE("rational powers") {
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(2, 3), 0) == Rational(1));
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), std::domain_error);
}
