#include <catch2/catch_amalgamated.hpp>

#include <cstar/ratfunc.hpp>

using namespace cstar;

namespace {
const UniPoly t = UniPoly::variable();
}

TEST_CASE("canonical form cancels and keeps the denominator monic") {
    RationalFunction f(t * t - UniPoly(1), t - UniPoly(1));
    CHECK(f == RationalFunction(t + UniPoly(1)));
    CHECK(f.is_polynomial());
    RationalFunction g(UniPoly(2), Rational(2) * t - UniPoly(2));
    CHECK(g.denominator() == t - UniPoly(1));
    CHECK(g.numerator() == UniPoly(1));
    CHECK_THROWS_AS(RationalFunction(t, UniPoly()), std::domain_error);
}

TEST_CASE("field arithmetic") {
    RationalFunction f(UniPoly(1), t);
    RationalFunction g(t);
    CHECK(f * g == RationalFunction(1));
    CHECK(f + f == RationalFunction(UniPoly(2), t));
    CHECK(g - g == RationalFunction(0));
    CHECK((f / g).denominator() == t * t);
    CHECK_THROWS_AS(f / RationalFunction(0), std::domain_error);
    CHECK(-f == RationalFunction(UniPoly(-1), t));
}

TEST_CASE("powers invert for negative exponents") {
    RationalFunction f(t - UniPoly(1));
    CHECK(f.pow(3) == RationalFunction((t - UniPoly(1)).pow(3)));
    CHECK(f.pow(0) == RationalFunction(1));
    CHECK(f.pow(-2) == RationalFunction(UniPoly(1), (t - UniPoly(1)).pow(2)));
    CHECK_THROWS_AS(RationalFunction(0).pow(-1), std::domain_error);
}

TEST_CASE("substituting a power of the variable") {
    RationalFunction f(t - UniPoly(1), t);
    RationalFunction g = f.compose_power(3);
    CHECK(g == RationalFunction(t.pow(3) - UniPoly(1), t.pow(3)));
}

TEST_CASE("rational function printing") {
    CHECK(RationalFunction(t + UniPoly(1)).str() == "t+1");
    CHECK(RationalFunction(UniPoly(1), t).str() == "1/t");
    CHECK(RationalFunction(t - UniPoly(1), t + UniPoly(1)).str() == "(t-1)/(t+1)");
    CHECK(RationalFunction(t, (t - UniPoly(1)).pow(2)).str() == "t/(t^2-2*t+1)");
    CHECK(RationalFunction(0).str() == "0");
}
