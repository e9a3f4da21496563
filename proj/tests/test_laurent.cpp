#include <catch2/catch_amalgamated.hpp>

#include <cstar/laurent.hpp>

using namespace cstar;

namespace {
const UniPoly t = UniPoly::variable();
const RationalFunction rt{t};
}

TEST_CASE("terms with zero coefficients vanish") {
    CHECK(Laurent::term(RationalFunction(0), 3).is_zero());
    Laurent a = Laurent::term(rt, 1);
    CHECK(!a.is_zero());
    CHECK(a.coeff(1) == rt);
    CHECK(a.coeff(0).is_zero());
    CHECK((a - a).is_zero());
}

TEST_CASE("graded multiplication adds exponents") {
    Laurent a = Laurent::term(rt, 2);
    Laurent b = Laurent::term(RationalFunction(UniPoly(1), t), -2);
    CHECK(a * b == Laurent::term(RationalFunction(1), 0));
    Laurent s = a + b;
    CHECK((s * s).coeff(0) == RationalFunction(2));
    CHECK((s * s).coeff(4) == rt * rt);
    CHECK((s * s).coeff(-4) == (rt * rt).pow(-1));
}

TEST_CASE("powers invert single terms only") {
    Laurent a = Laurent::term(rt, 1);
    CHECK(a.pow(3) == Laurent::term(rt.pow(3), 3));
    CHECK(a.pow(0) == Laurent::term(RationalFunction(1), 0));
    CHECK(a.pow(-2) == Laurent::term(rt.pow(-2), -2));
    Laurent two = a + Laurent::term(RationalFunction(1), 0);
    CHECK_THROWS_AS(two.pow(-1), std::domain_error);
    CHECK(two.pow(2).coeff(1) == RationalFunction(Rational(2)) * rt);
}

TEST_CASE("substitution rescales the grading variable") {
    // u -> t^2 u^{-1} sends c u^e to c t^{2e} u^{-e}
    Laurent a = Laurent::term(rt, 1) + Laurent::term(RationalFunction(1), 0);
    Laurent b = a.substitute(rt * rt, -1);
    CHECK(b.coeff(-1) == rt.pow(3));
    CHECK(b.coeff(0) == RationalFunction(1));
    CHECK_THROWS_AS(a.substitute(RationalFunction(0), 1), std::domain_error);
}

TEST_CASE("cancellation removes stored terms") {
    Laurent a = Laurent::term(rt, 1) + Laurent::term(-rt, 1);
    CHECK(a.is_zero());
    CHECK(a.terms().empty());
}
