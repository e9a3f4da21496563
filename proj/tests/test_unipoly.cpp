#include <catch2/catch_amalgamated.hpp>

#include <cstar/unipoly.hpp>

using namespace cstar;

namespace {
const UniPoly t = UniPoly::variable();
}

TEST_CASE("factories and basic queries") {
    CHECK(t.degree() == 1);
    CHECK(UniPoly().degree() == -1);
    CHECK(UniPoly(3).is_constant());
    CHECK(UniPoly(1).is_one());
    CHECK(UniPoly::linear(Rational(2)) == t - UniPoly(2));
    CHECK(UniPoly::linear(Rational(-1, 2)).eval(Rational(-1, 2)) == Rational(0));
    UniPoly p = UniPoly::from_coeffs({Rational(1), Rational(0), Rational(2)});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(2) == Rational(2));
    CHECK(p.coeff(5) == Rational(0));
    CHECK(UniPoly::from_coeffs({Rational(1), Rational(0)}).degree() == 0);
}

TEST_CASE("ring arithmetic") {
    UniPoly a = t * t - UniPoly(1);
    UniPoly b = t + UniPoly(1);
    CHECK(a == (t - UniPoly(1)) * b);
    CHECK(a + UniPoly(1) == t * t);
    CHECK(Rational(1, 2) * (t + t) == t);
    CHECK((a - a).is_zero());
    CHECK(-b == UniPoly(-1) * b);
}

TEST_CASE("division with remainder") {
    UniPoly a = t.pow(3) - UniPoly(2) * t + UniPoly(5);
    UniPoly b = t - UniPoly(1);
    auto [q, r] = UniPoly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(r == UniPoly(a.eval(Rational(1))));
    CHECK(UniPoly::exact_div((t - UniPoly(1)) * (t + UniPoly(2)), b) == t + UniPoly(2));
    CHECK_THROWS_AS(UniPoly::exact_div(a, b), std::domain_error);
    CHECK_THROWS_AS(UniPoly::divmod(a, UniPoly()), std::domain_error);
}

TEST_CASE("monic normalization and derivative") {
    UniPoly p = Rational(3) * t * t + UniPoly(6);
    CHECK(p.monic() == t * t + UniPoly(2));
    CHECK(p.derivative() == Rational(6) * t);
    CHECK(UniPoly(5).derivative().is_zero());
}

TEST_CASE("gcd is monic") {
    UniPoly p = (t - UniPoly(1)) * (t - UniPoly(2));
    UniPoly q = (t - UniPoly(1)) * (t - UniPoly(3));
    CHECK(UniPoly::gcd(p, q) == t - UniPoly(1));
    CHECK(UniPoly::gcd(Rational(2) * p, Rational(3) * p) == p);
    CHECK(UniPoly::gcd(p, UniPoly(7)) == UniPoly(1));
}

TEST_CASE("squarefree detection and decomposition") {
    UniPoly p1 = t - UniPoly(1);
    UniPoly p2 = t - UniPoly(2);
    CHECK((p1 * p2).is_squarefree());
    CHECK(!(p1 * p1).is_squarefree());
    auto fac = UniPoly::squarefree_decompose(p1 * p1 * p2);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == p2);
    CHECK(fac[0].second == 1);
    CHECK(fac[1].first == p1);
    CHECK(fac[1].second == 2);
    auto one = UniPoly::squarefree_decompose(UniPoly(4));
    CHECK(one.empty());
    auto scaled = UniPoly::squarefree_decompose(Rational(7) * p1.pow(3));
    REQUIRE(scaled.size() == 1);
    CHECK(scaled[0] == std::pair<UniPoly, long>{p1, 3});
}

TEST_CASE("composition") {
    UniPoly q = t - UniPoly(1);
    CHECK(q.compose_power(3) == t.pow(3) - UniPoly(1));
    CHECK((t * t).compose_power(2) == t.pow(4));
    CHECK(q.compose_affine(Rational(1), Rational(5)) == t + UniPoly(4));
    CHECK(q.compose_affine(Rational(2), Rational(0)) == Rational(2) * t - UniPoly(1));
    CHECK_THROWS_AS(q.compose_affine(Rational(0), Rational(1)), std::domain_error);
    // roots move by p -> (p - beta)/alpha
    UniPoly moved = UniPoly::linear(Rational(3)).compose_affine(Rational(2), Rational(1));
    CHECK(moved.eval(Rational(1)) == Rational(0));
}

TEST_CASE("canonical order ascending degree then coefficients") {
    CHECK(UniPoly::canonical_less(t, t * t));
    CHECK(UniPoly::canonical_less(t, t - UniPoly(1)));
    CHECK(UniPoly::canonical_less(t - UniPoly(1), t + UniPoly(1)));
    CHECK(UniPoly::canonical_less(t - UniPoly(1), t - UniPoly(2)));
    CHECK(!UniPoly::canonical_less(t, t));
    CHECK(UniPoly::compare(t + UniPoly(1), t + UniPoly(1)) == 0);
}

TEST_CASE("polynomial printing") {
    CHECK((t * t - UniPoly(2)).str() == "t^2-2");
    CHECK((Rational(-1, 2) * t + UniPoly(3)).str() == "-1/2*t+3");
    CHECK(UniPoly().str() == "0");
    CHECK(UniPoly(1).str() == "1");
    CHECK((-t).str() == "-t");
    CHECK((t.pow(3) + Rational(2) * t).str() == "t^3+2*t");
    CHECK(t.str("s") == "s");
}
