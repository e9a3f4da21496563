#include <catch2/catch_amalgamated.hpp>

#include <cstar/multipoly.hpp>

using namespace cstar;

namespace {
MultiPoly mono(long c, long ex, long ey, long ez, long es) {
    return MultiPoly::monomial(Rational(c), ex, ey, ez, es);
}
} // namespace

TEST_CASE("factories and coefficient access") {
    MultiPoly f = mono(1, 2, 1, 0, 0);
    CHECK(f.coeff({2, 1, 0, 0}) == Rational(1));
    CHECK(f.coeff({0, 0, 0, 0}) == Rational(0));
    CHECK(MultiPoly::constant(Rational(0)).is_zero());
    UniPoly t = UniPoly::variable();
    MultiPoly q = MultiPoly::from_unipoly(t * t - UniPoly(1), 3);
    CHECK(q == mono(1, 0, 0, 0, 2) - mono(1, 0, 0, 0, 0));
}

TEST_CASE("arithmetic") {
    MultiPoly f = mono(1, 1, 1, 0, 0) - mono(1, 0, 0, 0, 2);
    CHECK(f + mono(1, 0, 0, 0, 2) == mono(1, 1, 1, 0, 0));
    CHECK((f - f).is_zero());
    MultiPoly p = f * f;
    CHECK(p.coeff({2, 2, 0, 0}) == Rational(1));
    CHECK(p.coeff({1, 1, 0, 2}) == Rational(-2));
    CHECK(p.coeff({0, 0, 0, 4}) == Rational(1));
    CHECK(Rational(-1, 2) * f ==
          Rational(1, 2) * mono(1, 0, 0, 0, 2) - Rational(1, 2) * mono(1, 1, 1, 0, 0));
    CHECK((Rational(0) * f).is_zero());
}

TEST_CASE("printing is plain lexicographic with x > y > z > s") {
    MultiPoly dg = mono(1, 3, 1, 0, 0) + mono(1, 0, 0, 1, 3) - mono(1, 0, 0, 0, 5);
    CHECK(dg.str() == "x^3*y+z*s^3-s^5");
    MultiPoly tilde = mono(1, 2, 1, 0, 0) + mono(1, 0, 0, 2, 0) - mono(1, 0, 0, 1, 2);
    CHECK(tilde.str() == "x^2*y+z^2-z*s^2");
    CHECK((mono(1, 1, 1, 0, 0) - mono(1, 0, 0, 0, 2)).str() == "x*y-s^2");
    CHECK((mono(2, 1, 0, 0, 0) - MultiPoly::constant(Rational(1, 2))).str() == "2*x-1/2");
    CHECK(MultiPoly().str() == "0");
    CHECK(mono(-1, 0, 1, 0, 0).str() == "-y");
}

TEST_CASE("substituting z = 1") {
    MultiPoly f = mono(1, 2, 1, 0, 0) + mono(1, 0, 0, 1, 2) - mono(1, 0, 0, 0, 3);
    MultiPoly g = f.substitute_z_one();
    CHECK(g == mono(1, 2, 1, 0, 0) + mono(1, 0, 0, 0, 2) - mono(1, 0, 0, 0, 3));
    // exponents collapse onto the same monomial
    MultiPoly h = mono(1, 0, 0, 2, 0) - mono(1, 0, 0, 5, 0);
    CHECK(h.substitute_z_one().is_zero());
}

TEST_CASE("weighted homogeneity report") {
    WeightVector w{1, 1, 1, 1};
    MultiPoly f = mono(1, 2, 1, 0, 0) + mono(1, 0, 0, 1, 2) - mono(1, 0, 0, 0, 3);
    WeightedDegree wd = weighted_degree_check(f, w);
    CHECK(wd.homogeneous);
    CHECK(wd.degree == 3);

    WeightVector w2{1, 2, 2, 1};
    MultiPoly g = mono(1, 2, 1, 0, 0) + mono(1, 0, 0, 2, 0) - mono(1, 0, 0, 1, 2);
    WeightedDegree wd2 = weighted_degree_check(g, w2);
    CHECK(wd2.homogeneous);
    CHECK(wd2.degree == 4);

    MultiPoly bad = f + mono(1, 1, 0, 0, 0);
    WeightedDegree wd3 = weighted_degree_check(bad, w);
    CHECK(!wd3.homogeneous);
    CHECK(wd3.degrees_seen.size() == 2);
}

TEST_CASE("exponent total degree") {
    CHECK(total_degree(Exps{2, 1, 0, 0}) == 3);
    CHECK(total_degree(Exps{0, 0, 1, 3}) == 4);
}
