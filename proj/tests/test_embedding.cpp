#include <catch2/catch_amalgamated.hpp>

#include <cstar/embedding.hpp>

using namespace cstar;

namespace {
const UniPoly t = UniPoly::variable();
const UniPoly tm1 = t - UniPoly(1);
}

TEST_CASE("hypersurface relation of the basic family") {
    Embedding e = build_embedding(NormalForm(1, 1, 0, 2, tm1));
    CHECK(e.F.str() == "x^2*y+z*s^2-s^3");
    CHECK(e.weights == WeightVector{1, 1, 1, 1});
    CHECK(e.degree == 3);
    CHECK(e.alpha == 0);
    CHECK(e.all_weights_positive);
    CHECK(!e.toric);

    Embedding f = build_embedding(NormalForm(2, 1, 0, 3, tm1));
    CHECK(f.F.str() == "x^3*y+z*s^3-s^5");
    CHECK(f.weights == WeightVector{1, 2, 2, 1});
    CHECK(f.degree == 5);
}

TEST_CASE("relations are weighted homogeneous of the stated degree") {
    std::vector<NormalForm> forms = {
        NormalForm(1, 1, 0, 2, tm1),
        NormalForm(2, 1, 0, 3, tm1),
        NormalForm(2, 1, -1, 2, tm1),
        NormalForm(3, 2, 1, 2, tm1 * (t - UniPoly(2))),
        NormalForm(4, 3, -1, 1, t * t - UniPoly(2)),
    };
    for (const auto &nf : forms) {
        Embedding e = build_embedding(nf);
        WeightedDegree wd = weighted_degree_check(e.F, e.weights);
        CHECK(wd.homogeneous);
        CHECK(wd.degree == e.degree);
        Embedding p = positive_weight_embedding(nf);
        WeightedDegree wp = weighted_degree_check(p.F, p.weights);
        CHECK(wp.homogeneous);
        CHECK(wp.degree == p.degree);
        CHECK(p.all_weights_positive);
    }
}

TEST_CASE("nonpositive y-weight and its padding") {
    NormalForm nf(2, 1, -1, 2, tm1);
    Embedding base = build_embedding(nf);
    CHECK(base.F.str() == "x^2*y+z-s^2");
    CHECK(base.weights == WeightVector{1, 0, 2, 1});
    CHECK(base.degree == 2);
    CHECK(!base.all_weights_positive);

    Embedding pos = positive_weight_embedding(nf);
    CHECK(pos.alpha == 1);
    CHECK(pos.F.str() == "x^2*y+z^2-z*s^2");
    CHECK(pos.weights == WeightVector{1, 2, 2, 1});
    CHECK(pos.degree == 4);
    CHECK(pos.all_weights_positive);
    // the two charts z = 1 agree
    CHECK(pos.F.substitute_z_one() == base.F.substitute_z_one());
}

TEST_CASE("padding in the toric case with negative y-weight") {
    NormalForm nf(2, 1, -1, 3, UniPoly(1));
    Embedding pos = positive_weight_embedding(nf);
    CHECK(pos.alpha == 2);
    CHECK(pos.F.str() == "x^3*y-z^2");
    CHECK(pos.weights == WeightVector{1, 1, 2, 1});
    CHECK(pos.degree == 4);
    // already-positive weights are left alone
    Embedding id = positive_weight_embedding(NormalForm(1, 1, 0, 2, tm1));
    CHECK(id.alpha == 0);
    CHECK(id.F == build_embedding(NormalForm(1, 1, 0, 2, tm1)).F);
}

TEST_CASE("normality certificates") {
    CHECK(normality_flags(NormalForm(2, 1, -1, 1, tm1.pow(2))).certified); // k = 1
    NormalityFlags f = normality_flags(NormalForm(2, 1, -1, 2, tm1));
    CHECK(!f.k_eq_1);
    CHECK(f.zero_sum_reduced);
    CHECK(f.certified);
    CHECK(!normality_flags(NormalForm(2, 2, -2, 2, tm1.pow(2))).certified);
    CHECK(!normality_flags(NormalForm(2, 1, 1, 3, UniPoly(1))).certified);
    CHECK(build_embedding(NormalForm(2, 1, 1, 3, UniPoly(1))).toric);
}

TEST_CASE("normalization of the non-normal toric models") {
    auto r = toric_replacement(NormalForm(2, 1, 1, 3, UniPoly(1)));
    REQUIRE(r.has_value());
    CHECK(r->F.str() == "x*y-s^2");
    CHECK(r->weights == WeightVector{1, 1, 2, 1});
    CHECK(r->degree == 2);
    CHECK(r->normality_certified);

    auto r2 = toric_replacement(NormalForm(3, 2, 1, 2, UniPoly(1)));
    REQUIRE(r2.has_value());
    CHECK(r2->F.str() == "x*y-s^3");
    CHECK(r2->weights == WeightVector{2, 1, 3, 1});

    CHECK(!toric_replacement(NormalForm(1, 1, 0, 2, tm1)).has_value());
}

TEST_CASE("affine chart z = 1 and the cyclic action") {
    Covering c = dehomogenize(build_embedding(NormalForm(1, 1, 0, 2, tm1)));
    CHECK(c.relation.str() == "x^2*y-s^3+s^2");
    CHECK(c.order == 1);
    CHECK(c.action == std::array<long, 3>{0, 0, 0});

    Covering c5 = dehomogenize(build_embedding(NormalForm(2, 1, 0, 3, tm1)));
    CHECK(c5.relation.str() == "x^3*y-s^5+s^3");
    CHECK(c5.order == 2);
    CHECK(c5.action == std::array<long, 3>{1, 0, 1});

    CHECK(mod_residue(-3, 5) == 2);
    CHECK(mod_residue(5, 5) == 0);
    CHECK(mod_residue(7, 5) == 2);
}

TEST_CASE("orbit map parametrizes the chart") {
    std::vector<NormalForm> forms = {
        NormalForm(1, 1, 0, 2, tm1),
        NormalForm(2, 1, 0, 3, tm1),
        NormalForm(2, 1, -1, 2, tm1),
        NormalForm(3, 2, 1, 1, UniPoly(1)),
        NormalForm(4, 3, -1, 1, t * t - UniPoly(2)),
    };
    for (const auto &nf : forms)
        CHECK(parametrization_check(nf));

    // a stray term leaves a visible residual
    NormalForm nf(2, 1, 0, 2, tm1);
    MultiPoly rel = dehomogenize(build_embedding(nf)).relation;
    CHECK(parametrization_residual(rel, nf).is_zero());
    MultiPoly broken = rel + MultiPoly::monomial(Rational(1), 1, 0, 0, 0);
    CHECK(!parametrization_residual(broken, nf).is_zero());
    CHECK_THROWS_AS(parametrization_residual(
                        MultiPoly::monomial(Rational(1), 0, 0, 1, 0), nf),
                    std::domain_error);
}

TEST_CASE("the relation transforms by a single character") {
    for (const auto &nf :
         {NormalForm(2, 1, 0, 2, tm1), NormalForm(3, 2, -1, 2, tm1),
          NormalForm(4, 3, 1, 1, tm1 * (t - UniPoly(2)))})
        CHECK(character_check(nf));

    Covering c = dehomogenize(build_embedding(NormalForm(2, 1, 0, 2, tm1)));
    auto chi = relation_character(c.relation, c.action, c.order);
    REQUIRE(chi.has_value());
    CHECK(*chi == 0);
    MultiPoly broken = c.relation + MultiPoly::monomial(Rational(1), 0, 0, 0, 1);
    CHECK(!relation_character(broken, c.action, c.order).has_value());
}

TEST_CASE("eliminating a linear z") {
    {
        auto r = eliminate_z(build_embedding(NormalForm(3, 1, -1, 2, tm1)));
        REQUIRE(r.has_value());
        CHECK(r->G.str() == "x^2*y-s^3");
        CHECK(r->weights == std::array<long, 3>{1, 1, 1});
        CHECK(r->all_weights_positive);
    }
    {
        auto r = eliminate_z(build_embedding(NormalForm(2, 1, -1, 3, tm1)));
        REQUIRE(r.has_value());
        CHECK(r->G.str() == "x^3*y-s^2");
        CHECK(r->weights == std::array<long, 3>{1, -1, 1});
        CHECK(!r->all_weights_positive);
    }
    // z tied to a power of s cannot be eliminated
    CHECK(!eliminate_z(build_embedding(NormalForm(1, 1, 0, 2, tm1))).has_value());
    // no z at all
    CHECK(!eliminate_z(build_embedding(NormalForm(2, 1, 1, 2, UniPoly(1)))).has_value());
}

TEST_CASE("smooth cover of the cyclic quotient chart") {
    Covering c = universal_cover_form(2, 5, 3);
    CHECK(c.relation.str() == "x^3*y-s^5+1");
    CHECK(c.order == 5);
    CHECK(c.action == std::array<long, 3>{1, 2, 2});

    Covering c2 = universal_cover_form(7, 3, 2);
    CHECK(c2.relation.str() == "x^2*y-s^3+1");
    CHECK(c2.order == 3);
    CHECK(c2.action == std::array<long, 3>{1, 1, 1});

    CHECK_THROWS_AS(universal_cover_form(2, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(universal_cover_form(2, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(universal_cover_form(0, 5, 2), std::invalid_argument);
}

TEST_CASE("invariant monomials under the weighted cyclic action") {
    auto m = invariant_monomials({1, 2}, 3, 3);
    REQUIRE(m.size() == 4);
    CHECK(m[0] == std::vector<long>{0, 0});
    CHECK(m[1] == std::vector<long>{3, 0});
    CHECK(m[2] == std::vector<long>{1, 1});
    CHECK(m[3] == std::vector<long>{0, 3});

    // count agrees with a direct scan
    for (long e : {1L, 2L, 3L}) {
        auto got = invariant_monomials({1, e}, 5, 8);
        long want = 0;
        for (long a = 0; a <= 8; ++a)
            for (long b = 0; a + b <= 8; ++b)
                if ((a + e * b) % 5 == 0)
                    ++want;
        CHECK((long)got.size() == want);
    }

    CHECK(invariant_monomials({1, 1}, 1, 2).size() == 6); // trivial action
    CHECK(invariant_monomials({1, 1, 1}, 3, 1).size() == 1);
    CHECK_THROWS_AS(invariant_monomials({1, 1}, 0, 2), std::domain_error);
}
