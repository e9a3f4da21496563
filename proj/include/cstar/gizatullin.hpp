#pragma once

#include <cstar/dpd.hpp>
#include <cstar/embedding.hpp>

#include <utility>

namespace cstar {

/**
 * Parameters of the hyperbolic pair (-(e/m)[p], (e/m)[p] - c[q]): coprime
 * exponents 1 <= e < m, a multiplicity c >= 1 and two distinct rational
 * points.
 */
struct GizatullinParams {
    long e = 1, m = 2, c = 1;
    Rational p = Rational(0), q = Rational(1);

    GizatullinParams() = default;
    GizatullinParams(long e_, long m_, long c_, Rational p_ = Rational(0),
                     Rational q_ = Rational(1))
        : e(e_), m(m_), c(c_), p(std::move(p_)), q(std::move(q_)) {
        if (e < 1 || e >= m)
            throw std::domain_error("GizatullinParams: need 1 <= e < m");
        if (to_long(big_gcd(BigInt(e), BigInt(m))) != 1)
            throw std::domain_error("GizatullinParams: e and m must be coprime");
        if (c < 1)
            throw std::domain_error("GizatullinParams: need c >= 1");
        if (p == q)
            throw std::domain_error("GizatullinParams: the two points must differ");
    }
};

/** The pair the parameters describe. */
inline DPDPair hyperbolic_pair(const GizatullinParams &gp) {
    DPDPair pr;
    pr.plus = QDivisor::point(gp.p, Rational(-gp.e, gp.m));
    pr.minus = QDivisor::point(gp.p, Rational(gp.e, gp.m)) +
               QDivisor::point(gp.q, Rational(-gp.c));
    return pr;
}

/**
 * Cyclic quotient A^2/E_d under (x, y) -> (zeta x, zeta^e y), realized as
 * the open part z != 0 of the plane with weights (1, e, d).  A common
 * factor of e and d is allowed; it merely makes the action non-faithful.
 */
struct ToricQuotient {
    long d = 1, e = 1;
    std::array<long, 3> weights{1, 1, 1}; // (x, y, z)
    std::array<long, 2> action{1, 1};     // exponents on (x, y)
};

inline ToricQuotient toric_embedding(long d, long e) {
    if (d < 1 || e < 1)
        throw std::domain_error("toric_embedding: d and e must be positive");
    ToricQuotient t;
    t.d = d;
    t.e = e;
    t.weights = {1, e, d};
    t.action = {1, e};
    return t;
}

/** V_{d,e} and V_{d,e'} coincide exactly when e = e' or ee' = 1 mod d. */
inline bool toric_iso_check(long d, long e, long e2) {
    if (e < 1 || e >= d || e2 < 1 || e2 >= d)
        throw std::domain_error("toric_iso_check: need 1 <= e, e' < d");
    return e == e2 || mod_residue(e * e2, d) == 1;
}

/** Least gamma >= 0 making gamma*m - e prime to c; one exists below c + 1. */
inline long find_gamma(long e, long m, long c) {
    if (m < 1 || to_long(big_gcd(BigInt(e), BigInt(m))) != 1)
        throw std::domain_error("find_gamma: e and m must be coprime");
    if (c < 1)
        throw std::domain_error("find_gamma: c must be positive");
    for (long g = 0; g <= c; ++g)
        if (to_long(big_gcd(BigInt(g * m - e), BigInt(c))) == 1)
            return g;
    throw std::logic_error("find_gamma: search left the guaranteed range");
}

/**
 * Presentation of the hyperbolic surface as the open part f != 0 of the
 * plane with weights (a, b, c), f = x*y - z^m, carrying the residual E_d
 * action with exponents (a, b, c) and d = c*m.
 */
struct PlaneEmbedding {
    long a = 1, b = 1, c = 1;
    long m = 2, d = 2;
    long gamma = 0;
    MultiPoly equation;
    std::array<long, 3> action{1, 1, 1};
};

inline PlaneEmbedding plane_embedding(const GizatullinParams &gp) {
    long d = gp.c * gp.m;
    // scan gamma by absolute value, nonnegative first
    long gamma = 0;
    bool found = false;
    for (long step = 0; !found; ++step) {
        for (long g : {step, -step}) {
            long a0 = mod_residue(gp.e - g * gp.m, d);
            if (a0 >= 1 &&
                to_long(big_gcd(BigInt(g * gp.m - gp.e), BigInt(gp.c))) == 1) {
                gamma = g;
                found = true;
                break;
            }
        }
    }
    PlaneEmbedding pe;
    pe.c = gp.c;
    pe.m = gp.m;
    pe.d = d;
    pe.gamma = gamma;
    pe.a = mod_residue(gp.e - gamma * gp.m, d);
    pe.b = d - pe.a;
    pe.equation = MultiPoly::monomial(Rational(1), 1, 1, 0, 0) -
                  MultiPoly::monomial(Rational(1), 0, 0, gp.m, 0);
    pe.action = {pe.a, pe.b, pe.c};
    bool ok = pe.a + pe.b == d && to_long(big_gcd(BigInt(pe.a), BigInt(pe.b))) == 1 &&
              mod_residue(pe.a - gp.e, gp.m) == 0 && mod_residue(pe.b + gp.e, gp.m) == 0;
    if (!ok)
        throw std::logic_error("plane_embedding: construction invariant violated");
    return pe;
}

namespace detail {

/**
 * The three monomial relations among the degree +-1 and +-m generators,
 * taken at the points (0, 1).
 */
inline bool generator_relations(const Laurent &up, const Laurent &um, const Laurent &vp,
                                const Laurent &vm, long e, long m, long c) {
    RationalFunction t{UniPoly::variable()};
    RationalFunction t1{UniPoly::linear(Rational(1))};
    if (up.pow(m) != Laurent::term(t.pow(m - e), 0) * vp)
        return false;
    if (um.pow(m) != Laurent::term(t.pow(e), 0) * vm)
        return false;
    return up * um == Laurent::term(t * t1.pow(c), 0);
}

inline bool action_congruences(long a, long b, long c, long e, long m, long d) {
    return mod_residue(a + b, d) == 0 && mod_residue(c * m, d) == 0 &&
           mod_residue(a * c - (e - m) * c, d) == 0;
}

} // namespace detail

/**
 * Checks that t*u, (t-1)^c u^{-1}, t^e u^m and t^{-e}(t-1)^{cm} u^{-m}
 * satisfy the quoted relations, and that they are exactly the canonical
 * section generators of the hyperbolic pair in degrees +-1 and +-m.
 */
inline bool generator_relations_check(const GizatullinParams &gp) {
    RationalFunction t{UniPoly::variable()};
    RationalFunction t1{UniPoly::linear(Rational(1))};
    Laurent up = Laurent::term(t, 1);
    Laurent um = Laurent::term(t1.pow(gp.c), -1);
    Laurent vp = Laurent::term(t.pow(gp.e), gp.m);
    Laurent vm = Laurent::term(t1.pow(gp.c * gp.m) / t.pow(gp.e), -gp.m);
    if (!detail::generator_relations(up, um, vp, vm, gp.e, gp.m, gp.c))
        return false;
    DPDPair pr = hyperbolic_pair(GizatullinParams(gp.e, gp.m, gp.c, Rational(0), Rational(1)));
    return section_generator(pr, 1) == up.coeff(1) &&
           section_generator(pr, -1) == um.coeff(-1) &&
           section_generator(pr, gp.m) == vp.coeff(gp.m) &&
           section_generator(pr, -gp.m) == vm.coeff(-gp.m);
}

/**
 * Consistency of the residual action with the plane model: the relation
 * x*y - z^m must be fixed, the character of x^c must match tau^{e-m} u_+,
 * and v_+ v_- must pull back to (tau^m - 1)^d along t = tau^m.
 */
inline bool action_consistency_check(const PlaneEmbedding &pe, const GizatullinParams &gp) {
    if (pe.m != gp.m || pe.c != gp.c || pe.d != gp.c * gp.m)
        throw std::invalid_argument(
            "action_consistency_check: embedding does not belong to the parameters");
    if (pe.action != std::array<long, 3>{pe.a, pe.b, pe.c})
        return false;
    if (!detail::action_congruences(pe.action[0], pe.action[1], pe.action[2], gp.e, gp.m,
                                    pe.d))
        return false;
    RationalFunction t{UniPoly::variable()};
    RationalFunction t1{UniPoly::linear(Rational(1))};
    Laurent vp = Laurent::term(t.pow(gp.e), gp.m);
    Laurent vm = Laurent::term(t1.pow(pe.d) / t.pow(gp.e), -gp.m);
    Laurent prod = vp * vm;
    if (prod != Laurent::term(t1.pow(pe.d), 0))
        return false;
    UniPoly lifted = prod.coeff(0).numerator().compose_power(gp.m);
    UniPoly taum1 = UniPoly::variable().pow(gp.m) - UniPoly(Rational(1));
    return lifted == taum1.pow(pe.d);
}

enum class SurfaceClass { Toric, NonToric, Other };

/**
 * Which finite-class-group shape a pair matches: a cyclic quotient
 * V_{d,e}, the hyperbolic family, or neither as presented.  Other makes
 * no claim about the surface, only about the shape of the presentation.
 */
struct Classification {
    SurfaceClass kind = SurfaceClass::Other;
    long d = 0, e = 0;        // V_{d,e} label, e the smaller of e, e^{-1} mod d
    GizatullinParams params;  // hyperbolic case, in the input coordinates
    std::string reason;
    NormalForm nf;
    Transcript transcript;
};

namespace detail {

struct Ray {
    long x = 0, y = 0;
};

inline Ray primitive_ray(long x, long y) {
    long g = to_long(big_gcd(BigInt(x), BigInt(y)));
    return {x / g, y / g};
}

/**
 * Label (d, e) of the cyclic quotient a toric normal form presents.  The
 * monomials of the ring fill the cone d a - e+ i >= 0, d a + e- i >= 0 in
 * the (a, i) lattice; the SL2(Z) change moving the first ray to (1, 0)
 * puts the second at (e, d), which is the invariant cone of A^2/E_d.
 * The label is reduced to the smaller of e and e^{-1} mod d, those two
 * quotients being the same surface.
 */
inline std::pair<long, long> cyclic_label(const NormalForm &nf) {
    Ray w1 = primitive_ray(nf.e_minus, -nf.d);
    Ray w2 = primitive_ray(nf.e_plus, nf.d);
    long al, be;
    ext_gcd(w1.x, w1.y, al, be);
    long dd = w1.x * w2.y - w1.y * w2.x;
    if (dd == 1)
        return {1, 1};
    long e = mod_residue(al * w2.x + be * w2.y, dd);
    return {dd, std::min(e, mod_inverse(e, dd))};
}

} // namespace detail

inline Classification classify(const DPDPair &input) {
    auto [nf, tr] = to_normal_form(input);
    Classification cls;
    cls.nf = nf;
    cls.transcript = tr;
    if (is_toric(nf)) {
        if (nf.e_plus + nf.e_minus == 0) {
            cls.reason = "degenerate toric type: e_plus + e_minus = 0";
            return cls;
        }
        auto [d, e] = detail::cyclic_label(nf);
        cls.kind = SurfaceClass::Toric;
        cls.d = d;
        cls.e = e;
        return cls;
    }
    if (nf.k != 1) {
        cls.reason = "fractional part of D- away from the distinguished point (k = " +
                     std::to_string(nf.k) + ")";
        return cls;
    }
    if (nf.e_minus != -nf.e_plus) {
        cls.reason = "fractional parts at the distinguished point do not cancel";
        return cls;
    }
    if (nf.e_plus == nf.d) {
        cls.reason = "no fractional part at the distinguished point";
        return cls;
    }
    auto fac = UniPoly::squarefree_decompose(nf.Q);
    if (fac.size() != 1 || fac[0].first.degree() != 1) {
        cls.reason = "residual divisor spread over several points";
        return cls;
    }
    cls.kind = SurfaceClass::NonToric;
    Rational q0 = -fac[0].first.coeff(0);
    cls.params = GizatullinParams(nf.e_plus, nf.d, fac[0].second, tr.beta,
                                  q0 * tr.alpha + tr.beta);
    return cls;
}

/** A pair presenting V_{d,e}: (0, -(d/r)[0]) with r the inverse of -e mod d. */
inline DPDPair cyclic_quotient_pair(long d, long e) {
    if (d < 1)
        throw std::domain_error("cyclic_quotient_pair: d must be positive");
    DPDPair pr;
    if (d == 1) {
        pr.minus = QDivisor::point(Rational(0), Rational(-1));
        return pr;
    }
    if (e < 1 || e >= d || to_long(big_gcd(BigInt(e), BigInt(d))) != 1)
        throw std::domain_error("cyclic_quotient_pair: need 1 <= e < d prime to d");
    long r = mod_inverse(mod_residue(-e, d), d);
    pr.minus = QDivisor::point(Rational(0), Rational(-d, r));
    return pr;
}

/** A pair with the classified shape; classify returns it to the same class. */
inline DPDPair reconstruct(const Classification &cls) {
    switch (cls.kind) {
    case SurfaceClass::Toric:
        return cyclic_quotient_pair(cls.d, cls.e);
    case SurfaceClass::NonToric:
        return hyperbolic_pair(cls.params);
    default:
        throw std::domain_error("reconstruct: nothing to rebuild from Other");
    }
}

} // namespace cstar
