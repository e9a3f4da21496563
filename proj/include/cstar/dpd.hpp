#pragma once

#include <cstar/divisor.hpp>

#include <optional>
#include <sstream>

namespace cstar {

/**
 * Presentation pair (D+, D-) of fractional divisors on the affine line.
 * The pair is admissible when D+ + D- <= 0 coefficient-wise; construction
 * does not enforce that, check_pair reports it.
 */
struct DPDPair {
    QDivisor plus, minus;

    friend bool operator==(const DPDPair &a, const DPDPair &b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
};

struct PairReport {
    bool valid = false;
    std::vector<std::string> violations;
};

inline PairReport check_pair(const DPDPair &p) {
    PairReport r;
    QDivisor sum = p.plus + p.minus;
    for (const auto &e : sum.entries()) {
        if (e.c.sign() > 0) {
            std::ostringstream os;
            os << "positive coefficient " << e.c << " of div(" << e.p
               << ") in D+ + D-";
            r.violations.push_back(os.str());
        }
    }
    r.valid = r.violations.empty();
    return r;
}

inline void require_valid(const DPDPair &p) {
    PairReport r = check_pair(p);
    if (!r.valid) {
        std::string msg = "invalid presentation pair";
        for (const auto &v : r.violations)
            msg += "; " + v;
        throw std::domain_error(msg);
    }
}

inline DPDPair interchange(const DPDPair &p) { return {p.minus, p.plus}; }

/**
 * Decides equivalence (D+, D-) ~ (D+ - div f, D- + div f) and returns the
 * witness f when the pairs are equivalent: the difference of the plus
 * parts must be integral and opposite to the difference of the minus parts.
 */
inline std::optional<RationalFunction> are_equivalent(const DPDPair &a, const DPDPair &b) {
    QDivisor delta = a.plus - b.plus;
    if (!delta.is_integral())
        return std::nullopt;
    if (b.minus - a.minus != delta)
        return std::nullopt;
    // witness with div(witness) = delta, a product of basis powers
    RationalFunction f(1);
    for (const auto &e : delta.entries())
        f = f * RationalFunction(e.p).pow(to_long(e.c.num()));
    return f;
}

/**
 * Normal form of an admissible pair:
 *   D+ = -(e_plus/d) div(t),  D- = -(e_minus/d) div(t) - (1/k) div(Q)
 * with 0 < e_plus <= d, k >= 1, Q monic with Q(0) != 0.
 */
struct NormalForm {
    long d = 1;
    long e_plus = 1;
    long e_minus = 0;
    long k = 1;
    UniPoly Q = UniPoly(1);

    NormalForm() {}
    NormalForm(long d_, long ep, long em, long k_, const UniPoly &q)
        : d(d_), e_plus(ep), e_minus(em), k(k_), Q(q) {
        if (d < 1)
            throw std::domain_error("NormalForm: d must be positive");
        if (e_plus < 1 || e_plus > d)
            throw std::domain_error("NormalForm: e_plus must satisfy 0 < e_plus <= d");
        if (k < 1)
            throw std::domain_error("NormalForm: k must be positive");
        if (e_plus + e_minus < 0)
            throw std::domain_error("NormalForm: e_plus + e_minus must be >= 0");
        if (Q.is_zero() || !Q.is_monic())
            throw std::domain_error("NormalForm: Q must be monic");
        if (Q.eval(Rational(0)).is_zero())
            throw std::domain_error("NormalForm: Q may not vanish at 0");
    }

    friend bool operator==(const NormalForm &a, const NormalForm &b) {
        return a.d == b.d && a.e_plus == b.e_plus && a.e_minus == b.e_minus &&
               a.k == b.k && a.Q == b.Q;
    }
};

/** The literal pair described by a normal form. */
inline DPDPair reconstruct_pair(const NormalForm &nf) {
    DPDPair p;
    p.plus = QDivisor::point(Rational(0), Rational(-nf.e_plus, nf.d));
    p.minus = QDivisor::point(Rational(0), Rational(-nf.e_minus, nf.d));
    if (!nf.Q.is_one())
        p.minus = p.minus + Rational(-1, nf.k) * QDivisor::div_of(RationalFunction(nf.Q));
    return p;
}

/** What to_normal_form did to reach the normal form. */
struct Transcript {
    bool interchanged = false;
    Rational alpha = Rational(1); // coordinate change t -> alpha*t + beta
    Rational beta = Rational(0);
    RationalFunction witness = RationalFunction(1); // shift: D+ - div(witness)
};

namespace detail {

/**
 * The fractional part of D must sit at one rational point for the pair to
 * admit a normal form; returns that point, 0 if the part is empty, nullopt
 * with a reason otherwise.
 */
inline std::optional<Rational> single_fractional_point(const QDivisor &d, std::string &why) {
    QDivisor frac = d.fractional();
    if (frac.is_zero())
        return Rational(0);
    if (frac.entries().size() > 1) {
        why = "fractional support at several points";
        return std::nullopt;
    }
    const auto &e = frac.entries()[0];
    if (e.p.degree() != 1) {
        why = "fractional support at an irrational locus, div(" + e.p.str() + ")";
        return std::nullopt;
    }
    return -e.p.coeff(0);
}

} // namespace detail

/**
 * Brings an admissible pair to normal form, optionally interchanging the
 * two divisors, transporting the distinguished point to 0 and shifting by
 * a principal divisor.  The transcript records each of those moves.
 */
inline std::pair<NormalForm, Transcript> to_normal_form(const DPDPair &input) {
    require_valid(input);

    Transcript tr;
    DPDPair p = input;
    std::string why_direct, why_swapped;
    std::optional<Rational> p0 = detail::single_fractional_point(p.plus, why_direct);
    if (!p0) {
        DPDPair q = interchange(p);
        p0 = detail::single_fractional_point(q.plus, why_swapped);
        if (!p0)
            throw std::domain_error("to_normal_form: " + why_direct +
                                    " (after interchange: " + why_swapped + ")");
        p = q;
        tr.interchanged = true;
    }

    // move the distinguished point to the origin
    tr.alpha = Rational(1);
    tr.beta = *p0;
    QDivisor dp = p.plus.affine_transport(tr.alpha, tr.beta);
    QDivisor dm = p.minus.affine_transport(tr.alpha, tr.beta);

    Rational vp = dp.eval(Rational(0));
    Rational vm = dm.eval(Rational(0));
    long d = to_long(big_lcm(vp.den(), vm.den()));

    // integral shift pinning -D+(0) into (0, 1]
    BigInt n = vp.floor() + 1;
    long e_plus = to_long((Rational(d) * (Rational(n) - vp)).num());

    QDivisor target = QDivisor::point(Rational(0), Rational(-e_plus, d));
    QDivisor shift = dp - target; // integral by construction
    RationalFunction f(1);
    for (const auto &e : shift.entries())
        f = f * RationalFunction(e.p).pow(to_long(e.c.num()));
    tr.witness = f;

    QDivisor dm2 = dm + shift;
    Rational v0 = dm2.eval(Rational(0));
    long e_minus = to_long((Rational(-d) * v0).num());

    QDivisor rest = dm2 - QDivisor::point(Rational(0), v0);
    BigInt kk(1);
    for (const auto &e : rest.entries())
        kk = big_lcm(kk, e.c.den());
    long k = to_long(kk);

    UniPoly q(1);
    for (const auto &e : rest.entries()) {
        long mult = to_long((Rational(-k) * e.c).num());
        q = q * e.p.pow(mult); // rest <= 0 away from 0, so mult >= 0
    }

    return {NormalForm(d, e_plus, e_minus, k, q), tr};
}

/**
 * Canonical generator of the degree-i piece: the product of basis powers
 * P^(-floor(i*c)) over D+ for i > 0, over D- with |i| for i < 0, and 1 for
 * i = 0.  Its divisor is -floor(|i| D), the minimal admissible one.
 */
inline RationalFunction section_generator(const DPDPair &p, long i) {
    if (i == 0)
        return RationalFunction(1);
    const QDivisor &d = (i > 0) ? p.plus : p.minus;
    long n = (i > 0) ? i : -i;
    RationalFunction g(1);
    for (const auto &e : d.entries()) {
        long ex = to_long(-(Rational(n) * e.c).floor());
        g = g * RationalFunction(e.p).pow(ex);
    }
    return g;
}

/** Membership of f in the degree-i piece: f / g_i must be a polynomial. */
inline bool graded_piece_contains(const DPDPair &p, const RationalFunction &f, long i) {
    if (f.is_zero())
        return true;
    return (f / section_generator(p, i)).is_polynomial();
}

/**
 * Multiplicative closure of the graded pieces up to degree N: the product
 * of generators g_i g_j must land in the piece of degree i + j.
 */
inline bool ring_closure_check(const DPDPair &p, long N) {
    require_valid(p);
    for (long i = -N; i <= N; ++i)
        for (long j = -N; j <= N; ++j) {
            if (i + j < -N || i + j > N)
                continue;
            RationalFunction prod = section_generator(p, i) * section_generator(p, j);
            if (!graded_piece_contains(p, prod, i + j))
                return false;
        }
    return true;
}

inline bool is_toric(const NormalForm &nf) { return nf.Q.is_one(); }

/**
 * Smoothness of the surface presented by the pair, read off the normal
 * form.  The literal flag evaluates the criterion at the origin only:
 * div(Q) reduced and -m+ m- (D+(0) + D-(0)) = 1 with m the coefficient
 * denominators.  The pointwise flag applies the same formula at every
 * locus where D+ + D- is negative.
 */
struct SmoothnessReport {
    bool literal = false;
    bool pointwise = false;
};

inline SmoothnessReport smoothness_check(const DPDPair &p) {
    auto [nf, tr] = to_normal_form(p);
    SmoothnessReport out;

    bool q_reduced = nf.Q.is_one() || nf.Q.is_squarefree();

    {
        Rational vp(-nf.e_plus, nf.d);
        Rational vm(-nf.e_minus, nf.d);
        Rational lhs = Rational(-vp.den() * vm.den()) * (vp + vm);
        out.literal = q_reduced && lhs == Rational(1);
    }

    {
        DPDPair n = reconstruct_pair(nf);
        QDivisor sum = n.plus + n.minus;
        bool ok = q_reduced;
        for (const auto &e : sum.entries()) {
            if (e.c.sign() >= 0)
                continue;
            Rational cp(0), cm(0);
            for (const auto &a : n.plus.entries()) {
                UniPoly g = UniPoly::gcd(a.p, e.p);
                if (g == e.p)
                    cp = a.c;
            }
            for (const auto &a : n.minus.entries()) {
                UniPoly g = UniPoly::gcd(a.p, e.p);
                if (g == e.p)
                    cm = a.c;
            }
            Rational lhs = Rational(-cp.den() * cm.den()) * (cp + cm);
            if (lhs != Rational(1))
                ok = false;
        }
        out.pointwise = ok;
    }

    return out;
}

} // namespace cstar
