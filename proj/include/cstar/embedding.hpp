#pragma once

#include <cstar/dpd.hpp>
#include <cstar/laurent.hpp>
#include <cstar/multipoly.hpp>

#include <optional>

namespace cstar {

/**
 * Weighted-homogeneous hypersurface model attached to a normal form:
 * the relation F in (x, y, z, s), the ambient weights, the degree of F,
 * and the z-padding alpha used to force a positive y-weight.
 */
struct Embedding {
    MultiPoly F;
    WeightVector weights{1, 1, 1, 1};
    long degree = 0;
    long alpha = 0;
    NormalForm nf;
    bool all_weights_positive = false;
    bool toric = false;
    bool normality_certified = false;
};

struct NormalityFlags {
    bool k_eq_1 = false;
    bool zero_sum_reduced = false;
    bool certified = false;
};

/**
 * Sufficient normality certificates: k = 1, or e_plus + e_minus = 0 with
 * div(Q) reduced (the zero divisor counts as reduced).  Absence of both
 * certifies nothing either way.
 */
inline NormalityFlags normality_flags(const NormalForm &nf) {
    NormalityFlags f;
    f.k_eq_1 = (nf.k == 1);
    f.zero_sum_reduced =
        (nf.e_plus + nf.e_minus == 0) && (nf.Q.is_one() || nf.Q.is_squarefree());
    f.certified = f.k_eq_1 || f.zero_sum_reduced;
    return f;
}

namespace detail {

/** Relation x^k y - s^{k(e+ + e-)} Q(s^d / z) z^{deg Q + alpha}, expanded. */
inline MultiPoly embedding_relation(const NormalForm &nf, long alpha) {
    long degq = std::max(nf.Q.degree(), 0L);
    long base = nf.k * (nf.e_plus + nf.e_minus);
    MultiPoly f = MultiPoly::monomial(Rational(1), nf.k, 1, 0, 0);
    for (long j = 0; j <= degq; ++j) {
        Rational qj = nf.Q.coeff(j);
        if (qj.is_zero())
            continue;
        f = f - MultiPoly::monomial(qj, 0, 0, degq - j + alpha, base + nf.d * j);
    }
    return f;
}

inline Embedding build_with_alpha(const NormalForm &nf, long alpha) {
    long degq = std::max(nf.Q.degree(), 0L);
    Embedding e;
    e.nf = nf;
    e.alpha = alpha;
    e.F = embedding_relation(nf, alpha);
    e.weights = {nf.e_plus, nf.k * nf.e_minus + nf.d * (degq + alpha), nf.d, 1};
    e.degree = nf.k * (nf.e_plus + nf.e_minus) + nf.d * (degq + alpha);
    e.all_weights_positive = e.weights[1] > 0; // the other three are >= 1 by construction
    e.toric = is_toric(nf);
    e.normality_certified = normality_flags(nf).certified;
    return e;
}

} // namespace detail

/** Hypersurface model with the natural weights; the y-weight may be <= 0. */
inline Embedding build_embedding(const NormalForm &nf) {
    return detail::build_with_alpha(nf, 0);
}

/** Same model padded by the least alpha >= 0 making every weight positive. */
inline Embedding positive_weight_embedding(const NormalForm &nf) {
    long degq = std::max(nf.Q.degree(), 0L);
    long wy = nf.k * nf.e_minus + nf.d * degq;
    long alpha = 0;
    if (wy <= 0)
        alpha = (-wy) / nf.d + 1; // least alpha with wy + d*alpha > 0
    return detail::build_with_alpha(nf, alpha);
}

/**
 * In the toric case Q = 1 with k > 1 the hypersurface is non-normal; its
 * normalization is the hypersurface x*y' - s^{e+ + e-} in the ambient with
 * weights (e_plus, e_minus, d, 1).  The y slot holds y' here.
 */
inline std::optional<Embedding> toric_replacement(const NormalForm &nf) {
    if (!is_toric(nf))
        return std::nullopt;
    Embedding e;
    e.nf = nf;
    e.alpha = 0;
    e.F = MultiPoly::monomial(Rational(1), 1, 1, 0, 0) -
          MultiPoly::monomial(Rational(1), 0, 0, 0, nf.e_plus + nf.e_minus);
    e.weights = {nf.e_plus, nf.e_minus, nf.d, 1};
    e.degree = nf.e_plus + nf.e_minus;
    e.all_weights_positive = nf.e_minus > 0;
    e.toric = true;
    e.normality_certified = true; // x*y' = s^n is normal
    return e;
}

/**
 * Affine chart z = 1 of the model together with the cyclic group data: the
 * relation in (x, y, s) and the residues of the action exponents
 * (e_plus, k e_minus, 1) modulo the order d.
 */
struct Covering {
    MultiPoly relation;
    std::array<long, 3> action{0, 0, 0};
    long order = 1;
};

inline long mod_residue(long v, long m) {
    long r = v % m;
    return (r < 0) ? r + m : r;
}

inline Covering dehomogenize(const Embedding &e) {
    Covering c;
    c.relation = e.F.substitute_z_one();
    c.order = e.nf.d;
    c.action = {mod_residue(e.nf.e_plus, e.nf.d),
                mod_residue(e.nf.k * e.nf.e_minus, e.nf.d), mod_residue(1, e.nf.d)};
    return c;
}

/**
 * Residual of the orbit-map substitution x = s^{e+} u, y = s^{k e-} Q(s^d)
 * u^{-k} in a relation in (x, y, s); identically zero exactly when the
 * substitution parametrizes the chart.
 */
inline Laurent parametrization_residual(const MultiPoly &relation, const NormalForm &nf) {
    UniPoly s = UniPoly::variable();
    Laurent lx = Laurent::term(RationalFunction(s).pow(nf.e_plus), 1);
    Laurent ly = Laurent::term(
        RationalFunction(s).pow(nf.k * nf.e_minus) * RationalFunction(nf.Q.compose_power(nf.d)),
        -nf.k);
    Laurent ls = Laurent::term(RationalFunction(s), 0);
    Laurent acc;
    for (const auto &[e, c] : relation.terms()) {
        if (e[2] != 0)
            throw std::domain_error("parametrization_residual: relation must not involve z");
        Laurent t = Laurent::term(RationalFunction(c), 0);
        t = t * lx.pow(e[0]) * ly.pow(e[1]) * ls.pow(e[3]);
        acc = acc + t;
    }
    return acc;
}

inline bool parametrization_check(const NormalForm &nf) {
    Covering c = dehomogenize(build_embedding(nf));
    return parametrization_residual(c.relation, nf).is_zero();
}

/**
 * Common character of a relation under the diagonal cyclic action; nullopt
 * when two monomials transform differently.
 */
inline std::optional<long> relation_character(const MultiPoly &relation,
                                              const std::array<long, 3> &action, long order) {
    std::optional<long> r;
    for (const auto &[e, c] : relation.terms()) {
        long v = mod_residue(e[0] * action[0] + e[1] * action[1] + e[3] * action[2], order);
        if (!r)
            r = v;
        else if (*r != v)
            return std::nullopt;
    }
    return r ? r : std::optional<long>(0);
}

inline bool character_check(const NormalForm &nf) {
    Covering c = dehomogenize(build_embedding(nf));
    return relation_character(c.relation, c.action, c.order).has_value();
}

/**
 * Elimination of z, possible when z occurs in exactly one term, linearly,
 * with a constant coefficient: the chart z != 0 of V(F) is then the chart
 * G != 0 in the ambient with the z weight removed.
 */
struct ReducedPresentation {
    MultiPoly G;
    std::array<long, 3> weights{1, 1, 1}; // (x, y, s)
    bool all_weights_positive = false;
};

inline std::optional<ReducedPresentation> eliminate_z(const Embedding &e) {
    const Exps *zterm = nullptr;
    for (const auto &[ex, c] : e.F.terms()) {
        if (ex[2] == 0)
            continue;
        if (zterm != nullptr)
            return std::nullopt; // z in more than one term
        if (ex[2] != 1)
            return std::nullopt; // z not linear
        if (ex[0] != 0 || ex[1] != 0 || ex[3] != 0)
            return std::nullopt; // z coefficient not constant
        zterm = &ex;
    }
    if (zterm == nullptr)
        return std::nullopt;
    Rational c = e.F.coeff(*zterm);
    MultiPoly rest = e.F - MultiPoly::monomial(c, 0, 0, 1, 0);
    // sign fixed by the lex-leading term, so x^k y stays positive
    if (!rest.is_zero() && rest.terms().begin()->second.sign() < 0)
        rest = -rest;
    ReducedPresentation r;
    r.G = rest;
    r.weights = {e.weights[0], e.weights[1], e.weights[3]};
    r.all_weights_positive = r.weights[0] > 0 && r.weights[1] > 0 && r.weights[2] > 0;
    return r;
}

/**
 * Smooth affine model x^k y - s^d + 1 = 0 with the order-d action
 * (x, y, s) -> (zeta x, zeta^{-k} y, zeta^e s); its quotient is the chart
 * the pair (-(e/d)[0], (e/d)[0] - (1/k)[1]) presents.
 */
inline Covering universal_cover_form(long e, long d, long k) {
    if (k < 2)
        throw std::invalid_argument("universal_cover_form: k must be at least 2");
    if (e < 1 || d < 1)
        throw std::invalid_argument("universal_cover_form: e and d must be positive");
    if (to_long(big_gcd(BigInt(e), BigInt(d))) != 1)
        throw std::invalid_argument("universal_cover_form: e and d must be coprime");
    Covering c;
    c.relation = MultiPoly::monomial(Rational(1), k, 1, 0, 0) -
                 MultiPoly::monomial(Rational(1), 0, 0, 0, d) + MultiPoly::constant(Rational(1));
    c.order = d;
    c.action = {mod_residue(1, d), mod_residue(-k, d), mod_residue(e, d)};
    return c;
}

/**
 * Exponent vectors of total degree <= bound whose weighted degree vanishes
 * mod d, ordered by weighted degree and then lexicographically.  This is
 * the monomial basis of the invariant ring truncated at the bound.
 */
inline std::vector<std::vector<long>> invariant_monomials(const std::vector<long> &weights,
                                                          long d, long bound) {
    if (d < 1)
        throw std::domain_error("invariant_monomials: order must be positive");
    std::vector<std::vector<long>> out;
    std::vector<long> cur(weights.size(), 0);
    // enumerate exponent vectors by backtracking over remaining degree
    auto rec = [&](auto &&self, size_t pos, long left, long wsum) -> void {
        if (pos == weights.size()) {
            if (mod_residue(wsum, d) == 0)
                out.push_back(cur);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v, wsum + v * weights[pos]);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, bound, 0);
    auto wdeg = [&weights](const std::vector<long> &v) {
        long s = 0;
        for (size_t j = 0; j < v.size(); ++j)
            s += v[j] * weights[j];
        return s;
    };
    std::sort(out.begin(), out.end(),
              [&](const std::vector<long> &a, const std::vector<long> &b) {
                  long da = wdeg(a), db = wdeg(b);
                  if (da != db)
                      return da < db;
                  return a > b;
              });
    return out;
}

} // namespace cstar
