#pragma once

#include <cstar/ratfunc.hpp>

#include <vector>

namespace cstar {

/**
 * Divisor with rational coefficients on the affine line over Q, stored as
 * coefficient * div(P) terms.  Invariants: every basis polynomial is monic,
 * squarefree and nonconstant, the basis is pairwise coprime, coefficients
 * are nonzero, and entries are sorted by the canonical polynomial order.
 * Galois orbits stay bundled: no factorization beyond gcd splitting ever
 * happens, so div(t^2-2) is a single entry.
 */
class QDivisor {
  public:
    struct Entry {
        UniPoly p;
        Rational c;
        friend bool operator==(const Entry &a, const Entry &b) {
            return a.p == b.p && a.c == b.c;
        }
    };

    QDivisor() {}

    /** c * div(P); P must be monic, squarefree, nonconstant. */
    static QDivisor of_poly(const UniPoly &p, const Rational &c) {
        check_basis(p);
        QDivisor d;
        if (!c.is_zero())
            d.e_.push_back({p, c});
        return d;
    }

    /** c * [p], the point divisor at a rational point. */
    static QDivisor point(const Rational &p, const Rational &c) {
        return of_poly(UniPoly::linear(p), c);
    }

    /** Sum of arbitrary (monic squarefree nonconstant, coefficient) terms. */
    static QDivisor from_terms(const std::vector<std::pair<UniPoly, Rational>> &terms) {
        QDivisor d;
        for (const auto &[p, c] : terms) {
            check_basis(p);
            d.insert(p, c);
        }
        d.normalize();
        return d;
    }

    /**
     * Divisor of a nonzero rational function: squarefree decompositions of
     * numerator and denominator with integer multiplicities, poles negative.
     */
    static QDivisor div_of(const RationalFunction &f) {
        if (f.is_zero())
            throw std::domain_error("QDivisor: div of the zero function");
        QDivisor d;
        for (const auto &[p, m] : UniPoly::squarefree_decompose(f.numerator()))
            d.insert(p, Rational(m));
        for (const auto &[p, m] : UniPoly::squarefree_decompose(f.denominator()))
            d.insert(p, Rational(-m));
        d.normalize();
        return d;
    }

    const std::vector<Entry> &entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }
    bool is_integral() const {
        for (const auto &e : e_)
            if (!e.c.is_integer())
                return false;
        return true;
    }
    /** All coefficients <= 0. */
    bool is_leq_zero() const {
        for (const auto &e : e_)
            if (e.c.sign() > 0)
                return false;
        return true;
    }
    /** All coefficients >= 0. */
    bool is_effective() const {
        for (const auto &e : e_)
            if (e.c.sign() < 0)
                return false;
        return true;
    }

    /** Degree as a Q-divisor: sum of c * deg(P). */
    Rational degree() const {
        Rational d(0);
        for (const auto &e : e_)
            d += e.c * Rational(e.p.degree());
        return d;
    }

    QDivisor operator-() const {
        QDivisor r = *this;
        for (auto &e : r.e_)
            e.c = -e.c;
        return r;
    }

    friend QDivisor operator+(const QDivisor &a, const QDivisor &b) {
        QDivisor r = a;
        for (const auto &e : b.e_)
            r.insert(e.p, e.c);
        r.normalize();
        return r;
    }
    friend QDivisor operator-(const QDivisor &a, const QDivisor &b) { return a + (-b); }
    friend QDivisor operator*(const Rational &s, const QDivisor &a) {
        QDivisor r;
        if (s.is_zero())
            return r;
        r = a;
        for (auto &e : r.e_)
            e.c = s * e.c;
        return r;
    }

    friend bool operator==(const QDivisor &a, const QDivisor &b) { return a.e_ == b.e_; }
    friend bool operator!=(const QDivisor &a, const QDivisor &b) { return !(a == b); }

    /** Coefficient-wise floor, taken per basis polynomial. */
    QDivisor floor() const {
        QDivisor r;
        for (const auto &e : e_) {
            Rational f(e.c.floor());
            if (!f.is_zero())
                r.e_.push_back({e.p, f});
        }
        return r;
    }
    /** D - floor(D); coefficients in [0, 1). */
    QDivisor fractional() const { return *this - floor(); }

    /** Sum of coefficients over basis polynomials vanishing at p. */
    Rational eval(const Rational &p) const {
        Rational v(0);
        for (const auto &e : e_)
            if (e.p.eval(p).is_zero())
                v += e.c;
        return v;
    }

    /**
     * Pullback along s -> s^d: each entry maps to the squarefree
     * decomposition of P(s^d) with coefficients scaled by multiplicity.
     */
    QDivisor pullback_power(long d) const {
        QDivisor r;
        for (const auto &e : e_)
            for (const auto &[p, m] : UniPoly::squarefree_decompose(e.p.compose_power(d)))
                r.insert(p, e.c * Rational(m));
        r.normalize();
        return r;
    }

    /**
     * Transport along the coordinate change t -> alpha*t + beta; the point
     * p moves to (p - beta)/alpha.  Basis polynomials are re-normalized to
     * monic, which preserves the divisor.
     */
    QDivisor affine_transport(const Rational &alpha, const Rational &beta) const {
        if (alpha.is_zero())
            throw std::domain_error("QDivisor: affine transport needs alpha != 0");
        QDivisor r;
        for (const auto &e : e_)
            r.e_.push_back({e.p.compose_affine(alpha, beta).monic(), e.c});
        r.sort();
        return r;
    }

    /**
     * Canonical text form, e.g. "-1/2*div(t) + 1*div(t-1)"; the zero
     * divisor prints as "0".
     */
    std::string str() const {
        if (e_.empty())
            return "0";
        std::string out;
        for (const auto &e : e_) {
            if (out.empty()) {
                out += e.c.str();
            } else {
                out += (e.c.sign() < 0) ? " - " : " + ";
                out += e.c.abs().str();
            }
            out += "*div(";
            out += e.p.str();
            out += ")";
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const QDivisor &d) {
        return os << d.str();
    }

  private:
    static void check_basis(const UniPoly &p) {
        if (p.is_constant())
            throw std::domain_error("QDivisor: basis polynomial must be nonconstant");
        if (!p.is_monic())
            throw std::domain_error("QDivisor: basis polynomial must be monic");
        if (!p.is_squarefree())
            throw std::domain_error("QDivisor: basis polynomial must be squarefree");
    }

    /**
     * Adds c * div(q) to a pairwise coprime basis by gcd splitting, never
     * factoring.  q monic squarefree nonconstant.
     */
    void insert(UniPoly q, const Rational &c) {
        if (c.is_zero())
            return;
        Rational cq = c;
        for (size_t i = 0; i < e_.size() && !q.is_constant();) {
            UniPoly g = UniPoly::gcd(e_[i].p, q);
            if (g.is_constant()) {
                ++i;
                continue;
            }
            UniPoly rest = UniPoly::exact_div(e_[i].p, g);
            Rational sum = e_[i].c + cq;
            Rational keep = e_[i].c;
            e_.erase(e_.begin() + i);
            // rest and g divide the removed entry, so both stay coprime to
            // everything else; g is settled now, rest keeps its coefficient.
            if (!rest.is_constant())
                e_.push_back({rest, keep});
            if (!sum.is_zero())
                e_.push_back({g, sum});
            q = UniPoly::exact_div(q, g);
            i = 0; // the list changed; rescan
        }
        if (!q.is_constant())
            e_.push_back({q, cq});
    }

    void sort() {
        std::sort(e_.begin(), e_.end(), [](const Entry &a, const Entry &b) {
            return UniPoly::canonical_less(a.p, b.p);
        });
    }

    void normalize() {
        // insert() keeps the basis pairwise coprime and zero-free already;
        // merging duplicates here is defensive, ordering is the real work.
        sort();
        std::vector<Entry> merged;
        for (const auto &e : e_) {
            if (!merged.empty() && merged.back().p == e.p)
                merged.back().c += e.c;
            else
                merged.push_back(e);
        }
        e_.clear();
        for (auto &e : merged)
            if (!e.c.is_zero())
                e_.push_back(e);
    }

    std::vector<Entry> e_;
};

} // namespace cstar
