#pragma once

#include <cstar/rational.hpp>

#include <utility>
#include <vector>

namespace cstar {

/**
 * Dense univariate polynomial over the rationals.  Coefficients are stored
 * ascending by exponent and trimmed, so the zero polynomial is the empty
 * vector and back() is never zero.  The indeterminate has no fixed name;
 * printing takes one (default "t").
 */
class UniPoly {
  public:
    UniPoly() {}
    UniPoly(const Rational &c) {
        if (!c.is_zero())
            c_.push_back(c);
    }
    UniPoly(long n) : UniPoly(Rational(n)) {}

    static UniPoly variable() { return from_coeffs({Rational(0), Rational(1)}); }
    /** t - p, the monic vanishing polynomial of a rational point. */
    static UniPoly linear(const Rational &p) { return from_coeffs({-p, Rational(1)}); }
    static UniPoly from_coeffs(std::vector<Rational> c) {
        UniPoly q;
        q.c_ = std::move(c);
        q.trim();
        return q;
    }

    /** Degree, with deg 0 = -1. */
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    Rational coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size()))
            return Rational(0);
        return c_[i];
    }
    Rational leading() const {
        if (is_zero())
            throw std::domain_error("UniPoly: leading coefficient of zero");
        return c_.back();
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto &c : r.c_)
            c = -c;
        return r;
    }

    friend UniPoly operator+(const UniPoly &a, const UniPoly &b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(i) + b.coeff(i);
        return from_coeffs(std::move(c));
    }
    friend UniPoly operator-(const UniPoly &a, const UniPoly &b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b) {
        if (a.is_zero() || b.is_zero())
            return UniPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return from_coeffs(std::move(c));
    }
    friend UniPoly operator*(const Rational &s, const UniPoly &a) {
        UniPoly r = a;
        for (auto &c : r.c_)
            c *= s;
        r.trim();
        return r;
    }

    friend bool operator==(const UniPoly &a, const UniPoly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly &a, const UniPoly &b) { return !(a == b); }

    /** Quotient and remainder with deg r < deg b.  Exact over the field. */
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b) {
        if (b.is_zero())
            throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly q, r = a;
        long db = b.degree();
        Rational lb = b.leading();
        while (!r.is_zero() && r.degree() >= db) {
            long k = r.degree() - db;
            Rational f = r.leading() / lb;
            std::vector<Rational> mono(k + 1);
            mono[k] = f;
            UniPoly m = from_coeffs(std::move(mono));
            q = q + m;
            r = r - m * b;
        }
        return {q, r};
    }

    /** Division known to be exact; throws if a remainder survives. */
    static UniPoly exact_div(const UniPoly &a, const UniPoly &b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero())
            throw std::domain_error("UniPoly: exact_div with nonzero remainder");
        return q;
    }

    UniPoly monic() const {
        if (is_zero())
            return *this;
        return (Rational(1) / leading()) * *this;
    }

    UniPoly derivative() const {
        if (is_constant())
            return UniPoly();
        std::vector<Rational> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            c[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        return from_coeffs(std::move(c));
    }

    /** Monic gcd; gcd(0, 0) = 0. */
    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = divmod(a, b).second;
            a = b;
            b = r.monic(); // unit normalization keeps coefficients small
        }
        return a.monic();
    }

    bool is_squarefree() const {
        if (is_zero())
            return false;
        if (is_constant())
            return true;
        return gcd(*this, derivative()).is_constant();
    }

    /**
     * Yun decomposition of a nonzero polynomial: monic pairwise coprime
     * squarefree factors with their multiplicities, ascending by
     * multiplicity.  The constant leading unit is dropped.
     */
    static std::vector<std::pair<UniPoly, long>> squarefree_decompose(const UniPoly &q) {
        if (q.is_zero())
            throw std::domain_error("UniPoly: squarefree decomposition of zero");
        std::vector<std::pair<UniPoly, long>> out;
        UniPoly p = q.monic();
        if (p.is_constant())
            return out;
        UniPoly g = gcd(p, p.derivative());
        if (g.is_constant()) {
            out.push_back({p, 1});
            return out;
        }
        UniPoly b = exact_div(p, g);
        UniPoly c = exact_div(p.derivative(), g);
        UniPoly d = c - b.derivative();
        long i = 1;
        while (!b.is_constant()) {
            UniPoly a = gcd(b, d);
            if (!a.is_constant())
                out.push_back({a.monic(), i});
            b = exact_div(b, a);
            c = exact_div(d, a);
            d = c - b.derivative();
            ++i;
        }
        return out;
    }

    /** q(t^d) by exponent spreading; d >= 1. */
    UniPoly compose_power(long d) const {
        if (d < 1)
            throw std::domain_error("UniPoly: compose_power needs d >= 1");
        if (is_zero())
            return UniPoly();
        std::vector<Rational> c(static_cast<size_t>(degree() * d + 1));
        for (size_t i = 0; i < c_.size(); ++i)
            c[i * d] = c_[i];
        return from_coeffs(std::move(c));
    }

    /** q(alpha*t + beta), alpha != 0. */
    UniPoly compose_affine(const Rational &alpha, const Rational &beta) const {
        if (alpha.is_zero())
            throw std::domain_error("UniPoly: compose_affine needs alpha != 0");
        UniPoly lin = from_coeffs({beta, alpha});
        UniPoly r;
        for (long i = degree(); i >= 0; --i)
            r = r * lin + UniPoly(coeff(i));
        return r;
    }

    Rational eval(const Rational &x) const {
        Rational r(0);
        for (long i = degree(); i >= 0; --i)
            r = r * x + coeff(i);
        return r;
    }

    UniPoly pow(long n) const {
        if (n < 0)
            throw std::domain_error("UniPoly: negative power");
        UniPoly acc(1), b = *this;
        while (n > 0) {
            if (n & 1)
                acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    /**
     * Canonical order used for divisor bases: ascending degree, then
     * coefficients read from the leading one down, smaller magnitude
     * first and the negative one first on equal magnitude.  So div(t)
     * precedes div(t-1), which precedes div(t+1).
     */
    static int compare(const UniPoly &a, const UniPoly &b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree() ? -1 : 1;
        for (long i = a.degree(); i >= 0; --i) {
            Rational ca = a.coeff(i), cb = b.coeff(i);
            if (ca == cb)
                continue;
            if (ca.abs() != cb.abs())
                return ca.abs() < cb.abs() ? -1 : 1;
            return ca < cb ? -1 : 1;
        }
        return 0;
    }
    static bool canonical_less(const UniPoly &a, const UniPoly &b) { return compare(a, b) < 0; }

    /**
     * Canonical compact form: terms descending by exponent, "^" for
     * exponents above 1, "*" between a coefficient and the variable,
     * unit coefficients reduced to their sign.  Examples: "t^2-2",
     * "-1/2*t+3", "0".
     */
    std::string str(const std::string &var = "t") const {
        if (is_zero())
            return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            Rational c = coeff(i);
            if (c.is_zero())
                continue;
            bool first = out.empty();
            if (c.sign() < 0)
                out += "-";
            else if (!first)
                out += "+";
            Rational m = c.abs();
            if (i == 0) {
                out += m.str();
            } else {
                if (m != Rational(1)) {
                    out += m.str();
                    out += "*";
                }
                out += var;
                if (i > 1) {
                    out += "^";
                    out += std::to_string(i);
                }
            }
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const UniPoly &p) {
        return os << p.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace cstar
