#pragma once

#include <cstar/rational.hpp>
#include <cstar/unipoly.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <vector>

namespace cstar {

/** Exponent vector over the ambient variables (x, y, z, s). */
using Exps = std::array<long, 4>;

inline long total_degree(const Exps &e) { return e[0] + e[1] + e[2] + e[3]; }

/** Lexicographic order with x > y > z > s, biggest term first. */
struct LexGreater {
    bool operator()(const Exps &a, const Exps &b) const { return a > b; }
};

/** One weight per ambient variable, in the order (x, y, z, s). */
using WeightVector = std::array<long, 4>;

/**
 * Sparse polynomial in (x, y, z, s) over the rationals.  Terms are held in
 * lex order and never zero.
 */
class MultiPoly {
  public:
    using TermMap = std::map<Exps, Rational, LexGreater>;

    MultiPoly() {}

    static MultiPoly monomial(const Rational &c, long ex, long ey, long ez, long es) {
        MultiPoly p;
        if (!c.is_zero())
            p.t_[{ex, ey, ez, es}] = c;
        return p;
    }
    static MultiPoly constant(const Rational &c) { return monomial(c, 0, 0, 0, 0); }

    /** Lifts a univariate polynomial onto one ambient variable (0..3). */
    static MultiPoly from_unipoly(const UniPoly &q, int var) {
        MultiPoly p;
        for (long i = 0; i <= q.degree(); ++i) {
            Rational c = q.coeff(i);
            if (c.is_zero())
                continue;
            Exps e{0, 0, 0, 0};
            e[var] = i;
            p.t_[e] = c;
        }
        return p;
    }

    const TermMap &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t num_terms() const { return t_.size(); }

    Rational coeff(const Exps &e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Rational(0) : it->second;
    }

    /** Sets one coefficient (zero erases); used by the corruption harnesses. */
    void set(const Exps &e, const Rational &c) {
        if (c.is_zero())
            t_.erase(e);
        else
            t_[e] = c;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto &[e, c] : r.t_)
            c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly &a, const MultiPoly &b) {
        MultiPoly r = a;
        for (const auto &[e, c] : b.t_) {
            Rational s = r.coeff(e) + c;
            r.set(e, s);
        }
        return r;
    }
    friend MultiPoly operator-(const MultiPoly &a, const MultiPoly &b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
        MultiPoly r;
        for (const auto &[ea, ca] : a.t_)
            for (const auto &[eb, cb] : b.t_) {
                Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                r.set(e, r.coeff(e) + ca * cb);
            }
        return r;
    }
    friend MultiPoly operator*(const Rational &s, const MultiPoly &a) {
        MultiPoly r;
        for (const auto &[e, c] : a.t_)
            r.set(e, s * c);
        return r;
    }

    friend bool operator==(const MultiPoly &a, const MultiPoly &b) { return a.t_ == b.t_; }
    friend bool operator!=(const MultiPoly &a, const MultiPoly &b) { return !(a == b); }

    /** Specializes z := 1, folding the z exponent away. */
    MultiPoly substitute_z_one() const {
        MultiPoly r;
        for (const auto &[e, c] : t_) {
            Exps f{e[0], e[1], 0, e[3]};
            r.set(f, r.coeff(f) + c);
        }
        return r;
    }

    /**
     * Canonical compact form in graded-lex order, e.g. "x^2*y+s^2*z-s^3".
     * Custom variable names cover reuses of the type in other coordinates.
     */
    std::string str(const std::array<std::string, 4> &names = {"x", "y", "z", "s"}) const {
        if (t_.empty())
            return "0";
        std::string out;
        for (const auto &[e, c] : t_) {
            bool first = out.empty();
            if (c.sign() < 0)
                out += "-";
            else if (!first)
                out += "+";
            Rational m = c.abs();
            std::string mono;
            for (int v = 0; v < 4; ++v) {
                if (e[v] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += names[v];
                if (e[v] > 1) {
                    mono += "^";
                    mono += std::to_string(e[v]);
                }
            }
            if (mono.empty()) {
                out += m.str();
            } else {
                if (m != Rational(1)) {
                    out += m.str();
                    out += "*";
                }
                out += mono;
            }
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const MultiPoly &p) {
        return os << p.str();
    }

  private:
    TermMap t_;
};

/** Outcome of a homogeneity check under a weight vector. */
struct WeightedDegree {
    bool homogeneous = false;
    long degree = 0;                 // meaningful when homogeneous
    std::vector<long> degrees_seen;  // distinct weighted degrees, ascending
};

/** Weighted degree of every term; homogeneous iff a single value occurs. */
inline WeightedDegree weighted_degree_check(const MultiPoly &p, const WeightVector &w) {
    WeightedDegree out;
    for (const auto &[e, c] : p.terms()) {
        long d = e[0] * w[0] + e[1] * w[1] + e[2] * w[2] + e[3] * w[3];
        bool seen = false;
        for (long v : out.degrees_seen)
            if (v == d)
                seen = true;
        if (!seen)
            out.degrees_seen.push_back(d);
    }
    std::sort(out.degrees_seen.begin(), out.degrees_seen.end());
    out.homogeneous = out.degrees_seen.size() <= 1;
    out.degree = out.degrees_seen.empty() ? 0 : out.degrees_seen[0];
    return out;
}

} // namespace cstar
