#pragma once

#include <cstar/ratfunc.hpp>

#include <map>

namespace cstar {

/**
 * Laurent polynomial in u whose coefficients are rational functions of the
 * base variable.  Stored sparse; coefficients are never zero.
 */
class Laurent {
  public:
    Laurent() {}

    static Laurent term(const RationalFunction &c, long e) {
        Laurent l;
        if (!c.is_zero())
            l.t_[e] = c;
        return l;
    }

    const std::map<long, RationalFunction> &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    RationalFunction coeff(long e) const {
        auto it = t_.find(e);
        return it == t_.end() ? RationalFunction() : it->second;
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto &[e, c] : r.t_)
            c = -c;
        return r;
    }

    friend Laurent operator+(const Laurent &a, const Laurent &b) {
        Laurent r = a;
        for (const auto &[e, c] : b.t_) {
            RationalFunction s = r.coeff(e) + c;
            if (s.is_zero())
                r.t_.erase(e);
            else
                r.t_[e] = s;
        }
        return r;
    }
    friend Laurent operator-(const Laurent &a, const Laurent &b) { return a + (-b); }
    friend Laurent operator*(const Laurent &a, const Laurent &b) {
        Laurent r;
        for (const auto &[ea, ca] : a.t_)
            for (const auto &[eb, cb] : b.t_) {
                long e = ea + eb;
                RationalFunction s = r.coeff(e) + ca * cb;
                if (s.is_zero())
                    r.t_.erase(e);
                else
                    r.t_[e] = s;
            }
        return r;
    }

    friend bool operator==(const Laurent &a, const Laurent &b) { return a.t_ == b.t_; }
    friend bool operator!=(const Laurent &a, const Laurent &b) { return !(a == b); }

    /**
     * Integer power.  Negative exponents invert, which is defined only for
     * a single-term element.
     */
    Laurent pow(long n) const {
        if (n < 0) {
            if (t_.size() != 1)
                throw std::domain_error("Laurent: negative power of a non-monomial");
            const auto &[e, c] = *t_.begin();
            return term(c.pow(-1), -e).pow(-n);
        }
        Laurent acc = term(RationalFunction(1), 0), b = *this;
        while (n > 0) {
            if (n & 1)
                acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    /** Substitutes u -> c*u^j with c a nonzero rational function. */
    Laurent substitute(const RationalFunction &c, long j) const {
        if (c.is_zero())
            throw std::domain_error("Laurent: substitution by zero");
        Laurent r;
        for (const auto &[e, a] : t_) {
            long f = e * j;
            RationalFunction s = r.coeff(f) + a * c.pow(e);
            if (s.is_zero())
                r.t_.erase(f);
            else
                r.t_[f] = s;
        }
        return r;
    }

    std::string str(const std::string &uvar = "u", const std::string &tvar = "t") const {
        if (t_.empty())
            return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!out.empty())
                out += " + ";
            std::string c = it->second.str(tvar);
            bool multi = false;
            for (size_t i = 1; i < c.size(); ++i)
                if (c[i] == '+' || c[i] == '-')
                    multi = true;
            if (multi)
                c = "(" + c + ")";
            if (it->first == 0) {
                out += c;
            } else {
                if (c != "1")
                    out += c + "*";
                out += uvar;
                if (it->first != 1) {
                    out += "^";
                    out += std::to_string(it->first);
                }
            }
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const Laurent &l) {
        return os << l.str();
    }

  private:
    std::map<long, RationalFunction> t_;
};

} // namespace cstar
