#pragma once

#include <cstar/unipoly.hpp>

namespace cstar {

/**
 * Rational function num/den in one variable over the rationals, kept
 * canonical: gcd(num, den) = 1 and den monic; zero is 0/1.
 */
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const UniPoly &p) : num_(p), den_(1) {}
    RationalFunction(const Rational &c) : num_(c), den_(1) {}
    RationalFunction(long n) : num_(n), den_(1) {}
    RationalFunction(const UniPoly &num, const UniPoly &den) {
        if (den.is_zero())
            throw std::domain_error("RationalFunction: zero denominator");
        num_ = num;
        den_ = den;
        reduce();
    }

    const UniPoly &numerator() const { return num_; }
    const UniPoly &denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, nocheck{}); }

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) {
        if (b.is_zero())
            throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RationalFunction &a, const RationalFunction &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction &a, const RationalFunction &b) {
        return !(a == b);
    }

    /** Integer power; negative exponents require a nonzero function. */
    RationalFunction pow(long n) const {
        if (n < 0) {
            if (is_zero())
                throw std::domain_error("RationalFunction: negative power of zero");
            return RationalFunction(den_, num_).pow(-n);
        }
        return RationalFunction(num_.pow(n), den_.pow(n));
    }

    /** Substitutes t -> t^d in both numerator and denominator. */
    RationalFunction compose_power(long d) const {
        return RationalFunction(num_.compose_power(d), den_.compose_power(d));
    }

    std::string str(const std::string &var = "t") const {
        if (is_polynomial())
            return num_.str(var);
        auto wrap = [&](const UniPoly &p) {
            std::string s = p.str(var);
            bool multi = false;
            for (size_t i = 1; i < s.size(); ++i)
                if (s[i] == '+' || s[i] == '-')
                    multi = true;
            return multi ? "(" + s + ")" : s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }

    friend std::ostream &operator<<(std::ostream &os, const RationalFunction &f) {
        return os << f.str();
    }

  private:
    struct nocheck {};
    RationalFunction(const UniPoly &num, const UniPoly &den, nocheck) : num_(num), den_(den) {}

    void reduce() {
        if (num_.is_zero()) {
            den_ = UniPoly(1);
            return;
        }
        UniPoly g = UniPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = UniPoly::exact_div(num_, g);
            den_ = UniPoly::exact_div(den_, g);
        }
        Rational lc = den_.leading();
        if (lc != Rational(1)) {
            Rational inv = Rational(1) / lc;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    UniPoly num_, den_;
};

} // namespace cstar
