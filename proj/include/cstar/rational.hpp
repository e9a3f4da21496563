#pragma once

#include <gmpxx.h>

#include <iostream>
#include <stdexcept>
#include <string>

namespace cstar {

using BigInt = mpz_class;

inline BigInt big_gcd(const BigInt &a, const BigInt &b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt big_lcm(const BigInt &a, const BigInt &b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/** Extended gcd over the machine range: returns g = gcd(a, b) and x, y with a*x + b*y = g. */
inline long ext_gcd(long a, long b, long &x, long &y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return (a < 0) ? -a : a;
    }
    long x1, y1;
    long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline long to_long(const BigInt &z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("to_long: value exceeds the 64-bit range");
    return z.get_si();
}

inline long mod_inverse(long a, long m) {
    long x, y;
    long r = ((a % m) + m) % m;
    if (ext_gcd(r, m, x, y) != 1)
        throw std::domain_error("mod_inverse: not invertible");
    return ((x % m) + m) % m;
}

/**
 * Arbitrary-precision rational number, kept in lowest terms with a positive
 * denominator; zero is stored as 0/1.  All arithmetic is exact.
 */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt &n) : v_(n) {}
    Rational(const BigInt &num, const BigInt &den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /** Largest integer <= this (true floor, also for negatives). */
    BigInt floor() const {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }
    BigInt ceil() const {
        BigInt q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }
    /** Fractional part this - floor(this), always in [0, 1). */
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational &a, const Rational &b) { return a.v_ >= b.v_; }

    /** Prints "p/q", or just "p" when the denominator is 1. */
    std::string str() const { return v_.get_str(); }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
        return os << r.v_;
    }

  private:
    mpq_class v_;
};

inline Rational rational_pow(const Rational &base, long n) {
    if (n == 0)
        return Rational(1);
    if (n < 0) {
        if (base.is_zero())
            throw std::domain_error("rational_pow: zero base with negative exponent");
        return Rational(1) / rational_pow(base, -n);
    }
    Rational acc(1), b = base;
    long e = n;
    while (e > 0) {
        if (e & 1)
            acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace cstar
