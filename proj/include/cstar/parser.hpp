#pragma once

#include <cstar/dpd.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cstar {

/*
 * Surface syntax, whitespace between tokens ignored:
 *
 *   pair     :=  '(' divisor ';' divisor ')'
 *   divisor  :=  '0'  |  ['-'] term (('+' | '-') term)*
 *   term     :=  [rational '*'] atom
 *   atom     :=  '[' rational ']'  |  'div' '(' poly ')'
 *   poly     :=  ['-'] pterm (('+' | '-') pterm)*
 *   pterm    :=  pfactor ('*' pfactor)*
 *   pfactor  :=  pbase ['^' natural]
 *   pbase    :=  rational  |  't'  |  '(' poly ')'
 *   rational :=  ['-'] natural ['/' natural]
 *
 * '[p]' is shorthand for div(t - p).  Arguments of div are decomposed, so
 * repeated factors turn into integer multiplicities.
 */

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos + 1)),
          pos_(pos) {}
    size_t position() const { return pos_; }

  private:
    size_t pos_;
};

namespace detail {

struct Cursor {
    std::string_view s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool take(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char *what) {
        if (!take(c))
            throw ParseError(std::string("expected ") + what, i);
    }

    BigInt natural() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == start)
            throw ParseError("expected a number", start);
        return BigInt(std::string(s.substr(start, i - start)), 10);
    }

    Rational rational() {
        bool neg = take('-');
        BigInt num = natural();
        BigInt den(1);
        if (i < s.size() && s[i] == '/') { // no space inside a fraction
            ++i;
            size_t dpos = i;
            den = natural();
            if (den == 0)
                throw ParseError("zero denominator", dpos);
        }
        if (neg)
            num = -num;
        return Rational(num, den);
    }

    // true when the upcoming token opens an atom rather than a coefficient
    bool at_atom() {
        char c = peek();
        return c == '[' || c == 'd';
    }

    UniPoly pbase() {
        char c = peek();
        if (c == 't') {
            ++i;
            return UniPoly::variable();
        }
        if (c == '(') {
            ++i;
            UniPoly p = poly();
            expect(')', "')'");
            return p;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return UniPoly(rational());
        throw ParseError("expected 't', a number or '('", i);
    }

    UniPoly pfactor() {
        UniPoly b = pbase();
        if (take('^')) {
            size_t epos = i;
            BigInt n = natural();
            if (n > 4096)
                throw ParseError("exponent out of range", epos);
            return b.pow(to_long(n));
        }
        return b;
    }

    UniPoly pterm() {
        UniPoly p = pfactor();
        while (take('*'))
            p = p * pfactor();
        return p;
    }

    UniPoly poly() {
        bool neg = take('-');
        UniPoly p = pterm();
        if (neg)
            p = -p;
        for (;;) {
            if (take('+'))
                p = p + pterm();
            else if (take('-'))
                p = p - pterm();
            else
                return p;
        }
    }

    QDivisor atom() {
        if (take('[')) {
            Rational p = rational();
            expect(']', "']'");
            return QDivisor::point(p, Rational(1));
        }
        skip();
        if (s.substr(i, 3) == "div") {
            i += 3;
            expect('(', "'(' after div");
            size_t ppos = i;
            UniPoly p = poly();
            expect(')', "')'");
            if (p.is_zero())
                throw ParseError("div of the zero polynomial", ppos);
            return QDivisor::div_of(RationalFunction(p));
        }
        throw ParseError("expected '[' or 'div'", i);
    }

    QDivisor term() {
        if (at_atom())
            return atom();
        Rational c = rational();
        expect('*', "'*' between coefficient and atom");
        return c * atom();
    }

    QDivisor divisor() {
        skip();
        if (i < s.size() && s[i] == '0') {
            size_t save = i;
            ++i;
            char c = peek();
            if (c == '\0' || c == ';' || c == ')')
                return QDivisor();
            i = save;
        }
        bool neg = take('-');
        QDivisor d = term();
        if (neg)
            d = Rational(-1) * d;
        for (;;) {
            if (take('+'))
                d = d + term();
            else if (take('-'))
                d = d + Rational(-1) * term();
            else
                return d;
        }
    }

    DPDPair pair() {
        expect('(', "'('");
        DPDPair p;
        p.plus = divisor();
        expect(';', "';' between the two divisors");
        p.minus = divisor();
        expect(')', "')'");
        return p;
    }

    void done() {
        if (!eof())
            throw ParseError("unexpected trailing input", i);
    }
};

} // namespace detail

inline Rational parse_rational(std::string_view text) {
    detail::Cursor c{text};
    Rational r = c.rational();
    c.done();
    return r;
}

inline UniPoly parse_poly(std::string_view text) {
    detail::Cursor c{text};
    UniPoly p = c.poly();
    c.done();
    return p;
}

inline QDivisor parse_divisor(std::string_view text) {
    detail::Cursor c{text};
    QDivisor d = c.divisor();
    c.done();
    return d;
}

inline DPDPair parse_pair(std::string_view text) {
    detail::Cursor c{text};
    DPDPair p = c.pair();
    c.done();
    return p;
}

} // namespace cstar
