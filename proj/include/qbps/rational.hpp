#pragma once

#include <gmpxx.h>

#include <string>

#include "qbps/errors.hpp"

namespace qbps {

// Exact arbitrary-precision scalars.  mpq_class keeps values reduced with a
// positive denominator, which is exactly the canonical form we need.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a" or "a/b" in base 10.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// base^e for integer e (negative e inverts; base must be nonzero then).
Rational pow_rational(const Rational& base, long e);

// Positive generator g of the subgroup a*Z + b*Z of the rationals, i.e. the
// least positive value of m*a + n*b.  For a/b and c/d in lowest terms this is
// gcd(a*d, c*b)/(b*d).  Errors when both arguments are zero.
Rational rational_gcd(const Rational& a, const Rational& b);

// True when x is an integer (denominator 1).
bool is_integer(const Rational& x);

// Exact complex number with rational real and imaginary parts.  Used for
// central charges; only additive structure and scaling are ever needed.
struct ExactComplex {
    Rational re;
    Rational im;

    ExactComplex() : re(0), im(0) {}
    ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    ExactComplex& operator+=(const ExactComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator*(const Rational& c, const ExactComplex& z) {
        return {c * z.re, c * z.im};
    }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

std::string to_string(const ExactComplex& z);

}  // namespace qbps
