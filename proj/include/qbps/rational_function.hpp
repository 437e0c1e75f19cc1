#pragma once

#include <string>

#include "qbps/laurent.hpp"

namespace qbps {

// Quotient of Laurent polynomials in canonical form:
//   * numerator and denominator share no polynomial factor,
//   * the denominator has minimal exponent 0 and trailing coefficient 1.
// With that normalization equality is structural.  The numerator may carry
// negative exponents (the v^k unit lives there).
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {}
    RationalFunction(const LaurentPoly& p) : num_(p), den_(Rational(1)) {}
    RationalFunction(LaurentPoly num, LaurentPoly den);

    static RationalFunction var(long e = 1) { return RationalFunction(LaurentPoly::var(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // True when the value is a Laurent polynomial (denominator 1).
    bool is_laurent() const { return den_.is_one(); }
    LaurentPoly as_laurent() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction reciprocal() const;
    RationalFunction pow(long n) const;

    // Substitution v -> v^k, k nonzero (k = -1 gives v -> 1/v).
    RationalFunction substituted(long k) const;

    // Exact evaluation; throws math_error on a denominator zero.
    Rational eval(const Rational& point) const;

    // All exponents even, i.e. the value lies in the subfield of functions of
    // q = v^2.
    bool is_even() const;
    // Rewrites a function of v^2 as a function of a variable of half weight;
    // requires is_even().
    RationalFunction half_exponents() const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // "num/(den)" with the denominator omitted when it is 1 and the
    // numerator parenthesized when it has several terms.
    std::string to_string(const std::string& var = "v") const;
    // Rendering in q = v^2; requires is_even().
    std::string to_q_string() const;

  private:
    void reduce_();

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace qbps
