#pragma once

#include <map>
#include <string>

#include "qbps/rational.hpp"

namespace qbps {

// Sparse Laurent polynomial in a single variable with exact rational
// coefficients.  The variable is anonymous; a name ("v", "y", "q") is chosen
// only when rendering or parsing text.  Zero coefficients are never stored,
// so structural equality is semantic equality.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& constant);
    explicit LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

    static LaurentPoly monomial(const Rational& coeff, long exponent);
    // The variable itself, v^e.
    static LaurentPoly var(long exponent = 1) { return monomial(Rational(1), exponent); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // Single term c*v^e.
    bool is_monomial() const { return coeffs_.size() == 1; }
    bool is_constant() const;

    // min_exp/max_exp require a nonzero polynomial.
    long min_exp() const;
    long max_exp() const;
    Rational coeff(long exponent) const;
    Rational leading_coeff() const;   // coefficient at max_exp
    Rational trailing_coeff() const;  // coefficient at min_exp
    std::size_t term_count() const { return coeffs_.size(); }

    const std::map<long, Rational>& terms() const { return coeffs_; }

    void set_coeff(long exponent, const Rational& value);
    void add_term(long exponent, const Rational& value);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p);

    LaurentPoly pow(unsigned long n) const;

    // Multiplication by v^k.
    LaurentPoly shifted(long k) const;

    // Substitution v -> v^k.  k may be negative (v -> v^{-1} mirrors the
    // exponents); k must be nonzero.
    LaurentPoly substituted(long k) const;

    // coeff(e) == coeff(-e) for all e, i.e. invariance under v -> 1/v.
    bool is_palindromic() const;

    // All exponents divisible by k.
    bool exponents_divisible_by(long k) const;
    // Divides every exponent by k; requires exponents_divisible_by(k).
    LaurentPoly exponents_divided_by(long k) const;

    // Exact evaluation; point must be nonzero if negative exponents occur.
    Rational eval(const Rational& point) const;
    double eval_double(double point) const;

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    // Arbitrary total order so polynomials can key containers.
    bool operator<(const LaurentPoly& o) const;

    // Canonical rendering: terms by increasing exponent, "c*v^e" pieces
    // joined by " + " / " - ", unit coefficients and zero exponents elided,
    // e.g. "-v^-1 + 2 + v^3".
    std::string to_string(const std::string& var = "v") const;
    static LaurentPoly parse(const std::string& text, const std::string& var = "v");

  private:
    std::map<long, Rational> coeffs_;
};

// Gcd of two Laurent polynomials, not both zero: v^min is factored out of
// each argument, the ordinary-polynomial gcd is computed over the integers,
// and the result is normalized so its trailing coefficient is 1 and its
// minimal exponent is 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact division; throws math_error when the division is not exact.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace qbps
