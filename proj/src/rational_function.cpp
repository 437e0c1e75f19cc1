#include "qbps/rational_function.hpp"

namespace qbps {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw math_error("rational function with zero denominator");
    reduce_();
}

void RationalFunction::reduce_() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1));
        return;
    }
    // Move the monomial unit v^k entirely into the numerator.
    long den_shift = den_.min_exp();
    if (den_shift != 0) {
        den_ = den_.shifted(-den_shift);
        num_ = num_.shifted(-den_shift);
    }
    if (!den_.is_constant()) {
        LaurentPoly g = laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    const Rational lead = den_.trailing_coeff();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

LaurentPoly RationalFunction::as_laurent() const {
    if (!is_laurent()) {
        throw convention_violation("value is not a Laurent polynomial: " + to_string());
    }
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Reduce by the common denominator factor first; keeps the closing gcd
    // small.  With g = gcd(d1, d2) and di = g*di', the sum is
    // (n1*d2' + n2*d1') / (g*d1'*d2') and only a factor of g can cancel.
    LaurentPoly g = laurent_gcd(a.den_, b.den_);
    LaurentPoly d1 = divide_exact(a.den_, g);
    LaurentPoly d2 = divide_exact(b.den_, g);
    LaurentPoly num = a.num_ * d2 + b.num_ * d1;
    RationalFunction r;
    if (num.is_zero()) return r;
    LaurentPoly h = laurent_gcd(num, g);
    if (!h.is_one()) {
        num = divide_exact(num, h);
        g = divide_exact(g, h);
    }
    r.num_ = std::move(num);
    r.den_ = g * d1 * d2;
    // Only unit normalization left.
    long shift = r.den_.min_exp();
    if (shift != 0) {
        r.den_ = r.den_.shifted(-shift);
        r.num_ = r.num_.shifted(-shift);
    }
    const Rational lead = r.den_.trailing_coeff();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        r.num_ = inv * r.num_;
        r.den_ = inv * r.den_;
    }
    return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    // Cross-cancel before multiplying: gcd(n1,d2) and gcd(n2,d1) are the only
    // possible common factors of the product.
    LaurentPoly n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
    LaurentPoly g1 = laurent_gcd(n1, d2);
    if (!g1.is_one()) {
        n1 = divide_exact(n1, g1);
        d2 = divide_exact(d2, g1);
    }
    LaurentPoly g2 = laurent_gcd(n2, d1);
    if (!g2.is_one()) {
        n2 = divide_exact(n2, g2);
        d1 = divide_exact(d1, g2);
    }
    RationalFunction r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    long shift = r.den_.min_exp();
    if (shift != 0) {
        r.den_ = r.den_.shifted(-shift);
        r.num_ = r.num_.shifted(-shift);
    }
    const Rational lead = r.den_.trailing_coeff();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        r.num_ = inv * r.num_;
        r.den_ = inv * r.den_;
    }
    return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.reciprocal();
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw math_error("division by zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long n) const {
    if (n < 0) return reciprocal().pow(-n);
    RationalFunction result(Rational(1));
    RationalFunction base = *this;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

RationalFunction RationalFunction::substituted(long k) const {
    return RationalFunction(num_.substituted(k), den_.substituted(k));
}

Rational RationalFunction::eval(const Rational& point) const {
    Rational d = den_.eval(point);
    if (d == 0) throw math_error("evaluation at a pole");
    return num_.eval(point) / d;
}

bool RationalFunction::is_even() const {
    return (num_.is_zero() || num_.exponents_divisible_by(2)) && den_.exponents_divisible_by(2);
}

RationalFunction RationalFunction::half_exponents() const {
    RationalFunction r;
    r.num_ = num_.exponents_divided_by(2);
    r.den_ = den_.exponents_divided_by(2);
    return r;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (is_laurent()) return num_.to_string(var);
    // Stored form keeps the denominator's trailing coefficient at 1; for
    // display flip the sign pair when the leading coefficient is negative, so
    // q/(q-1) shows as q/(-1 + q) rather than -q/(1 - q).
    LaurentPoly n = num_;
    LaurentPoly d = den_;
    if (d.leading_coeff() < 0) {
        n = -n;
        d = -d;
    }
    std::string ns = n.to_string(var);
    if (n.term_count() > 1) ns = "(" + ns + ")";
    return ns + "/(" + d.to_string(var) + ")";
}

std::string RationalFunction::to_q_string() const {
    if (!is_even()) {
        throw convention_violation("value has odd half-weight part: " + to_string());
    }
    return half_exponents().to_string("q");
}

}  // namespace qbps
