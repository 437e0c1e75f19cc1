#include "qbps/rational.hpp"

namespace qbps {

Rational parse_rational(const std::string& text) {
    mpq_class value;
    if (text.empty() || value.set_str(text, 10) != 0) {
        throw input_error("cannot parse rational number: '" + text + "'");
    }
    if (value.get_den() == 0) {
        throw input_error("zero denominator in rational: '" + text + "'");
    }
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const Integer& x) { return x.get_str(); }

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw math_error("zero raised to a negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(base.get_den(), base.get_num()) : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(result.get_den_mpz_t(), b.get_den_mpz_t(), n);
    result.canonicalize();
    return result;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0 && b == 0) throw math_error("rational_gcd(0, 0) is undefined");
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    // a = p/q, b = r/s in lowest terms; the subgroup they generate is
    // gcd(p*s, r*q)/(q*s) * Z.
    Integer num = gcd(Integer(a.get_num() * b.get_den()), Integer(b.get_num() * a.get_den()));
    Rational g(num, a.get_den() * b.get_den());
    g.canonicalize();
    return abs(g);
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const ExactComplex& z) {
    std::string s = to_string(z.re);
    if (z.im >= 0) {
        s += "+" + to_string(z.im) + "i";
    } else {
        s += to_string(z.im) + "i";
    }
    return s;
}

}  // namespace qbps
