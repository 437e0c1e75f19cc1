#include "qbps/laurent.hpp"

#include <cmath>
#include <algorithm>
#include <cctype>
#include <cstdint>
#include <vector>

namespace qbps {

namespace {

// ---------------------------------------------------------------------------
// Integer-polynomial helpers backing the gcd.  Dense representation indexed by
// degree; the Laurent layer strips v^min before calling in.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Integer>;  // ZPoly[i] = coefficient of v^i

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long deg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

Integer content(const ZPoly& p) {
    Integer c = 0;
    for (const Integer& a : p) {
        if (a != 0) c = gcd(c, a);
        if (c == 1) break;
    }
    return c;
}

// Divides by the content and makes the leading coefficient positive.
void make_primitive(ZPoly& p) {
    if (p.empty()) return;
    Integer c = content(p);
    if (sgn(p.back()) < 0) c = -c;
    if (c != 1) {
        for (Integer& a : p) a /= c;
    }
}

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b):
// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const long db = deg(b);
    const Integer& lb = b.back();
    while (deg(a) >= db) {
        const long shift = deg(a) - db;
        const Integer la = a.back();
        for (long i = 0; i < static_cast<long>(a.size()); ++i) a[i] *= lb;
        for (long i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// ---------------------------------------------------------------------------
// Coprimality fast path: the gcd degree over Z is bounded by the gcd degree
// modulo any prime not dividing both leading coefficients, so a single cheap
// word-sized Euclid detects the (very common) coprime case.
// ---------------------------------------------------------------------------

constexpr std::uint64_t kProbePrime = 1000000007ULL;

std::uint64_t mod_p(const Integer& x) {
    std::uint64_t r = mpz_fdiv_ui(x.get_mpz_t(), kProbePrime);
    return r;
}

std::uint64_t inv_mod_p(std::uint64_t a) {
    // Fermat inverse.
    std::uint64_t result = 1, base = a % kProbePrime, e = kProbePrime - 2;
    while (e) {
        if (e & 1) result = result * base % kProbePrime;
        base = base * base % kProbePrime;
        e >>= 1;
    }
    return result;
}

// Returns the gcd degree modulo the probe prime, or -1 when the probe is
// unusable (a leading coefficient vanishes mod p).
long gcd_degree_mod_p(const ZPoly& a, const ZPoly& b) {
    if (mod_p(a.back()) == 0 || mod_p(b.back()) == 0) return -1;
    std::vector<std::uint64_t> f(a.size()), g(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) f[i] = mod_p(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) g[i] = mod_p(b[i]);
    auto trim_p = [](std::vector<std::uint64_t>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim_p(f);
    trim_p(g);
    while (!g.empty()) {
        // f mod g
        const std::uint64_t linv = inv_mod_p(g.back());
        while (f.size() >= g.size()) {
            std::uint64_t factor = f.back() * linv % kProbePrime;
            std::size_t shift = f.size() - g.size();
            for (std::size_t i = 0; i < g.size(); ++i) {
                std::uint64_t sub = factor * g[i] % kProbePrime;
                f[i + shift] = (f[i + shift] + kProbePrime - sub) % kProbePrime;
            }
            trim_p(f);
            if (f.empty()) break;
        }
        std::swap(f, g);
    }
    return static_cast<long>(f.size()) - 1;
}

// Primitive-remainder-sequence gcd over Z; both inputs nonzero.
ZPoly gcd_z(ZPoly a, ZPoly b) {
    make_primitive(a);
    make_primitive(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    long probe = gcd_degree_mod_p(a, b);
    if (probe == 0) return {Integer(1)};
    while (!b.empty()) {
        if (deg(b) == 0) return {Integer(1)};
        ZPoly r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, long exponent) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exponent] = coeff;
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw math_error("min_exp of the zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw math_error("max_exp of the zero polynomial");
    return coeffs_.rbegin()->first;
}

Rational LaurentPoly::coeff(long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coeff() const { return coeffs_.rbegin()->second; }

Rational LaurentPoly::trailing_coeff() const { return coeffs_.begin()->second; }

void LaurentPoly::set_coeff(long exponent, const Rational& value) {
    if (value == 0) {
        coeffs_.erase(exponent);
    } else {
        coeffs_[exponent] = value;
    }
}

void LaurentPoly::add_term(long exponent, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = coeffs_.emplace(exponent, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, a] : p.coeffs_) r.coeffs_[e] = c * a;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
    LaurentPoly result(Rational(1));
    LaurentPoly base = *this;
    while (n) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::substituted(long k) const {
    if (k == 0) throw math_error("substitution v -> v^0 is not invertible");
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e * k] = c;
    return r;
}

bool LaurentPoly::is_palindromic() const {
    for (const auto& [e, c] : coeffs_) {
        if (coeff(-e) != c) return false;
    }
    return true;
}

bool LaurentPoly::exponents_divisible_by(long k) const {
    for (const auto& [e, c] : coeffs_) {
        (void)c;
        if (e % k != 0) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::exponents_divided_by(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) {
        if (e % k != 0) throw math_error("exponent not divisible in exponents_divided_by");
        r.coeffs_[e / k] = c;
    }
    return r;
}

Rational LaurentPoly::eval(const Rational& point) const {
    Rational acc(0);
    for (const auto& [e, c] : coeffs_) acc += c * pow_rational(point, e);
    return acc;
}

double LaurentPoly::eval_double(double point) const {
    double acc = 0;
    for (const auto& [e, c] : coeffs_) acc += c.get_d() * std::pow(point, static_cast<double>(e));
    return acc;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    auto a = coeffs_.begin(), b = o.coeffs_.begin();
    for (; a != coeffs_.end() && b != o.coeffs_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    return coeffs_.size() < o.coeffs_.size();
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        const bool negative = c < 0;
        Rational mag = abs(c);
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (e == 0) {
            out += qbps::to_string(mag);
        } else {
            if (mag != 1) out += qbps::to_string(mag) + "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

struct TermPiece {
    bool negative = false;
    std::string body;
};

std::vector<TermPiece> split_terms(const std::string& text) {
    std::vector<TermPiece> pieces;
    TermPiece current;
    bool expect_term_start = true;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if ((ch == '+' || ch == '-') && !expect_term_start && !current.body.empty() &&
            current.body.back() != '^' && current.body.back() != '*' && current.body.back() != '/') {
            pieces.push_back(current);
            current = TermPiece{};
            current.negative = (ch == '-');
            expect_term_start = false;
            continue;
        }
        if (expect_term_start && (ch == '+' || ch == '-')) {
            if (ch == '-') current.negative = !current.negative;
            continue;
        }
        current.body += ch;
        expect_term_start = false;
    }
    if (!current.body.empty()) pieces.push_back(current);
    return pieces;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, const std::string& var) {
    LaurentPoly result;
    auto pieces = split_terms(text);
    if (pieces.empty()) {
        bool only_space = std::all_of(text.begin(), text.end(), [](unsigned char c) {
            return std::isspace(c);
        });
        if (!only_space) throw input_error("cannot parse polynomial: '" + text + "'");
        throw input_error("empty polynomial string");
    }
    for (const auto& piece : pieces) {
        const std::string& body = piece.body;
        std::size_t var_pos = body.find(var);
        // Guard against the variable name occurring inside a longer token.
        while (var_pos != std::string::npos && var_pos > 0 &&
               std::isdigit(static_cast<unsigned char>(body[var_pos - 1])) == 0 &&
               body[var_pos - 1] != '*') {
            var_pos = body.find(var, var_pos + 1);
        }
        Rational coeff(1);
        long exponent = 0;
        if (var_pos == std::string::npos) {
            coeff = parse_rational(body);
        } else {
            std::string coeff_part = body.substr(0, var_pos);
            if (!coeff_part.empty() && coeff_part.back() == '*') coeff_part.pop_back();
            if (!coeff_part.empty()) coeff = parse_rational(coeff_part);
            std::string rest = body.substr(var_pos + var.size());
            exponent = 1;
            if (!rest.empty()) {
                if (rest[0] != '^') {
                    throw input_error("cannot parse polynomial term: '" + body + "'");
                }
                try {
                    exponent = std::stol(rest.substr(1));
                } catch (const std::exception&) {
                    throw input_error("bad exponent in term: '" + body + "'");
                }
            }
        }
        if (piece.negative) coeff = -coeff;
        result.add_term(exponent, coeff);
    }
    return result;
}

// ---------------------------------------------------------------------------
// gcd / exact division
// ---------------------------------------------------------------------------

namespace {

// Writes p (with min_exp stripped) as an integer polynomial; the rational
// scale factor is discarded since gcds are only defined up to units.
ZPoly to_primitive_int(const LaurentPoly& p) {
    const long base = p.min_exp();
    Integer den_lcm(1);
    for (const auto& [e, c] : p.terms()) {
        (void)e;
        den_lcm = lcm(den_lcm, Integer(c.get_den()));
    }
    ZPoly out(static_cast<std::size_t>(p.max_exp() - base + 1), Integer(0));
    for (const auto& [e, c] : p.terms()) {
        out[static_cast<std::size_t>(e - base)] = Integer(c.get_num()) * (den_lcm / c.get_den());
    }
    make_primitive(out);
    return out;
}

LaurentPoly from_int(const ZPoly& p) {
    LaurentPoly out;
    for (long i = 0; i < static_cast<long>(p.size()); ++i) {
        if (p[static_cast<std::size_t>(i)] != 0) {
            out.set_coeff(i, Rational(p[static_cast<std::size_t>(i)]));
        }
    }
    return out;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw math_error("gcd of two zero polynomials");
    auto normalize = [](const LaurentPoly& p) {
        LaurentPoly q = p.shifted(-p.min_exp());
        return (Rational(1) / q.trailing_coeff()) * q;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    if (a.is_monomial() || b.is_monomial()) return LaurentPoly(1);
    ZPoly g = gcd_z(to_primitive_int(a), to_primitive_int(b));
    LaurentPoly result = from_int(g);
    return normalize(result);
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw math_error("division by the zero polynomial");
    if (num.is_zero()) return LaurentPoly();
    // Strip v^min from both; long division on ordinary polynomials.
    const long shift = num.min_exp() - den.min_exp();
    LaurentPoly n = num.shifted(-num.min_exp());
    LaurentPoly d = den.shifted(-den.min_exp());
    LaurentPoly quotient;
    while (!n.is_zero() && n.max_exp() >= d.max_exp()) {
        const long e = n.max_exp() - d.max_exp();
        const Rational c = n.leading_coeff() / d.leading_coeff();
        quotient.add_term(e, c);
        n -= LaurentPoly::monomial(c, e) * d;
    }
    if (!n.is_zero()) throw math_error("polynomial division is not exact");
    return quotient.shifted(shift);
}

}  // namespace qbps
