#include "qbps/series.hpp"

namespace qbps {

TruncatedSeries::TruncatedSeries(int rank, int bound) : rank_(rank), bound_(bound) {
    if (rank < 1) throw input_error("series rank must be positive");
    if (bound < 0) throw input_error("series truncation bound must be nonnegative");
}

RationalFunction TruncatedSeries::coefficient(const DimVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void TruncatedSeries::set_coefficient(const DimVector& m, const RationalFunction& value) {
    if (static_cast<int>(m.rank()) != rank_) throw input_error("series grading rank mismatch");
    if (m.total() > bound_) return;
    if (value.is_zero()) {
        terms_.erase(m);
    } else {
        terms_[m] = value;
    }
}

void TruncatedSeries::add_coefficient(const DimVector& m, const RationalFunction& value) {
    if (static_cast<int>(m.rank()) != rank_) throw input_error("series grading rank mismatch");
    if (m.total() > bound_ || value.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(rank_, bound_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (rank_ != o.rank_) throw input_error("series rank mismatch");
    for (const auto& [m, c] : o.terms_) add_coefficient(m, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (rank_ != o.rank_) throw input_error("series rank mismatch");
    for (const auto& [m, c] : o.terms_) add_coefficient(m, -c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.rank_ != b.rank_) throw input_error("series rank mismatch");
    TruncatedSeries r(a.rank_, std::min(a.bound_, b.bound_));
    for (const auto& [ma, ca] : a.terms_) {
        const long da = ma.total();
        for (const auto& [mb, cb] : b.terms_) {
            if (da + mb.total() > r.bound_) continue;
            r.add_coefficient(ma + mb, ca * cb);
        }
    }
    return r;
}

TruncatedSeries operator*(const RationalFunction& c, const TruncatedSeries& s) {
    TruncatedSeries r(s.rank_, s.bound_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : s.terms_) r.terms_[m] = c * a;
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return rank_ == o.rank_ && bound_ == o.bound_ && terms_ == o.terms_;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "[" + c.to_string(var) + "]*x^" + m.to_string();
    }
    return out;
}

TruncatedSeries adams(const TruncatedSeries& f, int k) {
    if (k < 1) throw input_error("Adams operations need k >= 1");
    if (k == 1) return f;
    TruncatedSeries r(f.rank(), f.bound());
    for (const auto& [m, c] : f.terms()) {
        DimVector scaled = m.scaled(k);
        if (scaled.total() > f.bound()) continue;
        r.set_coefficient(scaled, c.substituted(k));
    }
    return r;
}

namespace {

// Ordinary exponential of a series with zero constant term: sum g^n/n!.
TruncatedSeries series_exp(const TruncatedSeries& g) {
    TruncatedSeries result(g.rank(), g.bound());
    result.set_coefficient(DimVector(static_cast<std::size_t>(g.rank())), RationalFunction(Rational(1)));
    TruncatedSeries term = result;
    for (int n = 1; n <= g.bound(); ++n) {
        term = RationalFunction(Rational(1, n)) * (term * g);
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

// Ordinary logarithm of 1 + h: sum (-1)^{n+1} h^n / n.
TruncatedSeries series_log(const TruncatedSeries& h) {
    TruncatedSeries result(h.rank(), h.bound());
    TruncatedSeries power = h;
    for (int n = 1; n <= h.bound(); ++n) {
        if (power.is_zero()) break;
        Rational c(1, n);
        if (n % 2 == 0) c = -c;
        result += RationalFunction(c) * power;
        power *= h;
    }
    return result;
}

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace

TruncatedSeries plethystic_exp(const TruncatedSeries& f) {
    if (!f.constant_term().is_zero()) {
        throw input_error("plethystic Exp needs a vanishing constant term");
    }
    // Exp(f) = exp(sum_k psi_k(f)/k); psi_k pushes everything past the bound
    // once k exceeds it.
    TruncatedSeries accum(f.rank(), f.bound());
    for (int k = 1; k <= f.bound(); ++k) {
        TruncatedSeries layer = adams(f, k);
        if (layer.is_zero()) continue;
        accum += RationalFunction(Rational(1, k)) * layer;
    }
    return series_exp(accum);
}

TruncatedSeries plethystic_log(const TruncatedSeries& f) {
    DimVector origin(static_cast<std::size_t>(f.rank()));
    if (!f.coefficient(origin).is_one()) {
        throw input_error("plethystic Log needs constant term exactly 1");
    }
    TruncatedSeries h = f;
    h.set_coefficient(origin, RationalFunction());
    TruncatedSeries l = series_log(h);
    // Moebius inversion of F = sum_k psi_k(g)/k.
    TruncatedSeries result(f.rank(), f.bound());
    for (int k = 1; k <= f.bound(); ++k) {
        int mu = moebius(k);
        if (mu == 0) continue;
        TruncatedSeries layer = adams(l, k);
        if (layer.is_zero()) continue;
        result += RationalFunction(Rational(mu, k)) * layer;
    }
    return result;
}

}  // namespace qbps
