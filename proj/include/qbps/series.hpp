#pragma once

#include <map>

#include "qbps/dim_vector.hpp"
#include "qbps/rational_function.hpp"

namespace qbps {

// Power series in commuting variables x_1..x_r graded by dimension vectors,
// truncated at total degree N, with rational-function coefficients.  The
// carrier of the plethystic Exp/Log identities.
class TruncatedSeries {
  public:
    TruncatedSeries(int rank, int bound);

    int rank() const { return rank_; }
    int bound() const { return bound_; }

    const std::map<DimVector, RationalFunction>& terms() const { return terms_; }
    RationalFunction coefficient(const DimVector& m) const;
    RationalFunction constant_term() const { return coefficient(DimVector(rank_)); }
    void set_coefficient(const DimVector& m, const RationalFunction& value);
    void add_coefficient(const DimVector& m, const RationalFunction& value);

    bool is_zero() const { return terms_.empty(); }

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
    friend TruncatedSeries operator*(const RationalFunction& c, const TruncatedSeries& s);

    bool operator==(const TruncatedSeries& o) const;

    std::string to_string(const std::string& var = "v") const;

  private:
    int rank_;
    int bound_;
    std::map<DimVector, RationalFunction> terms_;
};

// Adams operation psi_k: v -> v^k in every coefficient and m -> k*m on the
// grading; keys pushed past the truncation bound are dropped.  k >= 1.
TruncatedSeries adams(const TruncatedSeries& f, int k);

// Plethystic exponential Exp(f) = exp(sum_{k>=1} psi_k(f)/k).  Requires a
// vanishing constant term; satisfies Exp(f+g) = Exp(f)*Exp(g) and has
// constant term 1.
TruncatedSeries plethystic_exp(const TruncatedSeries& f);

// Inverse of plethystic_exp: requires constant term exactly 1.
TruncatedSeries plethystic_log(const TruncatedSeries& f);

}  // namespace qbps
