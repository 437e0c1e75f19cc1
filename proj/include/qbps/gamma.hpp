#pragma once

#include <optional>
#include <vector>

#include "qbps/eigen_rational.hpp"
#include "qbps/laurent.hpp"

namespace qbps {

// Class (beta, m) in the rank-rho curve lattice extended by the integers.
struct GammaClass {
    Eigen::VectorXi beta;
    long m = 0;

    std::size_t rank() const { return static_cast<std::size_t>(beta.size()); }
    bool operator==(const GammaClass& o) const { return m == o.m && beta == o.beta; }
    std::string to_string() const;  // "(b1,b2;m)"
};

// Complexified Kahler parameter (B, omega); the pairing with curve classes is
// the dot product in the chosen basis.
struct KahlerParam {
    VectorQ B;
    VectorQ omega;

    std::size_t rank() const { return static_cast<std::size_t>(B.size()); }
};

Rational dot(const VectorQ& a, const Eigen::VectorXi& b);

// Effectivity data: nonnegative integer combinations of the generators.
struct EffectiveCone {
    std::vector<Eigen::VectorXi> generators;
};

// Validates omega . g > 0 for every generator; a Kahler form must pair
// positively with every effective class.
void validate_kahler(const KahlerParam& k, const EffectiveCone& cone);

// Z(beta, m) = -m + B.beta + i (omega.beta).
ExactComplex central_charge(const KahlerParam& k, const GammaClass& v);

// (m - B.beta)/(omega.beta); nullopt encodes +infinity (omega.beta = 0).
std::optional<Rational> twisted_slope(const KahlerParam& k, const GammaClass& v);

// Writes of beta as an ordered sum of two effective classes, enumerated by
// generator expansion.  Each entry is (beta1, beta2) with beta1 <= beta2 in
// the lexicographic order on coefficient vectors.
std::vector<std::pair<Eigen::VectorXi, Eigen::VectorXi>> effective_decompositions(
    const Eigen::VectorXi& beta, const EffectiveCone& cone);

struct WallDecomposition {
    GammaClass v1;
    GammaClass v2;
};

// Destabilizing decompositions v = v1 + v2 at (B, omega): both beta_i
// effective (or zero with m_i > 0), |m_i| <= m_bound, equal twisted slopes,
// and (beta1, m1), (beta2, m2) not proportional.  Empty result means the
// parameter is not on a wall for v within the bound.
std::vector<WallDecomposition> wall_membership(const KahlerParam& k, const GammaClass& v,
                                               const EffectiveCone& cone, long m_bound);

// Wall-free radius of Lemma-style genericity: for every non-proportional
// effective decomposition beta = beta1 + beta2 the twisted slopes stay
// distinct for all integer (m1, m2) and all 0 < |delta| < delta0, where the
// perturbation direction is the divisor class H.  nullopt encodes +infinity
// (no non-proportional decomposition).  Throws math_error when (H, omega)
// fails the genericity condition alpha != 0.
std::optional<Rational> generic_delta(const Eigen::VectorXi& beta, const VectorQ& H,
                                      const VectorQ& omega, const EffectiveCone& cone);

// (beta, m) -> (M beta, m).  When the divisor transform P is supplied, the
// adjoint relation M^T = P is checked so that the pairing identity
// (M beta).D = beta.(P D) holds on the nose.
GammaClass flop_transform(const Eigen::MatrixXi& M, const GammaClass& v,
                          const std::optional<Eigen::MatrixXi>& divisor_transform = std::nullopt);

// Weighted one-cycle: components with multiplicities.
struct CycleComponent {
    long mult = 0;
    Eigen::VectorXi cls;
};
using CycleData = std::vector<CycleComponent>;

// Pushes every component class through P (full column rank), multiplicities
// unchanged.
CycleData blowup_pullback(const Eigen::MatrixXi& P, const CycleData& gamma);

// gcd of the multiplicities equals one; gamma must be nonempty.
bool is_primitive(const CycleData& gamma);

// Genus decomposition: the unique coefficients with
//   Phi = sum_g n_g * (y^{1/2} + y^{-1/2})^{2g},
// solved top-down from the leading exponent.  Requires Phi symmetric under
// y <-> 1/y and integer coefficients.
std::vector<Integer> gv_extract(const LaurentPoly& phi);

// (y^{1/2} + y^{-1/2})^{2g} as a Laurent polynomial in y.
LaurentPoly genus_basis_element(int g);

// Fiber-class invariant of an elliptically fibered 3-fold over a point whose
// fiber has Euler characteristic e in {0,1,2}: y^{-1} + (2-e) + y.
LaurentPoly elliptic_phi(int euler_char);

// Zero-cycle invariant for a weighted point configuration: -1 for a single
// point carrying the full multiplicity, 0 otherwise.
LaurentPoly zero_cycle_phi(const std::vector<long>& multiplicities);

}  // namespace qbps
