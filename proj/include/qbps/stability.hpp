#pragma once

#include <map>
#include <vector>

#include "qbps/quiver.hpp"
#include "qbps/rational.hpp"

namespace qbps {

// Central-charge parameters: one upper-half-plane point per vertex.
class StabilityXi {
  public:
    explicit StabilityXi(std::vector<ExactComplex> xi);
    std::size_t rank() const { return xi_.size(); }
    const ExactComplex& operator[](std::size_t i) const { return xi_[i]; }
    const std::vector<ExactComplex>& entries() const { return xi_; }

  private:
    std::vector<ExactComplex> xi_;
};

// Z(m) = sum_i m_i * xi_i.
ExactComplex central_charge_xi(const StabilityXi& xi, const DimVector& m);

// mu(m) = -Re Z / Im Z; finite because Im xi_i > 0 and m is nonzero.
Rational slope_xi(const StabilityXi& xi, const DimVector& m);

// No two non-proportional nonzero sub-vectors of m share a slope.
bool is_generic(const StabilityXi& xi, const DimVector& m);

// Ordered decomposition m = m_1 + ... + m_k with strictly decreasing slopes.
using HNType = std::vector<DimVector>;

// All HN types of m (including the trivial one), in lexicographic order.
std::vector<HNType> hn_strata(const StabilityXi& xi, const DimVector& m);

// Semistable stack counts, solved from the Harder-Narasimhan recursion
//   stack_count(m) = sum over HN types  q^{-sum_{i<j} <m_j, m_i>} * prod_i a^ss(m_i)
// by induction on total degree.  The counter memoizes across calls, so reuse
// one instance when sweeping many dimension vectors.
class SemistableCounter {
  public:
    SemistableCounter(Quiver quiver, StabilityXi xi);

    const Quiver& quiver() const { return quiver_; }
    const StabilityXi& xi() const { return xi_; }

    RationalFunction count(const DimVector& m);

    // The twisted product attached to one HN type (including its recursive
    // semistable factors); summing over all types recovers stack_count.
    RationalFunction stratum_contribution(const HNType& type);

  private:
    Quiver quiver_;
    StabilityXi xi_;
    std::map<DimVector, RationalFunction> memo_;
};

// One-shot convenience wrapper.
RationalFunction semistable_count(const Quiver& q, const StabilityXi& xi, const DimVector& m);

// Exhaustive count of semistable F_q-points of the representation space,
// q in {2,3,4}: enumerates every edge-matrix tuple and rejects those with a
// subrepresentation of strictly larger slope.  Raw point count, not divided
// by |G(F_q)|.  Guarded by |Rep(F_q)| <= 2^24.
long brute_force_ss_count(const Quiver& q, const StabilityXi& xi, const DimVector& m,
                          int field_size);

}  // namespace qbps
