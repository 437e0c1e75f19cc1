#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbps/series.hpp"
#include "qbps/stability.hpp"

namespace qbps {

// BPS invariants: one Laurent polynomial per dimension vector, up to total
// degree trunc.  provenance records which stability produced the table.
struct BpsTable {
    int trunc = 0;
    std::map<DimVector, LaurentPoly> omega;
    std::optional<StabilityXi> xi;  // nullopt = trivial stability

    LaurentPoly entry(const DimVector& m) const {
        auto it = omega.find(m);
        return it == omega.end() ? LaurentPoly() : it->second;
    }
};

// The constant factor -v^{-1}/(1-v^{-2}) multiplying every BPS class in the
// plethystic factorization; equals -(v^{-1} + v^{-3} + v^{-5} + ...) when
// expanded downward.
RationalFunction virtual_factor();

// Generating series of signed stack counts, coefficient (-v)^{<m,m>} *
// stack_count(m) at each m != 0 plus constant term 1.  Quiver must be
// symmetric (the factorization theorem needs the Euler form symmetric).
TruncatedSeries normalized_stack_series(const Quiver& q, int trunc);

// Solves  normalized series = Exp(virtual_factor * Omega)  for Omega by
// induction on total degree.  Every entry must come out denominator-free;
// anything else aborts with convention_violation.
BpsTable bps_trivial(const Quiver& q, int trunc);

// Per-slope refinement: for each slope value among |m| <= trunc, the series
// of signed semistable counts over that slope slice factors the same way;
// the tables are assembled across slices.  xi may be non-generic.
BpsTable bps_xi(const Quiver& q, const StabilityXi& xi, int trunc);

struct InvarianceDiscrepancy {
    std::size_t xi_index;
    DimVector dim;
    LaurentPoly omega_xi;
    LaurentPoly omega_trivial;
};

struct InvarianceReport {
    bool invariant = true;
    BpsTable trivial;
    std::vector<BpsTable> tables;
    std::vector<InvarianceDiscrepancy> discrepancies;
};

// Checks bps_xi == bps_trivial entry-wise for every listed stability.
InvarianceReport invariance_check(const Quiver& q, const std::vector<StabilityXi>& xis,
                                  int trunc);

// Specialization v -> 1 of every entry; values must be integers.
std::map<DimVector, Integer> euler_specialize(const BpsTable& table);

}  // namespace qbps
