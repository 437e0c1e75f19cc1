#include "qbps/bps.hpp"

#include <algorithm>

namespace qbps {

RationalFunction virtual_factor() {
    // -v^{-1}/(1-v^{-2})
    LaurentPoly num = LaurentPoly::monomial(Rational(-1), -1);
    LaurentPoly den(Rational(1));
    den.add_term(-2, Rational(-1));
    return RationalFunction(num, den);
}

namespace {

RationalFunction signed_weight(long euler_diag) {
    // (-v)^{<m,m>} = (-1)^{<m,m>} v^{<m,m>}
    RationalFunction w = RationalFunction::var(euler_diag);
    if (euler_diag % 2 != 0) w = -w;
    return w;
}

}  // namespace

TruncatedSeries normalized_stack_series(const Quiver& q, int trunc) {
    if (!is_symmetric(q)) {
        throw input_error("quiver is not symmetric");
    }
    TruncatedSeries series(q.num_vertices(), trunc);
    const DimVector bound = [&] {
        DimVector b(static_cast<std::size_t>(q.num_vertices()));
        for (std::size_t i = 0; i < b.rank(); ++i) b[i] = trunc;
        return b;
    }();
    series.set_coefficient(DimVector(static_cast<std::size_t>(q.num_vertices())),
                           RationalFunction(Rational(1)));
    // Every m with 0 < |m| <= trunc.
    std::vector<DimVector> keys;
    DimVector current(bound.rank());
    auto advance = [&]() {
        for (std::size_t i = bound.rank(); i-- > 0;) {
            if (current[i] < bound[i]) {
                ++current[i];
                for (std::size_t j = i + 1; j < bound.rank(); ++j) current[j] = 0;
                return true;
            }
        }
        return false;
    };
    while (advance()) {
        if (current.total() > trunc) continue;
        keys.push_back(current);
    }
    for (const DimVector& m : keys) {
        series.set_coefficient(m, signed_weight(euler_form(q, m, m)) * stack_count(q, m));
    }
    return series;
}

namespace {

// Solves A = Exp(P * Omega) over the given support by induction on total
// degree: at each level the linear psi_1-term P*Omega_m is the only missing
// piece of Exp(P * Omega_{<level}).
std::map<DimVector, LaurentPoly> solve_factorization(const TruncatedSeries& series,
                                                     const std::vector<DimVector>& support,
                                                     int trunc) {
    const RationalFunction p = virtual_factor();
    std::map<DimVector, LaurentPoly> omega;
    TruncatedSeries scaled(series.rank(), trunc);  // P * Omega, filled level by level
    for (int level = 1; level <= trunc; ++level) {
        TruncatedSeries expanded = plethystic_exp(scaled);
        for (const DimVector& m : support) {
            if (m.total() != level) continue;
            RationalFunction value = (series.coefficient(m) - expanded.coefficient(m)) / p;
            if (!value.is_laurent()) {
                throw convention_violation(
                    "BPS entry at " + m.to_string() +
                    " is not a Laurent polynomial: " + value.to_string());
            }
            LaurentPoly entry = value.as_laurent();
            if (!entry.is_zero()) omega.emplace(m, entry);
            scaled.set_coefficient(m, p * value);
        }
    }
    return omega;
}

std::vector<DimVector> all_keys(int rank, int trunc) {
    std::vector<DimVector> keys;
    DimVector bound(static_cast<std::size_t>(rank));
    for (std::size_t i = 0; i < bound.rank(); ++i) bound[i] = trunc;
    DimVector current(bound.rank());
    auto advance = [&]() {
        for (std::size_t i = bound.rank(); i-- > 0;) {
            if (current[i] < bound[i]) {
                ++current[i];
                for (std::size_t j = i + 1; j < bound.rank(); ++j) current[j] = 0;
                return true;
            }
        }
        return false;
    };
    while (advance()) {
        if (current.total() <= trunc) keys.push_back(current);
    }
    return keys;
}

}  // namespace

BpsTable bps_trivial(const Quiver& q, int trunc) {
    if (trunc < 1) throw input_error("truncation bound must be at least 1");
    TruncatedSeries series = normalized_stack_series(q, trunc);
    BpsTable table;
    table.trunc = trunc;
    table.omega = solve_factorization(series, all_keys(q.num_vertices(), trunc), trunc);
    return table;
}

BpsTable bps_xi(const Quiver& q, const StabilityXi& xi, int trunc) {
    if (trunc < 1) throw input_error("truncation bound must be at least 1");
    if (!is_symmetric(q)) throw input_error("quiver is not symmetric");
    if (xi.rank() != static_cast<std::size_t>(q.num_vertices())) {
        throw input_error("stability parameter rank does not match quiver");
    }

    // Group dimension vectors by slope; each slice is closed under addition
    // and under the Adams scalings, so the factorization restricts to it.
    std::vector<DimVector> keys = all_keys(q.num_vertices(), trunc);
    std::map<Rational, std::vector<DimVector>> slices;
    for (const DimVector& m : keys) slices[slope_xi(xi, m)].push_back(m);

    SemistableCounter counter(q, xi);
    BpsTable table;
    table.trunc = trunc;
    table.xi = xi;
    for (const auto& [slope, slice] : slices) {
        (void)slope;
        TruncatedSeries series(q.num_vertices(), trunc);
        series.set_coefficient(DimVector(static_cast<std::size_t>(q.num_vertices())),
                               RationalFunction(Rational(1)));
        for (const DimVector& m : slice) {
            series.set_coefficient(m, signed_weight(euler_form(q, m, m)) * counter.count(m));
        }
        auto omega = solve_factorization(series, slice, trunc);
        table.omega.insert(omega.begin(), omega.end());
    }
    return table;
}

InvarianceReport invariance_check(const Quiver& q, const std::vector<StabilityXi>& xis,
                                  int trunc) {
    InvarianceReport report;
    report.trivial = bps_trivial(q, trunc);
    for (std::size_t i = 0; i < xis.size(); ++i) {
        BpsTable table = bps_xi(q, xis[i], trunc);
        std::vector<DimVector> keys;
        for (const auto& [m, w] : table.omega) {
            (void)w;
            keys.push_back(m);
        }
        for (const auto& [m, w] : report.trivial.omega) {
            (void)w;
            keys.push_back(m);
        }
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (const DimVector& m : keys) {
            LaurentPoly a = table.entry(m);
            LaurentPoly b = report.trivial.entry(m);
            if (a != b) {
                report.invariant = false;
                report.discrepancies.push_back(InvarianceDiscrepancy{i, m, a, b});
            }
        }
        report.tables.push_back(std::move(table));
    }
    return report;
}

std::map<DimVector, Integer> euler_specialize(const BpsTable& table) {
    std::map<DimVector, Integer> out;
    for (const auto& [m, poly] : table.omega) {
        Rational value = poly.eval(Rational(1));
        if (!is_integer(value)) {
            throw convention_violation("Euler specialization at " + m.to_string() +
                                       " is not an integer: " + to_string(value));
        }
        out.emplace(m, value.get_num());
    }
    return out;
}

}  // namespace qbps
