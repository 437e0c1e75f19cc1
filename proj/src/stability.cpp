#include "qbps/stability.hpp"

#include <cmath>
#include <algorithm>
#include <bitset>
#include <cstdint>
#include <optional>

namespace qbps {

StabilityXi::StabilityXi(std::vector<ExactComplex> xi) : xi_(std::move(xi)) {
    if (xi_.empty()) throw input_error("stability parameter needs at least one vertex");
    for (const ExactComplex& z : xi_) {
        if (z.im <= 0) throw input_error("stability parameters must lie in the upper half-plane");
    }
}

ExactComplex central_charge_xi(const StabilityXi& xi, const DimVector& m) {
    if (m.rank() != xi.rank()) throw input_error("stability parameter rank mismatch");
    ExactComplex z;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        z += Rational(m[i]) * xi[i];
    }
    return z;
}

Rational slope_xi(const StabilityXi& xi, const DimVector& m) {
    if (m.is_zero()) throw input_error("slope of the zero dimension vector");
    ExactComplex z = central_charge_xi(xi, m);
    return -z.re / z.im;
}

namespace {

// Visits every nonzero vector dominated by bound, in lexicographic order.
template <typename F>
void for_each_subvector(const DimVector& bound, F&& visit) {
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
    while (advance()) visit(current);
}

}  // namespace

bool is_generic(const StabilityXi& xi, const DimVector& m) {
    std::vector<std::pair<DimVector, Rational>> slopes;
    for_each_subvector(m, [&](const DimVector& a) { slopes.emplace_back(a, slope_xi(xi, a)); });
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        for (std::size_t j = i + 1; j < slopes.size(); ++j) {
            if (slopes[i].second == slopes[j].second &&
                !DimVector::proportional(slopes[i].first, slopes[j].first)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void extend_strata(const StabilityXi& xi, const DimVector& remaining,
                   const std::optional<Rational>& slope_bound, HNType& current,
                   std::vector<HNType>& out) {
    if (remaining.is_zero()) {
        out.push_back(current);
        return;
    }
    for_each_subvector(remaining, [&](const DimVector& part) {
        Rational slope = slope_xi(xi, part);
        if (slope_bound && !(slope < *slope_bound)) return;
        current.push_back(part);
        extend_strata(xi, remaining - part, slope, current, out);
        current.pop_back();
    });
}

}  // namespace

std::vector<HNType> hn_strata(const StabilityXi& xi, const DimVector& m) {
    if (m.is_zero()) throw input_error("HN strata of the zero dimension vector");
    std::vector<HNType> out;
    HNType current;
    extend_strata(xi, m, std::nullopt, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

SemistableCounter::SemistableCounter(Quiver quiver, StabilityXi xi)
    : quiver_(std::move(quiver)), xi_(std::move(xi)) {
    if (static_cast<std::size_t>(quiver_.num_vertices()) != xi_.rank()) {
        throw input_error("stability parameter rank does not match quiver");
    }
}

RationalFunction SemistableCounter::count(const DimVector& m) {
    if (m.is_zero()) throw input_error("semistable count of the zero dimension vector");
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    RationalFunction total = stack_count(quiver_, m);
    for (const HNType& type : hn_strata(xi_, m)) {
        if (type.size() < 2) continue;
        total -= stratum_contribution(type);
    }
    memo_.emplace(m, total);
    return total;
}

RationalFunction SemistableCounter::stratum_contribution(const HNType& type) {
    long twist = 0;
    for (std::size_t i = 0; i < type.size(); ++i) {
        for (std::size_t j = i + 1; j < type.size(); ++j) {
            twist -= euler_form(quiver_, type[j], type[i]);
        }
    }
    RationalFunction value = RationalFunction::var(2 * twist);
    for (const DimVector& part : type) value *= count(part);
    return value;
}

RationalFunction semistable_count(const Quiver& q, const StabilityXi& xi, const DimVector& m) {
    SemistableCounter counter(q, xi);
    return counter.count(m);
}

// ---------------------------------------------------------------------------
// Brute-force oracle over F_q, q in {2,3,4}
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMaxVectorSpace = 4096;  // q^dim per vertex

struct SmallField {
    int q;
    std::uint8_t add[4][4] = {};
    std::uint8_t mul[4][4] = {};

    static SmallField make(int q) {
        SmallField f;
        f.q = q;
        if (q == 2 || q == 3) {
            for (int a = 0; a < q; ++a) {
                for (int b = 0; b < q; ++b) {
                    f.add[a][b] = static_cast<std::uint8_t>((a + b) % q);
                    f.mul[a][b] = static_cast<std::uint8_t>((a * b) % q);
                }
            }
        } else if (q == 4) {
            // F_4 as bit pairs over F_2 with w^2 = w + 1.
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    f.add[a][b] = static_cast<std::uint8_t>(a ^ b);
                    int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
                    int c0 = (a0 & b0) ^ (a1 & b1);
                    int c1 = (a1 & b0) ^ (a0 & b1) ^ (a1 & b1);
                    f.mul[a][b] = static_cast<std::uint8_t>((c1 << 1) | c0);
                }
            }
        } else {
            throw input_error("oracle field size must be 2, 3 or 4");
        }
        return f;
    }
};

struct Subspace {
    int dim = 0;
    std::vector<std::vector<std::uint8_t>> basis;  // row vectors
    std::bitset<kMaxVectorSpace> members;
};

std::size_t encode(const std::vector<std::uint8_t>& vec, int q) {
    std::size_t code = 0;
    for (std::size_t i = vec.size(); i-- > 0;) code = code * static_cast<std::size_t>(q) + vec[i];
    return code;
}

// All subspaces of F_q^n via reduced row-echelon bases.
std::vector<Subspace> enumerate_subspaces(const SmallField& f, int n) {
    std::vector<Subspace> out;
    std::vector<int> pivots;

    auto emit = [&](const std::vector<std::vector<std::uint8_t>>& rows) {
        Subspace s;
        s.dim = static_cast<int>(rows.size());
        s.basis = rows;
        // Span: all coefficient combinations of the basis.
        const int k = s.dim;
        std::vector<std::uint8_t> coeff(static_cast<std::size_t>(k), 0);
        std::vector<std::uint8_t> vec(static_cast<std::size_t>(n), 0);
        while (true) {
            std::fill(vec.begin(), vec.end(), 0);
            for (int r = 0; r < k; ++r) {
                if (coeff[static_cast<std::size_t>(r)] == 0) continue;
                for (int c = 0; c < n; ++c) {
                    vec[static_cast<std::size_t>(c)] = f.add[vec[static_cast<std::size_t>(c)]]
                        [f.mul[coeff[static_cast<std::size_t>(r)]][rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]]];
                }
            }
            s.members.set(encode(vec, f.q));
            int r = 0;
            for (; r < k; ++r) {
                if (++coeff[static_cast<std::size_t>(r)] < f.q) break;
                coeff[static_cast<std::size_t>(r)] = 0;
            }
            if (r == k) break;
        }
        if (k == 0) s.members.set(0);
        out.push_back(std::move(s));
    };

    // Enumerate pivot column sets, then free entries.
    std::vector<int> columns(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) columns[static_cast<std::size_t>(i)] = i;

    std::vector<std::vector<std::uint8_t>> rows;
    auto fill_free = [&](auto&& self, std::size_t row, std::size_t col) -> void {
        if (row == pivots.size()) {
            emit(rows);
            return;
        }
        if (col == static_cast<std::size_t>(n)) {
            self(self, row + 1, 0);
            return;
        }
        const int c = static_cast<int>(col);
        const int pivot_col = pivots[row];
        bool is_pivot_col = std::find(pivots.begin(), pivots.end(), c) != pivots.end();
        if (c < pivot_col || is_pivot_col) {
            // Forced entry: 1 on own pivot, 0 elsewhere (already set).
            self(self, row, col + 1);
            return;
        }
        for (int value = 0; value < f.q; ++value) {
            rows[row][col] = static_cast<std::uint8_t>(value);
            self(self, row, col + 1);
        }
        rows[row][col] = 0;
    };

    auto choose_pivots = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            rows.assign(pivots.size(), std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                rows[r][static_cast<std::size_t>(pivots[r])] = 1;
            }
            fill_free(fill_free, 0, 0);
            return;
        }
        for (int c = start; c <= n - remaining; ++c) {
            pivots.push_back(c);
            self(self, c + 1, remaining - 1);
            pivots.pop_back();
        }
    };

    for (int k = 0; k <= n; ++k) choose_pivots(choose_pivots, 0, k);
    return out;
}

}  // namespace

long brute_force_ss_count(const Quiver& q, const StabilityXi& xi, const DimVector& m,
                          int field_size) {
    if (m.is_zero()) throw input_error("oracle count of the zero dimension vector");
    if (static_cast<int>(m.rank()) != q.num_vertices()) {
        throw input_error("dimension vector length does not match vertex count");
    }
    const SmallField field = SmallField::make(field_size);
    const long d = rep_dimension(q, m);
    double log2_points = d * std::log2(static_cast<double>(field_size));
    if (log2_points > 24.0) {
        throw input_error("representation space too large for the brute-force oracle");
    }
    for (std::size_t i = 0; i < m.rank(); ++i) {
        double vs = m[i] * std::log2(static_cast<double>(field_size));
        if (vs > std::log2(static_cast<double>(kMaxVectorSpace))) {
            throw input_error("vertex space too large for the brute-force oracle");
        }
    }

    const int nv = q.num_vertices();
    std::vector<std::vector<Subspace>> subspaces(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        subspaces[static_cast<std::size_t>(i)] = enumerate_subspaces(field, m[static_cast<std::size_t>(i)]);
    }

    // Dimension vectors of potential destabilizers: proper, nonzero, of
    // strictly larger slope.
    const Rational total_slope = slope_xi(xi, m);
    std::vector<DimVector> destabilizing;
    for_each_subvector(m, [&](const DimVector& sub) {
        if (sub == m) return;
        if (slope_xi(xi, sub) > total_slope) destabilizing.push_back(sub);
    });

    // Candidate subspace tuples grouped by destabilizing dimension vector.
    struct Candidate {
        std::vector<const Subspace*> spaces;  // one per vertex
    };
    std::vector<Candidate> candidates;
    for (const DimVector& target : destabilizing) {
        std::vector<std::vector<const Subspace*>> per_vertex(static_cast<std::size_t>(nv));
        for (int i = 0; i < nv; ++i) {
            for (const Subspace& s : subspaces[static_cast<std::size_t>(i)]) {
                if (s.dim == target[static_cast<std::size_t>(i)]) {
                    per_vertex[static_cast<std::size_t>(i)].push_back(&s);
                }
            }
        }
        std::vector<const Subspace*> pick(static_cast<std::size_t>(nv), nullptr);
        auto product = [&](auto&& self, int vertex) -> void {
            if (vertex == nv) {
                candidates.push_back(Candidate{pick});
                return;
            }
            for (const Subspace* s : per_vertex[static_cast<std::size_t>(vertex)]) {
                pick[static_cast<std::size_t>(vertex)] = s;
                self(self, vertex + 1);
            }
        };
        product(product, 0);
    }

    // Mixed-radix iteration over all edge-matrix tuples.
    struct Slot {
        int edge;
        int row;
        int col;
    };
    std::vector<Slot> slots;
    const auto& edges = q.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const int rows = m[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].dst)];
        const int cols = m[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].src)];
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) slots.push_back(Slot{e, r, c});
        }
    }
    std::vector<std::uint8_t> digits(slots.size(), 0);
    std::vector<std::vector<std::vector<std::uint8_t>>> mats(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        mats[e].assign(static_cast<std::size_t>(m[static_cast<std::size_t>(edges[e].dst)]),
                       std::vector<std::uint8_t>(static_cast<std::size_t>(m[static_cast<std::size_t>(edges[e].src)]), 0));
    }

    std::vector<std::uint8_t> image;
    auto apply = [&](std::size_t e, const std::vector<std::uint8_t>& vec) {
        const auto& mat = mats[e];
        image.assign(mat.size(), 0);
        for (std::size_t r = 0; r < mat.size(); ++r) {
            std::uint8_t acc = 0;
            for (std::size_t c = 0; c < vec.size(); ++c) {
                acc = field.add[acc][field.mul[mat[r][c]][vec[c]]];
            }
            image[r] = acc;
        }
        return encode(image, field.q);
    };

    auto destabilized = [&]() {
        for (const Candidate& cand : candidates) {
            bool closed = true;
            for (std::size_t e = 0; e < edges.size() && closed; ++e) {
                const Subspace* src = cand.spaces[static_cast<std::size_t>(edges[e].src)];
                const Subspace* dst = cand.spaces[static_cast<std::size_t>(edges[e].dst)];
                for (const auto& basis_vec : src->basis) {
                    if (!dst->members.test(apply(e, basis_vec))) {
                        closed = false;
                        break;
                    }
                }
            }
            if (closed) return true;
        }
        return false;
    };

    long count = 0;
    while (true) {
        for (std::size_t s = 0; s < slots.size(); ++s) {
            mats[static_cast<std::size_t>(slots[s].edge)][static_cast<std::size_t>(slots[s].row)]
                [static_cast<std::size_t>(slots[s].col)] = digits[s];
        }
        if (!destabilized()) ++count;
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
            if (++digits[i] < field.q) break;
            digits[i] = 0;
        }
        if (i == digits.size()) break;
    }
    return count;
}

}  // namespace qbps
