#include "qbps/gamma.hpp"

#include <algorithm>
#include <set>

namespace qbps {

std::string GammaClass::to_string() const {
    std::string s = "(";
    for (Eigen::Index i = 0; i < beta.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(beta[i]);
    }
    return s + ";" + std::to_string(m) + ")";
}

Rational dot(const VectorQ& a, const Eigen::VectorXi& b) {
    if (a.size() != b.size()) throw input_error("pairing rank mismatch");
    Rational acc(0);
    for (Eigen::Index i = 0; i < a.size(); ++i) acc += a[i] * Rational(b[i]);
    return acc;
}

void validate_kahler(const KahlerParam& k, const EffectiveCone& cone) {
    if (k.B.size() != k.omega.size()) throw input_error("B and omega rank mismatch");
    for (const auto& gen : cone.generators) {
        if (gen.size() != k.omega.size()) throw input_error("cone generator rank mismatch");
        if (gen.isZero()) throw input_error("cone generators must be nonzero");
        if (!(dot(k.omega, gen) > 0)) {
            throw input_error("omega must pair positively with every effective generator");
        }
    }
}

ExactComplex central_charge(const KahlerParam& k, const GammaClass& v) {
    return ExactComplex(Rational(-v.m) + dot(k.B, v.beta), dot(k.omega, v.beta));
}

std::optional<Rational> twisted_slope(const KahlerParam& k, const GammaClass& v) {
    Rational denom = dot(k.omega, v.beta);
    if (denom == 0) return std::nullopt;
    return (Rational(v.m) - dot(k.B, v.beta)) / denom;
}

namespace {

std::vector<int> to_std(const Eigen::VectorXi& v) {
    return std::vector<int>(v.data(), v.data() + v.size());
}

// A functional strictly positive on all generators; needed to bound the
// expansion search.  Exists whenever the cone is strictly convex.
VectorQ positive_functional(const EffectiveCone& cone, Eigen::Index rank) {
    std::vector<VectorQ> candidates;
    VectorQ sum = VectorQ::Zero(rank);
    for (const auto& g : cone.generators) {
        for (Eigen::Index i = 0; i < rank; ++i) sum[i] += Rational(g[i]);
    }
    candidates.push_back(sum);
    for (Eigen::Index i = 0; i < rank; ++i) {
        VectorQ axis = VectorQ::Zero(rank);
        axis[i] = Rational(1);
        candidates.push_back(axis);
    }
    for (const VectorQ& w : candidates) {
        bool ok = true;
        for (const auto& g : cone.generators) {
            if (!(dot(w, g) > 0)) {
                ok = false;
                break;
            }
        }
        if (ok) return w;
    }
    throw input_error("could not certify the effective cone as strictly convex");
}

// All expansions of beta as nonnegative integer combinations of the
// generators.
std::vector<std::vector<long>> cone_expansions(const Eigen::VectorXi& beta,
                                               const EffectiveCone& cone) {
    if (cone.generators.empty()) throw input_error("effective cone has no generators");
    const Eigen::Index rank = beta.size();
    for (const auto& g : cone.generators) {
        if (g.size() != rank) throw input_error("cone generator rank mismatch");
    }
    VectorQ w = positive_functional(cone, rank);
    std::vector<std::vector<long>> out;
    std::vector<long> coeffs(cone.generators.size(), 0);
    Eigen::VectorXi remaining = beta;
    auto dfs = [&](auto&& self, std::size_t j) -> void {
        if (j == cone.generators.size()) {
            if (remaining.isZero()) out.push_back(coeffs);
            return;
        }
        const Eigen::VectorXi& g = cone.generators[j];
        Rational budget = dot(w, remaining);
        Rational step = dot(w, g);
        long max_count = 0;
        {
            Rational bound = budget / step;
            max_count = static_cast<long>(mpz_get_si(
                Integer(bound.get_num() / bound.get_den()).get_mpz_t()));
            if (max_count < 0) max_count = -1;
        }
        for (long c = 0; c <= max_count; ++c) {
            coeffs[j] = c;
            self(self, j + 1);
            remaining -= g;
        }
        remaining += g * static_cast<int>(max_count + 1);
        coeffs[j] = 0;
    };
    dfs(dfs, 0);
    return out;
}

Eigen::VectorXi combine(const EffectiveCone& cone, const std::vector<long>& coeffs,
                        Eigen::Index rank) {
    Eigen::VectorXi v = Eigen::VectorXi::Zero(rank);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        v += cone.generators[j] * static_cast<int>(coeffs[j]);
    }
    return v;
}

bool proportional_z(const std::vector<long>& a, const std::vector<long>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::pair<Eigen::VectorXi, Eigen::VectorXi>> effective_decompositions(
    const Eigen::VectorXi& beta, const EffectiveCone& cone) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<std::pair<Eigen::VectorXi, Eigen::VectorXi>> out;
    for (const auto& expansion : cone_expansions(beta, cone)) {
        // Componentwise splits of the expansion.
        std::vector<long> part(expansion.size(), 0);
        auto advance = [&]() {
            for (std::size_t i = 0; i < part.size(); ++i) {
                if (part[i] < expansion[i]) {
                    ++part[i];
                    for (std::size_t j = 0; j < i; ++j) part[j] = 0;
                    return true;
                }
                part[i] = 0;
            }
            return false;
        };
        bool more = true;
        while (more) {
            Eigen::VectorXi b1 = combine(cone, part, beta.size());
            Eigen::VectorXi b2 = beta - b1;
            auto key = std::make_pair(to_std(b1), to_std(b2));
            if (key.second < key.first) std::swap(key.first, key.second);
            if (seen.insert(key).second) {
                Eigen::VectorXi first = Eigen::Map<const Eigen::VectorXi>(
                    key.first.data(), static_cast<Eigen::Index>(key.first.size()));
                Eigen::VectorXi second = Eigen::Map<const Eigen::VectorXi>(
                    key.second.data(), static_cast<Eigen::Index>(key.second.size()));
                out.emplace_back(first, second);
            }
            more = advance();
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::make_pair(to_std(a.first), to_std(a.second)) <
               std::make_pair(to_std(b.first), to_std(b.second));
    });
    return out;
}

std::vector<WallDecomposition> wall_membership(const KahlerParam& k, const GammaClass& v,
                                               const EffectiveCone& cone, long m_bound) {
    if (m_bound < 0) throw input_error("m bound must be nonnegative");
    validate_kahler(k, cone);
    std::vector<WallDecomposition> out;
    std::set<std::pair<std::pair<std::vector<int>, long>, std::pair<std::vector<int>, long>>>
        seen;
    for (const auto& [b1, b2] : effective_decompositions(v.beta, cone)) {
        for (long m1 = -m_bound; m1 <= m_bound; ++m1) {
            const long m2 = v.m - m1;
            if (m2 < -m_bound || m2 > m_bound) continue;
            if (b1.isZero() && m1 <= 0) continue;
            if (b2.isZero() && m2 <= 0) continue;
            GammaClass v1{b1, m1};
            GammaClass v2{b2, m2};
            auto s1 = twisted_slope(k, v1);
            auto s2 = twisted_slope(k, v2);
            const bool equal_slopes =
                (s1.has_value() == s2.has_value()) && (!s1.has_value() || *s1 == *s2);
            if (!equal_slopes) continue;
            // Proportional charge vectors never open a wall.
            const std::vector<int> sb1 = to_std(b1);
            const std::vector<int> sb2 = to_std(b2);
            std::vector<long> z1(sb1.begin(), sb1.end());
            z1.push_back(m1);
            std::vector<long> z2(sb2.begin(), sb2.end());
            z2.push_back(m2);
            if (proportional_z(z1, z2)) continue;
            auto key = std::make_pair(std::make_pair(to_std(b1), m1),
                                      std::make_pair(to_std(b2), m2));
            if (key.second < key.first) std::swap(key.first, key.second);
            if (seen.insert(key).second) {
                Eigen::VectorXi first = Eigen::Map<const Eigen::VectorXi>(
                    key.first.first.data(), static_cast<Eigen::Index>(key.first.first.size()));
                Eigen::VectorXi second = Eigen::Map<const Eigen::VectorXi>(
                    key.second.first.data(), static_cast<Eigen::Index>(key.second.first.size()));
                out.push_back(WallDecomposition{GammaClass{first, key.first.second},
                                                GammaClass{second, key.second.second}});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const WallDecomposition& a, const WallDecomposition& b) {
        auto ka = std::make_tuple(to_std(a.v1.beta), a.v1.m, to_std(a.v2.beta), a.v2.m);
        auto kb = std::make_tuple(to_std(b.v1.beta), b.v1.m, to_std(b.v2.beta), b.v2.m);
        return ka < kb;
    });
    return out;
}

std::optional<Rational> generic_delta(const Eigen::VectorXi& beta, const VectorQ& H,
                                      const VectorQ& omega, const EffectiveCone& cone) {
    if (H.size() != beta.size() || omega.size() != beta.size()) {
        throw input_error("divisor rank mismatch");
    }
    for (const auto& g : cone.generators) {
        if (!(dot(omega, g) > 0)) {
            throw input_error("omega must pair positively with every effective generator");
        }
    }
    std::optional<Rational> delta0;
    for (const auto& [b1, b2] : effective_decompositions(beta, cone)) {
        if (b1.isZero() || b2.isZero()) continue;
        // Proportional decompositions carry no constraint.
        const std::vector<int> sb1 = to_std(b1);
        const std::vector<int> sb2 = to_std(b2);
        std::vector<long> z1(sb1.begin(), sb1.end());
        std::vector<long> z2(sb2.begin(), sb2.end());
        if (proportional_z(z1, z2)) continue;
        const Rational w1 = dot(omega, b1);
        const Rational w2 = dot(omega, b2);
        const Rational alpha = dot(H, b1) / w1 - dot(H, b2) / w2;
        if (alpha == 0) {
            throw math_error("non-generic (H, omega): equal twisted directions for " +
                             GammaClass{b1, 0}.to_string() + " + " + GammaClass{b2, 0}.to_string());
        }
        // Least positive value of m2/w2 - m1/w1 over integer (m1, m2).
        const Rational g = rational_gcd(Rational(1) / w1, Rational(1) / w2);
        const Rational bound = g / abs(alpha);
        if (!delta0 || bound < *delta0) delta0 = bound;
    }
    return delta0;
}

GammaClass flop_transform(const Eigen::MatrixXi& M, const GammaClass& v,
                          const std::optional<Eigen::MatrixXi>& divisor_transform) {
    if (M.rows() != M.cols() || M.rows() != v.beta.size()) {
        throw input_error("flop matrix shape mismatch");
    }
    MatrixQ mq(M.rows(), M.cols());
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        for (Eigen::Index c = 0; c < M.cols(); ++c) mq(r, c) = Rational(M(r, c));
    }
    Eigen::FullPivLU<MatrixQ> lu(mq);
    if (M.rows() > 0 && !lu.isInvertible()) throw math_error("flop matrix is singular");
    if (divisor_transform) {
        if (Eigen::MatrixXi(M.transpose()) != *divisor_transform) {
            throw input_error(
                "divisor transform is not adjoint to the curve transform; the pairing "
                "identity would fail");
        }
    }
    return GammaClass{M * v.beta, v.m};
}

CycleData blowup_pullback(const Eigen::MatrixXi& P, const CycleData& gamma) {
    MatrixQ pq(P.rows(), P.cols());
    for (Eigen::Index r = 0; r < P.rows(); ++r) {
        for (Eigen::Index c = 0; c < P.cols(); ++c) pq(r, c) = Rational(P(r, c));
    }
    Eigen::FullPivLU<MatrixQ> lu(pq);
    if (lu.rank() != P.cols()) throw input_error("pullback matrix must have full column rank");
    CycleData out;
    for (const CycleComponent& comp : gamma) {
        if (comp.cls.size() != P.cols()) throw input_error("cycle class rank mismatch");
        out.push_back(CycleComponent{comp.mult, P * comp.cls});
    }
    return out;
}

bool is_primitive(const CycleData& gamma) {
    if (gamma.empty()) throw input_error("primitivity of an empty cycle");
    Integer g = 0;
    for (const CycleComponent& comp : gamma) {
        if (comp.mult < 1) throw input_error("cycle multiplicities must be positive");
        g = gcd(g, Integer(comp.mult));
    }
    return g == 1;
}

LaurentPoly genus_basis_element(int g) {
    if (g < 0) throw input_error("negative genus");
    // (y^{1/2} + y^{-1/2})^{2g} = sum_k binom(2g, k) y^{k-g}
    LaurentPoly p;
    Integer binom;
    for (int k = 0; k <= 2 * g; ++k) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * g),
                     static_cast<unsigned long>(k));
        p.add_term(k - g, Rational(binom));
    }
    return p;
}

std::vector<Integer> gv_extract(const LaurentPoly& phi) {
    if (phi.is_zero()) return {Integer(0)};
    for (const auto& [e, c] : phi.terms()) {
        if (phi.coeff(-e) != c) {
            throw input_error("Phi is not symmetric under y <-> 1/y: coefficient mismatch "
                              "between y^" +
                              std::to_string(e) + " and y^" + std::to_string(-e));
        }
        if (!is_integer(c)) {
            throw input_error("Phi must have integer coefficients");
        }
    }
    const long g_max = phi.max_exp();
    std::vector<Integer> n(static_cast<std::size_t>(g_max) + 1, Integer(0));
    LaurentPoly remaining = phi;
    for (long g = g_max; g >= 0; --g) {
        Rational c = remaining.coeff(g);
        if (!is_integer(c)) throw input_error("genus extraction produced a non-integer");
        n[static_cast<std::size_t>(g)] = c.get_num();
        if (c != 0) {
            remaining -= c * genus_basis_element(static_cast<int>(g));
        }
    }
    if (!remaining.is_zero()) {
        throw convention_violation("genus decomposition does not reconstruct Phi");
    }
    return n;
}

LaurentPoly elliptic_phi(int euler_char) {
    if (euler_char < 0 || euler_char > 2) {
        throw input_error("fiber Euler characteristic must be 0, 1 or 2");
    }
    LaurentPoly p;
    p.add_term(-1, Rational(1));
    p.add_term(0, Rational(2 - euler_char));
    p.add_term(1, Rational(1));
    return p;
}

LaurentPoly zero_cycle_phi(const std::vector<long>& multiplicities) {
    if (multiplicities.empty()) throw input_error("empty point configuration");
    long total = 0;
    for (long a : multiplicities) {
        if (a < 1) throw input_error("point multiplicities must be positive");
        total += a;
    }
    if (total < 1) throw input_error("total multiplicity must be at least 1");
    if (multiplicities.size() == 1) return LaurentPoly(Rational(-1));
    return LaurentPoly();
}

}  // namespace qbps
