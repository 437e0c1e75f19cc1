#include "qbps/potential.hpp"

#include <algorithm>
#include <map>

namespace qbps {

CyclicWord::CyclicWord(const Quiver& q, std::vector<int> edges) : edges_(std::move(edges)) {
    if (edges_.empty()) throw input_error("cyclic words must have length >= 1");
    const auto& qe = q.edges();
    for (int e : edges_) {
        if (e < 0 || e >= static_cast<int>(qe.size())) {
            throw input_error("cyclic word references an edge out of range");
        }
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& cur = qe[static_cast<std::size_t>(edges_[i])];
        const Edge& next = qe[static_cast<std::size_t>(edges_[(i + 1) % edges_.size()])];
        if (cur.dst != next.src) throw input_error("cyclic word path does not close");
    }
    // Canonical rotation: lexicographically least.
    std::vector<int> best = edges_;
    std::vector<int> rotated = edges_;
    for (std::size_t r = 1; r < edges_.size(); ++r) {
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        if (rotated < best) best = rotated;
    }
    edges_ = std::move(best);
}

std::string CyclicWord::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(edges_[i]);
    }
    return s + ")";
}

SuperPotential::SuperPotential(std::vector<std::pair<CyclicWord, Rational>> terms,
                               std::optional<Rational> growth)
    : growth_(std::move(growth)) {
    std::map<CyclicWord, Rational> merged;
    for (auto& [word, coeff] : terms) {
        auto [it, inserted] = merged.emplace(word, coeff);
        if (!inserted) it->second += coeff;
    }
    for (auto& [word, coeff] : merged) {
        if (coeff == 0) continue;
        if (growth_) {
            if (*growth_ <= 0) throw input_error("growth constant must be positive");
            if (!(abs(coeff) < pow_rational(*growth_, static_cast<long>(word.length())))) {
                throw input_error("potential term violates its growth bound");
            }
        }
        terms_.emplace_back(word, coeff);
    }
}

MatrixTuple MatrixTuple::zero(const Quiver& q, const DimVector& dims) {
    if (static_cast<int>(dims.rank()) != q.num_vertices()) {
        throw input_error("dimension vector length does not match vertex count");
    }
    MatrixTuple u;
    u.dims = dims;
    for (const Edge& e : q.edges()) {
        u.mats.push_back(MatrixQ::Zero(dims[static_cast<std::size_t>(e.dst)],
                                       dims[static_cast<std::size_t>(e.src)]));
    }
    return u;
}

void MatrixTuple::validate(const Quiver& q) const {
    if (static_cast<int>(dims.rank()) != q.num_vertices()) {
        throw input_error("dimension vector length does not match vertex count");
    }
    if (mats.size() != q.edges().size()) {
        throw input_error("matrix tuple must have one matrix per edge");
    }
    for (std::size_t e = 0; e < mats.size(); ++e) {
        const Edge& edge = q.edges()[e];
        if (mats[e].rows() != dims[static_cast<std::size_t>(edge.dst)] ||
            mats[e].cols() != dims[static_cast<std::size_t>(edge.src)]) {
            throw input_error("matrix shape mismatch at edge " + std::to_string(e));
        }
    }
}

MatrixQ eval_path(const Quiver& q, const MatrixTuple& u, const EdgePath& path) {
    if (path.empty()) throw input_error("eval_path needs a nonempty path");
    MatrixQ acc = u.mats[static_cast<std::size_t>(path[0])];
    for (std::size_t i = 1; i < path.size(); ++i) {
        acc = (u.mats[static_cast<std::size_t>(path[i])] * acc).eval();
    }
    (void)q;
    return acc;
}

Rational eval_tr(const SuperPotential& w, const Quiver& q, const MatrixTuple& u) {
    u.validate(q);
    Rational total(0);
    for (const auto& [word, coeff] : w.terms()) {
        MatrixQ prod = eval_path(q, u, word.edges());
        if (prod.rows() != prod.cols()) throw input_error("potential word is not closed");
        total += coeff * prod.trace();
    }
    return total;
}

double eval_tr_double(const SuperPotential& w, const Quiver& q,
                      const std::vector<Eigen::MatrixXd>& mats) {
    (void)q;
    double total = 0;
    for (const auto& [word, coeff] : w.terms()) {
        const auto& path = word.edges();
        Eigen::MatrixXd acc = mats[static_cast<std::size_t>(path[0])];
        for (std::size_t i = 1; i < path.size(); ++i) {
            acc = mats[static_cast<std::size_t>(path[i])] * acc;
        }
        total += coeff.get_d() * acc.trace();
    }
    return total;
}

MatrixTuple gauge_transform(const Quiver& q, const MatrixTuple& u,
                            const std::vector<MatrixQ>& g) {
    u.validate(q);
    if (g.size() != static_cast<std::size_t>(q.num_vertices())) {
        throw input_error("gauge transform needs one matrix per vertex");
    }
    std::vector<MatrixQ> inverses;
    inverses.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].rows() != u.dims[i] || g[i].cols() != u.dims[i]) {
            throw input_error("gauge matrix shape mismatch at vertex " + std::to_string(i));
        }
        inverses.push_back(invert(g[i]));
    }
    MatrixTuple out;
    out.dims = u.dims;
    for (std::size_t e = 0; e < u.mats.size(); ++e) {
        const Edge& edge = q.edges()[e];
        out.mats.push_back(inverses[static_cast<std::size_t>(edge.dst)] * u.mats[e] *
                           g[static_cast<std::size_t>(edge.src)]);
    }
    return out;
}

PathSum cyclic_derivative(const SuperPotential& w, int edge) {
    std::map<EdgePath, Rational> acc;
    for (const auto& [word, coeff] : w.terms()) {
        const auto& edges = word.edges();
        for (std::size_t p = 0; p < edges.size(); ++p) {
            if (edges[p] != edge) continue;
            EdgePath path;
            for (std::size_t i = 1; i < edges.size(); ++i) {
                path.push_back(edges[(p + i) % edges.size()]);
            }
            auto [it, inserted] = acc.emplace(path, coeff);
            if (!inserted) it->second += coeff;
        }
    }
    PathSum out;
    for (auto& [path, coeff] : acc) {
        if (coeff != 0) out.emplace_back(path, coeff);
    }
    return out;
}

MatrixQ eval_path_sum(const Quiver& q, const MatrixTuple& u, const PathSum& sum, int rows,
                      int cols) {
    MatrixQ acc = MatrixQ::Zero(rows, cols);
    for (const auto& [path, coeff] : sum) {
        if (path.empty()) {
            if (rows != cols) throw input_error("empty path needs a square shape");
            acc += coeff * MatrixQ::Identity(rows, cols);
        } else {
            acc += coeff * eval_path(q, u, path);
        }
    }
    return acc;
}

SuperPotential truncate(const SuperPotential& w, std::size_t max_length) {
    if (max_length < 1) throw input_error("truncation length must be at least 1");
    std::vector<std::pair<CyclicWord, Rational>> kept;
    for (const auto& term : w.terms()) {
        if (term.first.length() <= max_length) kept.push_back(term);
    }
    SuperPotential out;
    out = SuperPotential(std::move(kept), w.growth());
    return out;
}

Rational check_growth(const SuperPotential& w) {
    // Smallest 2^k with 2^{k*n} > |a| for every term (a, n).
    auto satisfied = [&](long k) {
        for (const auto& [word, coeff] : w.terms()) {
            if (!(pow_rational(Rational(2), k * static_cast<long>(word.length())) > abs(coeff))) {
                return false;
            }
        }
        return true;
    };
    if (w.is_zero()) return Rational(1);
    long k = 0;
    if (satisfied(k)) {
        while (satisfied(k - 1)) --k;
    } else {
        while (!satisfied(k)) ++k;
    }
    return pow_rational(Rational(2), k);
}

}  // namespace qbps
