#pragma once

#include <optional>
#include <vector>

#include "qbps/eigen_rational.hpp"
#include "qbps/quiver.hpp"

namespace qbps {

// Closed path of edges e_1...e_n (t(e_i) = s(e_{i+1}) cyclically), stored in
// its lexicographically least rotation so equal cycles compare equal.
class CyclicWord {
  public:
    CyclicWord(const Quiver& q, std::vector<int> edges);

    std::size_t length() const { return edges_.size(); }
    const std::vector<int>& edges() const { return edges_; }

    auto operator<=>(const CyclicWord&) const = default;

    std::string to_string() const;

  private:
    std::vector<int> edges_;
};

// Formal sum of cyclic words with rational coefficients.  The optional growth
// constant bounds |coeff| < C^length for every term.
class SuperPotential {
  public:
    SuperPotential() = default;
    SuperPotential(std::vector<std::pair<CyclicWord, Rational>> terms,
                   std::optional<Rational> growth = std::nullopt);

    const std::vector<std::pair<CyclicWord, Rational>>& terms() const { return terms_; }
    const std::optional<Rational>& growth() const { return growth_; }
    bool is_zero() const { return terms_.empty(); }

  private:
    std::vector<std::pair<CyclicWord, Rational>> terms_;
    std::optional<Rational> growth_;
};

// One exact matrix per edge, shaped m_{t(e)} x m_{s(e)}.
struct MatrixTuple {
    DimVector dims;
    std::vector<MatrixQ> mats;

    static MatrixTuple zero(const Quiver& q, const DimVector& dims);
    void validate(const Quiver& q) const;
};

// Open path of edges, same traversal order as CyclicWord.
using EdgePath = std::vector<int>;

// Noncommutative polynomial: formal sum of open paths.
using PathSum = std::vector<std::pair<EdgePath, Rational>>;

// Matrix of a path at a point: the word e_1...e_n acts by u_{e_n} o ... o u_{e_1}.
MatrixQ eval_path(const Quiver& q, const MatrixTuple& u, const EdgePath& path);

// Trace of the potential at a representation point:
// sum over terms of coeff * tr(u_{e_n} o ... o u_{e_1}).
Rational eval_tr(const SuperPotential& w, const Quiver& q, const MatrixTuple& u);

// Floating-point variant, used by finite-difference checks.
double eval_tr_double(const SuperPotential& w, const Quiver& q,
                      const std::vector<Eigen::MatrixXd>& mats);

// Group action u_e -> g_{t(e)}^{-1} u_e g_{s(e)}; each g_i must be invertible.
MatrixTuple gauge_transform(const Quiver& q, const MatrixTuple& u,
                            const std::vector<MatrixQ>& g);

// Cyclic derivative with respect to an edge: every occurrence of the edge is
// rotated to the front and deleted.  Evaluating the result at u gives the
// matrix G with d(tr W)/d(u_e)_{ab} = G_{ba}.
PathSum cyclic_derivative(const SuperPotential& w, int edge);

MatrixQ eval_path_sum(const Quiver& q, const MatrixTuple& u, const PathSum& sum,
                      int rows, int cols);

// Drops every term of length > max_length; keeps the growth constant.
SuperPotential truncate(const SuperPotential& w, std::size_t max_length);

// Smallest power of two strictly above every |coeff|^{1/length}; 1 for the
// empty potential.  Always succeeds on finite potentials.
Rational check_growth(const SuperPotential& w);

}  // namespace qbps
