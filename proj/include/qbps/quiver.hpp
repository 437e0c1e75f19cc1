#pragma once

#include <string>
#include <vector>

#include "qbps/dim_vector.hpp"
#include "qbps/rational_function.hpp"

namespace qbps {

struct Edge {
    int src;
    int dst;
    bool operator==(const Edge&) const = default;
};

// Directed multigraph with ordered vertices.  Labels are metadata only;
// dimension vectors, the Euler form and all counts refer to vertex indices.
class Quiver {
  public:
    Quiver() = default;
    Quiver(std::vector<std::string> labels, std::vector<Edge> edges);

    // Unlabeled constructor; vertices named "0", "1", ...
    Quiver(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Number of arrows i -> j.
    int arrow_count(int i, int j) const;

    bool operator==(const Quiver&) const = default;

  private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
};

// Equal arrow counts in both directions for every vertex pair.
bool is_symmetric(const Quiver& q);

// Euler pairing <a,b> = sum_i a_i b_i - sum_e a_{s(e)} b_{t(e)}.  Its negative
// diagonal is dim Rep - dim G; symmetric exactly for symmetric quivers.
long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

// Total dimension of the representation space, sum_e m_{s(e)} m_{t(e)}.
long rep_dimension(const Quiver& q, const DimVector& m);

// |GL_n| over a field with q = v^2 elements, as a polynomial in q:
// q^{n(n-1)/2} * prod_{i=1}^{n} (q^i - 1).  gl_order(0) = 1.
RationalFunction gl_order(int n);

// Point count of the representation stack, q^{dim Rep} / prod_i |GL_{m_i}|,
// in the variable v with q = v^2.
RationalFunction stack_count(const Quiver& q, const DimVector& m);

// Exponent of det(g_i) in the character prod_e det(g_{s(e)})^{m_{t(e)}} *
// det(g_{t(e)})^{-m_{s(e)}}; identically zero exactly for symmetric quivers.
std::vector<long> det_character(const Quiver& q, const DimVector& m);

// Declared Ext^1 dimensions between the members of a stable collection.
class ExtMatrix {
  public:
    explicit ExtMatrix(std::vector<std::vector<int>> entries);
    int size() const { return static_cast<int>(entries_.size()); }
    int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    bool is_symmetric() const;

  private:
    std::vector<std::vector<int>> entries_;
};

struct ExtQuiverResult {
    Quiver quiver;
    bool symmetric;
    // Non-empty when the input matrix is asymmetric; Ext-quivers of genuine
    // stable collections are always symmetric, so this flags suspect input.
    std::string warning;
};

// Quiver with vertices 1..k and eps(i,j) arrows i -> j.
ExtQuiverResult ext_quiver(const ExtMatrix& eps);

}  // namespace qbps
