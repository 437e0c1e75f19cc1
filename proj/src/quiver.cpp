#include "qbps/quiver.hpp"

namespace qbps {

Quiver::Quiver(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
    const int n = num_vertices();
    for (const Edge& e : edges_) {
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
            throw input_error("edge endpoint out of range");
        }
    }
}

Quiver::Quiver(int num_vertices, std::vector<Edge> edges)
    : Quiver(
          [num_vertices] {
              std::vector<std::string> labels;
              for (int i = 0; i < num_vertices; ++i) labels.push_back(std::to_string(i));
              return labels;
          }(),
          std::move(edges)) {}

int Quiver::arrow_count(int i, int j) const {
    int count = 0;
    for (const Edge& e : edges_) {
        if (e.src == i && e.dst == j) ++count;
    }
    return count;
}

bool is_symmetric(const Quiver& q) {
    const int n = q.num_vertices();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (q.arrow_count(i, j) != q.arrow_count(j, i)) return false;
        }
    }
    return true;
}

long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    if (static_cast<int>(a.rank()) != q.num_vertices() ||
        static_cast<int>(b.rank()) != q.num_vertices()) {
        throw input_error("dimension vector length does not match vertex count");
    }
    long value = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) value += static_cast<long>(a[i]) * b[i];
    for (const Edge& e : q.edges()) {
        value -= static_cast<long>(a[static_cast<std::size_t>(e.src)]) *
                 b[static_cast<std::size_t>(e.dst)];
    }
    return value;
}

long rep_dimension(const Quiver& q, const DimVector& m) {
    if (static_cast<int>(m.rank()) != q.num_vertices()) {
        throw input_error("dimension vector length does not match vertex count");
    }
    long d = 0;
    for (const Edge& e : q.edges()) {
        d += static_cast<long>(m[static_cast<std::size_t>(e.src)]) *
             m[static_cast<std::size_t>(e.dst)];
    }
    return d;
}

RationalFunction gl_order(int n) {
    if (n < 0) throw input_error("gl_order of a negative rank");
    // prod_{i=0}^{n-1} (q^n - q^i) in v with q = v^2.
    LaurentPoly p(Rational(1));
    for (int i = 0; i < n; ++i) {
        LaurentPoly factor = LaurentPoly::var(2 * n);
        factor.add_term(2 * i, Rational(-1));
        p *= factor;
    }
    return RationalFunction(p);
}

RationalFunction stack_count(const Quiver& q, const DimVector& m) {
    const long d = rep_dimension(q, m);
    RationalFunction count = RationalFunction::var(2 * d);
    for (std::size_t i = 0; i < m.rank(); ++i) {
        count /= gl_order(m[i]);
    }
    return count;
}

std::vector<long> det_character(const Quiver& q, const DimVector& m) {
    if (static_cast<int>(m.rank()) != q.num_vertices()) {
        throw input_error("dimension vector length does not match vertex count");
    }
    std::vector<long> exponents(static_cast<std::size_t>(q.num_vertices()), 0);
    for (const Edge& e : q.edges()) {
        exponents[static_cast<std::size_t>(e.src)] += m[static_cast<std::size_t>(e.dst)];
        exponents[static_cast<std::size_t>(e.dst)] -= m[static_cast<std::size_t>(e.src)];
    }
    return exponents;
}

ExtMatrix::ExtMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
    for (const auto& row : entries_) {
        if (row.size() != entries_.size()) throw input_error("ext matrix must be square");
        for (int x : row) {
            if (x < 0) throw input_error("ext matrix entries must be nonnegative");
        }
    }
}

bool ExtMatrix::is_symmetric() const {
    for (int i = 0; i < size(); ++i) {
        for (int j = i + 1; j < size(); ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

ExtQuiverResult ext_quiver(const ExtMatrix& eps) {
    std::vector<Edge> edges;
    const int k = eps.size();
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            for (int c = 0; c < eps(i, j); ++c) edges.push_back(Edge{i, j});
        }
    }
    ExtQuiverResult result{Quiver(k, std::move(edges)), eps.is_symmetric(), ""};
    if (!result.symmetric) {
        result.warning =
            "ext matrix is not symmetric; the Ext-quiver of a stable collection "
            "on a Calabi-Yau 3-fold is always symmetric, so this input does not "
            "come from one";
    }
    return result;
}

}  // namespace qbps
