#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "qbps/errors.hpp"

namespace qbps {

// Graded dimension vector: one nonnegative integer per quiver vertex.
// Ordered lexicographically so it can key maps.
class DimVector {
  public:
    DimVector() = default;
    explicit DimVector(std::size_t rank) : entries_(rank, 0) {}
    DimVector(std::initializer_list<int> values) : entries_(values) { validate_(); }
    explicit DimVector(std::vector<int> values) : entries_(std::move(values)) { validate_(); }

    std::size_t rank() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    bool is_zero() const;
    long total() const;

    DimVector operator+(const DimVector& o) const;
    DimVector operator-(const DimVector& o) const;  // requires componentwise >=
    DimVector scaled(int k) const;
    // Componentwise a <= b.
    bool dominated_by(const DimVector& o) const;
    // All entries divisible by k, k >= 1.
    bool divisible_by(int k) const;
    DimVector divided_by(int k) const;
    // Proportional over the rationals: all 2x2 minors vanish.
    static bool proportional(const DimVector& a, const DimVector& b);

    auto operator<=>(const DimVector& o) const = default;

    std::string to_string() const;  // "(a,b,c)"

  private:
    void validate_() const {
        for (int e : entries_) {
            if (e < 0) throw input_error("dimension vector entries must be nonnegative");
        }
    }
    std::vector<int> entries_;
};

}  // namespace qbps
