#include "qbps/dim_vector.hpp"

namespace qbps {

bool DimVector::is_zero() const {
    for (int e : entries_) {
        if (e != 0) return false;
    }
    return true;
}

long DimVector::total() const {
    long t = 0;
    for (int e : entries_) t += e;
    return t;
}

DimVector DimVector::operator+(const DimVector& o) const {
    if (rank() != o.rank()) throw input_error("dimension vector rank mismatch");
    DimVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
    if (rank() != o.rank()) throw input_error("dimension vector rank mismatch");
    DimVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        if (entries_[i] < o.entries_[i]) {
            throw input_error("dimension vector subtraction would go negative");
        }
        r.entries_[i] = entries_[i] - o.entries_[i];
    }
    return r;
}

DimVector DimVector::scaled(int k) const {
    if (k < 0) throw input_error("negative scaling of a dimension vector");
    DimVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r.entries_[i] = entries_[i] * k;
    return r;
}

bool DimVector::dominated_by(const DimVector& o) const {
    if (rank() != o.rank()) throw input_error("dimension vector rank mismatch");
    for (std::size_t i = 0; i < rank(); ++i) {
        if (entries_[i] > o.entries_[i]) return false;
    }
    return true;
}

bool DimVector::divisible_by(int k) const {
    for (int e : entries_) {
        if (e % k != 0) return false;
    }
    return true;
}

DimVector DimVector::divided_by(int k) const {
    DimVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        if (entries_[i] % k != 0) throw math_error("dimension vector not divisible");
        r.entries_[i] = entries_[i] / k;
    }
    return r;
}

bool DimVector::proportional(const DimVector& a, const DimVector& b) {
    if (a.rank() != b.rank()) throw input_error("dimension vector rank mismatch");
    for (std::size_t i = 0; i < a.rank(); ++i) {
        for (std::size_t j = i + 1; j < a.rank(); ++j) {
            if (static_cast<long>(a[i]) * b[j] != static_cast<long>(a[j]) * b[i]) return false;
        }
    }
    return true;
}

std::string DimVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

}  // namespace qbps
