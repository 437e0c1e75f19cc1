#pragma once

#include <stdexcept>
#include <string>

namespace qbps {

// Malformed or inconsistent user input (bad JSON, shape mismatch, out-of-range
// argument).  The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violation of an arithmetic precondition (division by zero, singular matrix,
// gcd of two zeros).
struct math_error : std::runtime_error {
    explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computed invariant landed outside its contracted shape, e.g. a BPS entry
// with a nontrivial denominator.  Signals a broken normalization convention
// rather than bad input.  The CLI maps this to exit code 3.
struct convention_violation : std::runtime_error {
    explicit convention_violation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qbps
