#pragma once

#include <stdexcept>
#include <string>

namespace crepant {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Input that violates a documented precondition (bad index, malformed
/// geometry, mismatched ring, conductor beyond the cap, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Raised when a quantum parameter point makes q_r...q_s = 1 for a span
/// (r, s) that contributes to the requested quantity.
class PoleError : public Error {
public:
    PoleError(int r, int s)
        : Error("pole at span (" + std::to_string(r) + "," + std::to_string(s) +
                "): q_" + std::to_string(r) + "..q_" + std::to_string(s) + " = 1"),
          r_(r), s_(s) {}

    int r() const noexcept { return r_; }
    int s() const noexcept { return s_; }

private:
    int r_;
    int s_;
};

}  // namespace crepant
