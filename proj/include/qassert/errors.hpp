// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qassert {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Requested size exceeds a declared limit (qubit cap, measurement branches).
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Qubit or classical-bit index out of range, or duplicated.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// Bad argument value (zero shots, margin mismatch, malformed bitstring, ...).
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// Floating-point failure: non-convergence, unnormalized state.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// Structural problem in a circuit, e.g. a conditional on an unwritten bit.
class CircuitError : public Error {
  public:
    using Error::Error;
};

/// A chi-square expected cell is zero or negative, so the statistic is undefined.
class InvalidExpectedError : public Error {
  public:
    using Error::Error;
};

/// Not enough shots for the requested uniform assertion.
class InfeasibleShotsError : public Error {
  public:
    InfeasibleShotsError(const std::string &what, std::size_t required_shots)
        : Error(what), required_shots_(required_shots) {}
    std::size_t required_shots() const noexcept { return required_shots_; }

  private:
    std::size_t required_shots_;
};

/// Unknown built-in example or bug-injection name.
class LookupError : public Error {
  public:
    using Error::Error;
};

/// Circuit text could not be parsed. Line and column are 1-based.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string &message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace qassert
