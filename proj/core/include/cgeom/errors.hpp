#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgeom {

/// Malformed scalar expression or manifold document. `position` is a
/// zero-based byte offset into the parsed text (or line number for
/// documents, see `line`).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : std::runtime_error(what), position_(position), line_(line) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

/// Structurally invalid input: Jacobi violation, degenerate metric, even
/// dimension, mismatched lengths.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by the zero element or evaluation at a pole.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation whose mathematical definition requires a hypothesis that
/// does not hold (asymmetric *-Ricci tensor, non-gradient potential field).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cgeom
