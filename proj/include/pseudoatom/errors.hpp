#pragma once

#include <stdexcept>
#include <string>

namespace pseudoatom {

// Overlap (or other supposedly SPD) matrix failed the Cholesky pivot test.
// Usually indicates a broken knot sequence or assembly bug rather than a
// numerical edge case.
class NotPositiveDefinite : public std::runtime_error {
 public:
  NotPositiveDefinite(const std::string& what, int pivot_index)
      : std::runtime_error(what), pivot_index_(pivot_index) {}
  int pivot_index() const { return pivot_index_; }

 private:
  int pivot_index_;
};

// Iterative stage (inverse iteration, bisection bracketing, adaptive
// quadrature) did not reach its tolerance within the iteration cap.
class ConvergenceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bound-state labeling failed a consistency check (node counts out of order
// with energies, duplicate labels).
class LabelError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries 1-based line and column of the offending
// token when known (0 = unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pseudoatom
