#pragma once

#include <stdexcept>
#include <string>

namespace jumploci {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (presentations, cup files, graphs, polynomials, ...).
struct parse_error : error {
  int line = 0;
  int col = 0;
  parse_error(const std::string& msg, int l, int c)
      : error(msg + " (line " + std::to_string(l) + ", col " + std::to_string(c) + ")"),
        line(l),
        col(c) {}
};

// A computation hit its configured size cap. Callers may retry with a larger budget.
struct budget_exceeded : error {
  using error::error;
};

// Presentation outside the class an operation supports (e.g. a relator with
// nonzero exponent sums where a commutator-relator presentation is required).
struct unsupported_presentation : error {
  using error::error;
};

// Semantically invalid argument: bad k, empty basis vector, trivial torus, ...
struct input_error : error {
  using error::error;
};

}  // namespace jumploci
