#pragma once

#include <string>
#include <vector>

#include "jumploci/polynomial.hpp"

namespace jumploci {

// value = x^shift * num, with num having trivial monomial content (no variable
// divides every term). Univariately that means a nonzero constant term.
// shift entries may be negative; num == 0 forces shift == 0.
struct LaurentEntry {
  Mono shift;
  Polynomial num;
  bool is_zero() const { return num.is_zero(); }
};

LaurentEntry laurent_zero(const Ring& R);
LaurentEntry laurent_normalize(const Ring& R, Mono shift, Polynomial num);
LaurentEntry laurent_from_poly(const Ring& R, const Polynomial& p);
LaurentEntry laurent_add(const Ring& R, const LaurentEntry& a, const LaurentEntry& b);
LaurentEntry laurent_sub(const Ring& R, const LaurentEntry& a, const LaurentEntry& b);
LaurentEntry laurent_mul(const Ring& R, const LaurentEntry& a, const LaurentEntry& b);
LaurentEntry laurent_neg(const LaurentEntry& a);
bool laurent_equal(const LaurentEntry& a, const LaurentEntry& b);
// Requires all coordinates nonzero when negative shifts occur.
Q laurent_eval(const LaurentEntry& a, const std::vector<Q>& point);
std::string laurent_str(const Ring& R, const LaurentEntry& a);

// Row-major entries over Laurent polynomials. Rows index the presentation
// target where the matrix presents a module.
struct LaurentMatrix {
  Ring ring;
  int rows = 0;
  int cols = 0;
  std::vector<LaurentEntry> a;

  const LaurentEntry& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  LaurentEntry& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
};

LaurentMatrix laurent_matrix(const Ring& R, int rows, int cols);
LaurentMatrix laurent_matrix_from_polys(const Ring& R, int rows, int cols,
                                        const std::vector<Polynomial>& entries);

std::vector<std::vector<Q>> laurent_eval_matrix(const LaurentMatrix& M,
                                                const std::vector<Q>& point);
int rank_q(std::vector<std::vector<Q>> m);

}  // namespace jumploci
