#include "jumploci/infinitesimal.hpp"

#include <cassert>

#include "jumploci/minors.hpp"
#include "jumploci/resonance.hpp"

namespace jumploci {

LaurentMatrix contraction_matrix(const Ring& R, int n) {
  assert(R.n == n);
  const int m = pair_count(n);
  std::vector<Polynomial> entries(static_cast<size_t>(n) * m, poly_zero(R));
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      int col = pair_index(n, p, q);
      entries[static_cast<size_t>(q) * m + col] = poly_var(R, p, 1);
      entries[static_cast<size_t>(p) * m + col] = pneg(poly_var(R, q, 1));
    }
  return laurent_matrix_from_polys(R, n, m, entries);
}

LaurentMatrix triple_contraction_matrix(const Ring& R, int n) {
  assert(R.n == n);
  const int m = pair_count(n);
  const int t = n * (n - 1) * (n - 2) / 6;
  std::vector<Polynomial> entries(static_cast<size_t>(m) * t, poly_zero(R));
  int col = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int r = q + 1; r < n; ++r) {
        entries[static_cast<size_t>(pair_index(n, q, r)) * t + col] = poly_var(R, p, 1);
        entries[static_cast<size_t>(pair_index(n, p, r)) * t + col] = pneg(poly_var(R, q, 1));
        entries[static_cast<size_t>(pair_index(n, p, q)) * t + col] = poly_var(R, r, 1);
        ++col;
      }
  return laurent_matrix_from_polys(R, m, t, entries);
}

LaurentMatrix infinitesimal_alexander(const CupStructure& c, Order ord) {
  const int n = c.n;
  const int m = pair_count(n);
  const int t = n * (n - 1) * (n - 2) / 6;
  const int r = static_cast<int>(c.classes.size());
  Ring R = resonance_ring(c, ord);
  LaurentMatrix delta3 = triple_contraction_matrix(R, n);
  LaurentMatrix M = laurent_matrix(R, m, t + r);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < t; ++j) M.at(i, j) = delta3.at(i, j);
    for (int j = 0; j < r; ++j)
      M.at(i, t + j) = laurent_from_poly(R, poly_const(R, c.classes[j][i]));
  }
  return M;
}

Ideal infinitesimal_locus_ideal(const CupStructure& c, int k, Order ord) {
  LaurentMatrix M = infinitesimal_alexander(c, ord);
  return minors_ideal(M, pair_count(c.n) - (k - 1));
}

}  // namespace jumploci
