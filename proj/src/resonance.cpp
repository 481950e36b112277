#include "jumploci/resonance.hpp"

#include "jumploci/minors.hpp"

namespace jumploci {

Ring resonance_ring(const CupStructure& c, Order ord) { return make_ring("z", c.n, ord); }

LaurentMatrix resonance_matrix(const CupStructure& c, const Ring& R) {
  const int n = c.n;
  const int r = static_cast<int>(c.classes.size());
  std::vector<Polynomial> entries(static_cast<size_t>(n) * r, poly_zero(R));
  for (int j = 0; j < r; ++j) {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const Q& cpq = c.classes[j][pair_index(n, p, q)];
        if (cpq == 0) continue;
        Polynomial& row_q = entries[static_cast<size_t>(q) * r + j];
        Polynomial& row_p = entries[static_cast<size_t>(p) * r + j];
        row_q = padd(R, row_q, pscale(poly_var(R, p, 1), cpq));
        row_p = psub(R, row_p, pscale(poly_var(R, q, 1), cpq));
      }
  }
  return laurent_matrix_from_polys(R, n, r, entries);
}

LaurentMatrix resonance_matrix(const CupStructure& c, Order ord) {
  return resonance_matrix(c, resonance_ring(c, ord));
}

JumpingLocus resonance_ideal(const CupStructure& c, int k, Order ord) {
  LaurentMatrix M = resonance_matrix(c, ord);
  JumpingLocus L;
  L.kind = LocusKind::resonance;
  L.k = k;
  L.ideal = minors_ideal(M, c.n - k);
  L.origin_included = k <= c.n;
  return L;
}

}  // namespace jumploci
