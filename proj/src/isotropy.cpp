#include "jumploci/isotropy.hpp"

#include "jumploci/errors.hpp"

namespace jumploci {

std::string isotropy_str(IsotropyClass c) {
  switch (c) {
    case IsotropyClass::p0: return "p0";
    case IsotropyClass::p1: return "p1";
    case IsotropyClass::neither: return "neither";
    case IsotropyClass::zero_map_ambient: return "zero-map-ambient";
  }
  return "?";
}

int isotropy_p(IsotropyClass c) { return c == IsotropyClass::p1 ? 1 : 0; }

IsotropyClass isotropy_classify(const Subspace& V, const CupStructure& c) {
  if (V.n != c.n) throw input_error("component ambient does not match cup structure");
  if (V.dim() == 0) throw input_error("zero-dimensional component");
  if (c.classes.empty()) return IsotropyClass::zero_map_ambient;
  const int d = V.dim();
  const int r = static_cast<int>(c.classes.size());
  const int rows = pair_count(d);
  if (rows == 0) return IsotropyClass::p0;
  // Pairing of each basis wedge v_i ^ v_j against each relation class.
  QMat phi(rows, QVec(r, Q(0)));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const QVec& vi = V.basis[i];
      const QVec& vj = V.basis[j];
      for (int k = 0; k < r; ++k) {
        Q acc(0);
        for (int p = 0; p < c.n; ++p)
          for (int q = p + 1; q < c.n; ++q) {
            const Q& y = c.classes[k][pair_index(c.n, p, q)];
            if (y != 0) acc += y * (vi[p] * vj[q] - vi[q] * vj[p]);
          }
        phi[pair_index(d, i, j)][k] = acc;
      }
    }
  int rank = static_cast<int>(rref(phi).size());
  if (rank == 0) return IsotropyClass::p0;
  if (rank > 1) return IsotropyClass::neither;
  // One-dimensional image: any nonzero column carries the skew form on V.
  QVec sigma;
  for (int k = 0; k < r && sigma.empty(); ++k)
    for (int i = 0; i < rows; ++i)
      if (phi[i][k] != 0) {
        sigma.resize(rows);
        for (int t = 0; t < rows; ++t) sigma[t] = phi[t][k];
        break;
      }
  QMat S(d, QVec(d, Q(0)));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      S[i][j] = sigma[pair_index(d, i, j)];
      S[j][i] = -S[i][j];
    }
  return static_cast<int>(rref(S).size()) == d ? IsotropyClass::p1 : IsotropyClass::neither;
}

}  // namespace jumploci
