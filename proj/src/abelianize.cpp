#include "jumploci/abelianize.hpp"

#include <cassert>

#include "jumploci/errors.hpp"

namespace jumploci {

AbelianizationData abelianize_presentation(const GroupPresentation& p) {
  const int s = static_cast<int>(p.gens.size());
  const int r = static_cast<int>(p.rels.size());
  // Columns of E^T are the relator exponent vectors.
  ZMat et = zmat(s, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < s; ++i) et[i][j] = word_exponent_sum(p.rels[j], i);
  SNFResult snf = smith_normal_form(et);
  AbelianizationData d;
  d.basis_change = snf.U;
  int rank = 0;
  for (int i = 0; i < s && i < r; ++i) {
    if (snf.D[i][i] == 0) break;
    ++rank;
    if (snf.D[i][i] > 1) d.torsion_orders.push_back(snf.D[i][i]);
  }
  d.snf_rank = rank;
  d.rank_b1 = s - rank;
  d.gen_free_image.resize(s);
  for (int i = 0; i < s; ++i) {
    d.gen_free_image[i].resize(d.rank_b1);
    for (int j = 0; j < d.rank_b1; ++j) d.gen_free_image[i][j] = snf.U[rank + j][i];
  }
  return d;
}

std::vector<Z> ab_word(const AbelianizationData& d, const Word& w) {
  std::vector<Z> acc(d.rank_b1, Z(0));
  for (const Syllable& s : w)
    for (int j = 0; j < d.rank_b1; ++j)
      acc[j] += Z(s.exp) * d.gen_free_image[s.gen][j];
  return acc;
}

Ring character_ring(const AbelianizationData& d, Order ord) {
  return make_ring("t", d.rank_b1, ord);
}

static Mono to_mono(const std::vector<Z>& v) {
  Mono m(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    assert(v[i].fits_sint_p());
    m[i] = static_cast<int>(v[i].get_si());
  }
  return m;
}

LaurentEntry ab_group_ring(const Ring& R, const AbelianizationData& d, const GroupRingElt& e) {
  LaurentEntry acc = laurent_zero(R);
  for (const auto& [w, c] : e) {
    LaurentEntry term =
        laurent_normalize(R, to_mono(ab_word(d, w)), poly_const(R, Q(static_cast<long>(c))));
    acc = laurent_add(R, acc, term);
  }
  return acc;
}

LaurentMatrix abelianized_alexander_matrix(const GroupPresentation& p,
                                           const AbelianizationData& d, Order ord) {
  if (d.rank_b1 == 0) throw input_error("trivial character torus");
  const int s = static_cast<int>(p.gens.size());
  const int r = static_cast<int>(p.rels.size());
  Ring R = character_ring(d, ord);
  LaurentMatrix M = laurent_matrix(R, r, s);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < s; ++i)
      M.at(j, i) = ab_group_ring(R, d, fox_derivative(p.rels[j], i));
  return M;
}

LaurentMatrix abelianized_alexander_matrix(const GroupPresentation& p, Order ord) {
  return abelianized_alexander_matrix(p, abelianize_presentation(p), ord);
}

}  // namespace jumploci
