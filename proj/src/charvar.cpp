#include "jumploci/charvar.hpp"

#include <cassert>

#include "jumploci/errors.hpp"
#include "jumploci/minors.hpp"

namespace jumploci {

JumpingLocus charvar_ideal(const GroupPresentation& p, const AbelianizationData& d, int k,
                           Order ord) {
  const int s = static_cast<int>(p.gens.size());
  LaurentMatrix A = abelianized_alexander_matrix(p, d, ord);
  JumpingLocus L;
  L.kind = LocusKind::characteristic;
  L.k = k;
  L.ideal = minors_ideal(A, s - k);
  L.origin_included = d.rank_b1 >= k;
  return L;
}

JumpingLocus charvar_ideal(const GroupPresentation& p, int k, Order ord) {
  return charvar_ideal(p, abelianize_presentation(p), k, ord);
}

static Q q_int_pow(const Q& base, const Z& e) {
  assert(e.fits_slong_p());
  long n = e.get_si();
  Q b = n < 0 ? Q(1) / base : base;
  Q out(1);
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out *= b;
  return out;
}

std::vector<Q> character_values(const AbelianizationData& d, const std::vector<Q>& point) {
  assert(static_cast<int>(point.size()) == d.rank_b1);
  std::vector<Q> vals;
  for (const auto& image : d.gen_free_image) {
    Q v(1);
    for (int j = 0; j < d.rank_b1; ++j) v *= q_int_pow(point[j], image[j]);
    vals.push_back(v);
  }
  return vals;
}

int charvar_point_test(const GroupPresentation& p, const std::vector<Q>& point) {
  AbelianizationData d = abelianize_presentation(p);
  if (d.rank_b1 == 0) throw input_error("trivial character torus");
  if (static_cast<int>(point.size()) != d.rank_b1)
    throw input_error("point arity does not match b1");
  for (const Q& x : point)
    if (x == 0) throw input_error("character coordinates must be nonzero");
  const int s = static_cast<int>(p.gens.size());
  LaurentMatrix A = abelianized_alexander_matrix(p, d);
  int rank_d2 = rank_q(laurent_eval_matrix(A, point));
  int rank_d1 = 0;
  for (const Q& v : character_values(d, point))
    if (v != 1) { rank_d1 = 1; break; }
  return s - rank_d1 - rank_d2;
}

}  // namespace jumploci
