#include "jumploci/tangent.hpp"

namespace jumploci {

JumpingLocus tangent_cone_at_identity(const JumpingLocus& L, const Budget& budget) {
  const Ring& R = L.ideal.ring;
  Ring U = make_ring("u", R.n, R.ord);
  std::vector<Polynomial> images;
  for (int i = 0; i < U.n; ++i)
    images.push_back(padd(U, poly_one(U), poly_var(U, i, 1)));
  std::vector<Polynomial> translated;
  for (const Polynomial& g : L.ideal.gens)
    translated.push_back(poly_substitute(R, g, U, images));
  JumpingLocus out;
  out.kind = LocusKind::tangent_cone;
  out.k = L.k;
  out.ideal = tangent_cone_ideal(make_ideal(U, std::move(translated)), budget);
  out.origin_included = L.origin_included;
  return out;
}

}  // namespace jumploci
