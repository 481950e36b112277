#include "jumploci/formality.hpp"

#include <cassert>

#include "jumploci/charvar.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/idealops.hpp"
#include "jumploci/resonance.hpp"
#include "jumploci/tangent.hpp"

namespace jumploci {

FormalityReport formality_test(const GroupPresentation& p, const CupStructure& c, int kmax,
                               const Budget& budget) {
  AbelianizationData d = abelianize_presentation(p);
  if (d.rank_b1 == 0) throw input_error("trivial character torus");
  if (c.n != d.rank_b1) throw input_error("cup structure arity must match b1");
  if (kmax <= 0) kmax = d.rank_b1;
  FormalityReport rep;
  rep.kmax = kmax;
  for (int k = 1; k <= kmax; ++k) {
    JumpingLocus V = charvar_ideal(p, d, k);
    JumpingLocus T = tangent_cone_at_identity(V, budget);
    JumpingLocus R = resonance_ideal(c, k);
    assert(T.origin_included == R.origin_included);
    // Same arity and order; compare in the cone's ring.
    Ideal Rm = make_ideal(T.ideal.ring, R.ideal.gens);
    Ideal lhs = T.origin_included ? with_origin_adjoined(T.ideal) : T.ideal;
    Ideal rhs = R.origin_included ? with_origin_adjoined(Rm) : Rm;
    bool ok = variety_equal(lhs, rhs, budget);
    rep.per_k.push_back(ok ? Verdict::pass : Verdict::fail);
    if (!ok) rep.obstructed = true;
  }
  rep.verdict = rep.obstructed ? "not 1-formal" : "consistent with 1-formality";
  return rep;
}

FormalityReport formality_test(const GroupPresentation& p, int kmax, const Budget& budget) {
  return formality_test(p, cup_structure(p), kmax, budget);
}

bool free_quotient_test(const CupStructure& c, const Budget& budget) {
  JumpingLocus R1 = resonance_ideal(c, 1);
  for (int i = 0; i < c.n; ++i)
    if (!radical_member(poly_var(R1.ideal.ring, i, 1), R1.ideal, budget)) return true;
  return false;
}

bool free_group_hint(const GroupPresentation& p) {
  try {
    return cup_structure(p).classes.empty();
  } catch (const unsupported_presentation&) {
    return false;
  }
}

}  // namespace jumploci
