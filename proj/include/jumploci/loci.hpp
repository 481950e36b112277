#pragma once

#include <string>

#include "jumploci/groebner.hpp"

namespace jumploci {

enum class LocusKind { characteristic, resonance, tangent_cone };

std::string locus_kind_str(LocusKind k);

// A jump locus at depth k. The ideal never governs the distinguished point
// (identity of the torus, origin of H^1): origin_included carries that
// membership separately. For characteristic kind it reports whether the
// identity satisfies the defining dimension bound (b1 >= k); for resonance
// kind it is k <= n; tangent cones inherit the flag from their source.
struct JumpingLocus {
  LocusKind kind = LocusKind::resonance;
  int k = 0;
  Ideal ideal;
  bool origin_included = false;
};

}  // namespace jumploci
