#pragma once

#include "jumploci/idealops.hpp"
#include "jumploci/loci.hpp"

namespace jumploci {

// Translate the germ at the identity to the origin (t_i = 1 + u_i) and take
// initial forms. The result lives in u_1..u_n with the source's order; the
// origin flag carries over (the cone of an isolated identity point is {0}).
JumpingLocus tangent_cone_at_identity(const JumpingLocus& L, const Budget& budget = {});

}  // namespace jumploci
