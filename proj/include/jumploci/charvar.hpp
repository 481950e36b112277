#pragma once

#include "jumploci/abelianize.hpp"
#include "jumploci/loci.hpp"

namespace jumploci {

// Ideal of (s-k)-minors of the abelianized Fox matrix, s = generator count.
// Away from the identity its torus zero set carries the depth-k jump;
// membership of the identity itself is the separate flag (b1 >= k).
// Throws input_error when b1 = 0.
JumpingLocus charvar_ideal(const GroupPresentation& p, int k, Order ord = Order::grevlex);
JumpingLocus charvar_ideal(const GroupPresentation& p, const AbelianizationData& d, int k,
                           Order ord = Order::grevlex);

// Exact twisted first Betti number at a rational character: the character is
// given by its b1 torus coordinates, all nonzero. Returns
// s - rank d1(rho) - rank d2(rho); rank d1 is 0 exactly at the identity.
int charvar_point_test(const GroupPresentation& p, const std::vector<Q>& point);

// Character value of each generator at the point, via the free-part image.
std::vector<Q> character_values(const AbelianizationData& d, const std::vector<Q>& point);

}  // namespace jumploci
