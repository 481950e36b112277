#pragma once

#include "jumploci/laurent.hpp"
#include "jumploci/loci.hpp"
#include "jumploci/magnus.hpp"

namespace jumploci {

// n x r matrix over z_1..z_n; column j is the contraction of relation class
// j by z: e_p^e_q contributes z_p on row q and -z_q on row p.
LaurentMatrix resonance_matrix(const CupStructure& c, const Ring& R);
LaurentMatrix resonance_matrix(const CupStructure& c, Order ord = Order::grevlex);

Ring resonance_ring(const CupStructure& c, Order ord = Order::grevlex);  // z1..zn

// Ideal of (n-k)-minors; the locus is its zero set, with the origin adjoined
// whenever k <= n.
JumpingLocus resonance_ideal(const CupStructure& c, int k, Order ord = Order::grevlex);

}  // namespace jumploci
