#pragma once

#include "jumploci/laurent.hpp"
#include "jumploci/loci.hpp"
#include "jumploci/magnus.hpp"

namespace jumploci {

// Contraction by z as a matrix X <- wedge^2 X: n rows, C(n,2) columns; the
// column for e_p^e_q has z_p on row q and -z_q on row p.
LaurentMatrix contraction_matrix(const Ring& R, int n);

// Second contraction, wedge^2 X <- wedge^3 X: the column for e_p^e_q^e_r has
// z_p on row (q,r), -z_q on row (p,r), z_r on row (p,q). Composition with
// contraction_matrix is identically zero.
LaurentMatrix triple_contraction_matrix(const Ring& R, int n);

// Presentation matrix of the linearized Alexander module: rows wedge^2 X,
// columns wedge^3 X followed by one constant column per relation class.
LaurentMatrix infinitesimal_alexander(const CupStructure& c, Order ord = Order::grevlex);

// Level-k locus ideal: minors of size C(n,2) - (k-1). Away from the origin
// its zero set matches the resonance locus at depth k.
Ideal infinitesimal_locus_ideal(const CupStructure& c, int k, Order ord = Order::grevlex);

}  // namespace jumploci
