#pragma once

#include "jumploci/presentation.hpp"

namespace jumploci {

// Generators of p1 first, then p2; on any name clash every p1 name gets an
// "a." prefix and every p2 name a "b." prefix.
GroupPresentation free_product(const GroupPresentation& p1, const GroupPresentation& p2);

// free_product plus all mixed commutators (x, y), x from p1, y from p2,
// ordered x-major.
GroupPresentation direct_product(const GroupPresentation& p1, const GroupPresentation& p2);

}  // namespace jumploci
