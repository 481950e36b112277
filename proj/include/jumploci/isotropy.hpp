#pragma once

#include <string>

#include "jumploci/magnus.hpp"
#include "jumploci/subspace.hpp"

namespace jumploci {

// Restriction of the cup pairing to a subspace: p0 when it vanishes, p1 when
// its image is a line and the induced skew form is non-degenerate, otherwise
// neither. zero_map_ambient flags the degenerate case of a cup structure
// with no nonzero relation classes (every subspace is trivially p0).
enum class IsotropyClass { p0, p1, neither, zero_map_ambient };

std::string isotropy_str(IsotropyClass c);
int isotropy_p(IsotropyClass c);  // the p used in dimension/filtration bounds

IsotropyClass isotropy_classify(const Subspace& V, const CupStructure& c);

}  // namespace jumploci
