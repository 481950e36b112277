#pragma once

#include "jumploci/groebner.hpp"
#include "jumploci/laurent.hpp"

namespace jumploci {

// Determinant of the submatrix on the given rows/cols (equal sizes).
LaurentEntry laurent_minor(const LaurentMatrix& M, const std::vector<int>& rows,
                           const std::vector<int>& cols);

// Ideal of all size x size minors, each multiplied by the least monomial that
// lands it in the polynomial ring (negative Laurent exponents cleared, a unit
// adjustment on the torus; positive monomial content is kept so affine zero
// sets are preserved). size <= 0 yields the unit ideal; size larger than
// either dimension yields the zero ideal. Generators are deduplicated and
// ordered by (row subset, column subset) lexicographically, first occurrence.
Ideal minors_ideal(const LaurentMatrix& M, int size);

// Fitting ideal F_k of the module presented by M, rows = presentation target:
// F_k = minors_ideal(M, rows - k).
Ideal fitting_ideal(const LaurentMatrix& M, int k);

}  // namespace jumploci
