#pragma once

#include <vector>

#include "jumploci/numtypes.hpp"

namespace jumploci {

using ZMat = std::vector<std::vector<Z>>;

ZMat zmat(int rows, int cols);
ZMat zmat_identity(int n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
Z zmat_det(ZMat a);  // Bareiss, square

// U * A * V = D with U, V unimodular and D diagonal, each diagonal entry
// nonnegative and dividing the next.
struct SNFResult {
  ZMat U, D, V;
};

SNFResult smith_normal_form(const ZMat& A);

}  // namespace jumploci
