#pragma once

#include <vector>

#include "jumploci/numtypes.hpp"
#include "jumploci/polynomial.hpp"

namespace jumploci {

using QVec = std::vector<Q>;
using QMat = std::vector<std::vector<Q>>;

// Linear subspace of Q^n in canonical form: basis rows are the nonzero rows
// of the reduced row echelon form, so equal subspaces compare equal.
struct Subspace {
  int n = 0;
  QMat basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

QMat rref(QMat m);

Subspace make_subspace(int n, QMat vectors);
bool subspace_equal(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& s, const QVec& v);
bool subspace_leq(const Subspace& a, const Subspace& b);  // a subset of b
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Canonical basis of { w : v . w = 0 for all v in s }: the linear forms
// cutting out s.
QMat annihilator(const Subspace& s);

// The forms from annihilator() as degree-1 polynomials of R (R.n == s.n).
std::vector<Polynomial> defining_forms(const Ring& R, const Subspace& s);

}  // namespace jumploci
