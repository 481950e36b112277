#pragma once

#include "jumploci/abelianize.hpp"
#include "jumploci/magnus.hpp"
#include "jumploci/obstructions.hpp"

namespace jumploci {

struct FormalityReport {
  int kmax = 0;
  std::vector<Verdict> per_k;  // index k-1
  bool obstructed = false;
  std::string verdict;  // "not 1-formal" or "consistent with 1-formality"
};

// Tangent cone test: for each 1 <= k <= kmax the cone of the depth-k
// characteristic variety at the identity must equal the depth-k resonance
// variety. Any failure is conclusive; all passes are not a proof.
// The cup structure arity must equal b1. kmax <= 0 selects b1.
FormalityReport formality_test(const GroupPresentation& p, const CupStructure& c, int kmax = 0,
                               const Budget& budget = {});
// Derives the cup structure from the presentation (commutator relators only).
FormalityReport formality_test(const GroupPresentation& p, int kmax = 0,
                               const Budget& budget = {});

// True iff the depth-1 resonance variety strictly contains {0}. Under the
// quasi-Kahler and 1-formal hypotheses this detects a free quotient of rank
// at least 2.
bool free_quotient_test(const CupStructure& c, const Budget& budget = {});

// True when every relator is a commutator relator and the cup map vanishes:
// if such a group is 1-formal it is free.
bool free_group_hint(const GroupPresentation& p);

}  // namespace jumploci
