#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jumploci/isotropy.hpp"
#include "jumploci/loci.hpp"
#include "jumploci/presentation.hpp"
#include "jumploci/subspace.hpp"

namespace jumploci {

enum class Verdict { pass, fail, not_applicable };

std::string verdict_str(Verdict v);

// Candidate component as supplied; the isotropy class is computed, never
// trusted from the file.
struct ComponentSpec {
  Subspace space;
  std::optional<int> declared_p;
};

struct Component {
  Subspace space;
  IsotropyClass cls = IsotropyClass::p0;
};

// File format: "ambient n" then one line per component,
// "comp p=<0|1|?> basis: v1; v2; ..." with rational vector entries separated
// by whitespace. Zero-dimensional components are rejected.
std::vector<ComponentSpec> parse_component_file(const std::string& text);

std::vector<Component> classify_components(const std::vector<ComponentSpec>& specs,
                                           const CupStructure& c,
                                           std::vector<std::string>* notes = nullptr);

struct PositionResult {
  Verdict isotropicity = Verdict::not_applicable;
  Verdict dim_bound = Verdict::not_applicable;
  Verdict genericity = Verdict::not_applicable;
  // Pairs (i, j) with nonzero intersection, by component index.
  std::vector<std::pair<int, int>> bad_pairs;
};

// Isotropicity: every component is p0 of dim >= 2 or p1 of dim >= 4.
// Genericity: pairwise intersections are {0}.
PositionResult position_check(const std::vector<Component>& comps, const CupStructure& c);

struct CoverageResult {
  Verdict verdict = Verdict::not_applicable;
  std::string reason;
};

// (a) every subspace lies inside Z(L.ideal), by parametrized substitution;
// (b) Z(L.ideal) is inside the union (with the origin when L includes it);
// (c) no subspace contains another.
CoverageResult component_cover_verify(const std::vector<Subspace>& comps, const JumpingLocus& L,
                                      const Budget& budget = {});

struct FiltrationResult {
  Verdict verdict = Verdict::not_applicable;
  int first_failed_k = 0;
  int kmax = 0;
};

// Depth filtration: for each 1 <= k <= kmax the depth-k resonance variety
// must equal the union of the components of dimension > k + p, p per the
// computed class (p = 0 for components that classify neither), with the
// origin alone when no component qualifies.
FiltrationResult filtration_check(const std::vector<Component>& comps, const CupStructure& c,
                                  int kmax, const Budget& budget = {});

struct ObstructionReport {
  Verdict coverage = Verdict::not_applicable;
  Verdict isotropicity = Verdict::not_applicable;
  Verdict dim_bound = Verdict::not_applicable;
  Verdict genericity = Verdict::not_applicable;
  Verdict filtration = Verdict::not_applicable;
  Verdict tangent_cone = Verdict::not_applicable;
  bool free_quotient = false;
  bool free_hint = false;
  std::vector<std::string> component_classes;
  int filtration_failed_k = 0;
  std::vector<std::string> notes;
  std::string overall;
  int exit_code = 0;
};

// Truth table for the overall verdict:
//   tangent cone fail                       -> "1-formality obstructed", exit 2
//   else coverage fail                      -> "inconclusive", exit 3
//   else any position or filtration fail    -> "quasi-Kahler obstructed (assuming 1-formal)", exit 2
//   else                                    -> "consistent", exit 0
ObstructionReport obstruction_battery(const CupStructure& cup,
                                      const std::vector<ComponentSpec>& specs, int kmax,
                                      const std::optional<GroupPresentation>& pres,
                                      const Budget& budget = {});

}  // namespace jumploci
