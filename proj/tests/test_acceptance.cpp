// Acceptance runner: one timed pass/fail line per criterion, nonzero exit on
// any failure. Criteria with a wall-clock limit fail when they exceed it.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "jumploci/abelianize.hpp"
#include "jumploci/artin.hpp"
#include "jumploci/charvar.hpp"
#include "jumploci/formality.hpp"
#include "jumploci/obstructions.hpp"
#include "jumploci/resonance.hpp"
#include "jumploci/tangent.hpp"
#include "testutil.hpp"

using namespace jumploci;

namespace {

int g_failures = 0;

template <typename F>
void criterion(int num, const char* label, double limit_s, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = limit_s <= 0.0 || dt < limit_s;
  bool pass = ok && in_time;
  if (!pass) ++g_failures;
  std::printf("criterion %d (%s): %s [%.2fs%s]%s%s\n", num, label, pass ? "pass" : "FAIL", dt,
              limit_s > 0.0 && !in_time ? ", over limit" : "", err.empty() ? "" : " ",
              err.c_str());
  std::fflush(stdout);
}

Subspace span_of(int n, const QMat& rows) { return make_subspace(n, rows); }

bool arrangement_group() {
  CupStructure c = cup_structure(corpus_presentation("ziegler-2134"));
  JumpingLocus R1 = resonance_ideal(c, 1);
  const Ring& R = R1.ideal.ring;
  auto zp = [&](const std::string& s) { return parse_poly(R, s); };

  Ideal planes = ideal_product(make_ideal(R, {zp("z4")}), make_ideal(R, {zp("2*z3 + z4")}));
  bool ok = variety_equal(R1.ideal, planes);

  Subspace V1 = span_of(4, {{Q(1), Q(0), Q(0), Q(0)},
                            {Q(0), Q(1), Q(0), Q(0)},
                            {Q(0), Q(0), Q(1), Q(0)}});
  Subspace V2 = span_of(4, {{Q(1), Q(0), Q(0), Q(0)},
                            {Q(0), Q(1), Q(0), Q(0)},
                            {Q(0), Q(0), Q(1), Q(-2)}});
  ok = ok && isotropy_classify(V1, c) == IsotropyClass::neither;
  ok = ok && isotropy_classify(V2, c) == IsotropyClass::neither;

  std::vector<Component> comps = {{V1, IsotropyClass::neither}, {V2, IsotropyClass::neither}};
  PositionResult pos = position_check(comps, c);
  ok = ok && pos.isotropicity == Verdict::fail && pos.genericity == Verdict::fail;
  Subspace meet = subspace_intersect(V1, V2);
  ok = ok && subspace_equal(meet, span_of(4, {{Q(1), Q(0), Q(0), Q(0)},
                                              {Q(0), Q(1), Q(0), Q(0)}}));

  JumpingLocus R2 = resonance_ideal(c, 2);
  Ideal axis1 = make_ideal(R, {zp("z2"), zp("z3"), zp("z4")});
  Ideal axis2 = make_ideal(R, {zp("z1"), zp("z3"), zp("z4")});
  ok = ok && variety_equal(R2.ideal, ideal_product(axis1, axis2));

  FiltrationResult filt = filtration_check(comps, c, 2);
  ok = ok && filt.verdict == Verdict::fail;
  return ok;
}

bool nilpotent_group() {
  GroupPresentation p = corpus_presentation("heisenberg");
  CupStructure c = cup_structure(p);

  JumpingLocus R1 = resonance_ideal(c, 1);
  bool ok = ideal_is_zero(R1.ideal);  // R_1 is all of C^2
  JumpingLocus R2 = resonance_ideal(c, 2);
  ok = ok && ideal_is_unit(R2.ideal) && R2.origin_included;  // R_2 = {0}

  JumpingLocus V1 = charvar_ideal(p, 1);
  const Ring& Rt = V1.ideal.ring;
  Ideal identity_only =
      make_ideal(Rt, {parse_poly(Rt, "t1 - 1"), parse_poly(Rt, "t2 - 1")});
  ok = ok && variety_equal(V1.ideal, identity_only) && V1.origin_included;

  JumpingLocus T = tangent_cone_at_identity(V1);
  // the cone is {0}, a proper subset of R_1 = C^2
  ok = ok && variety_equal(T.ideal, irrelevant_ideal(T.ideal.ring));
  ok = ok && T.origin_included;

  FormalityReport fr = formality_test(p, 1);
  ok = ok && fr.obstructed && fr.verdict == "not 1-formal";
  return ok;
}

bool knot_group() {
  GroupPresentation p = corpus_presentation("trefoil");
  AbelianizationData d = abelianize_presentation(p);
  LaurentMatrix A = abelianized_alexander_matrix(p, d);
  Polynomial delta = parse_poly(A.ring, "t1^2 - t1 + 1");
  bool ok = A.rows == 1 && A.cols == 2;
  for (int j = 0; j < A.cols && ok; ++j)
    ok = poly_equal(canonical_scale(A.at(0, j).num), delta);  // equal up to a unit

  JumpingLocus V1 = charvar_ideal(p, d, 1);
  JumpingLocus T = tangent_cone_at_identity(V1);
  ok = ok && ideal_is_unit(T.ideal) && T.origin_included;  // cone = {0}

  CupStructure c = corpus_cup("trefoil-cup");
  JumpingLocus R1 = resonance_ideal(c, 1);
  ok = ok && ideal_is_unit(R1.ideal) && R1.origin_included;  // R_1 = {0} as well

  FormalityReport fr = formality_test(p, c);
  ok = ok && !fr.obstructed && fr.verdict == "consistent with 1-formality";
  return ok;
}

bool raag_coherence() {
  int good = 0;
  auto graphs = testutil::suite_graphs();
  for (const Graph& g : graphs)
    if (testutil::raag_coherent(g)) ++good;
  return good == 12 && static_cast<int>(graphs.size()) == 12;
}

bool serre_verdicts() {
  bool ok = raag_serre_verdict(testutil::path_graph(3)).quasi_kahler;
  ok = ok && !raag_serre_verdict(testutil::path_graph(4)).quasi_kahler;
  ok = ok && !raag_serre_verdict(testutil::cycle_graph(5)).quasi_kahler;
  for (int n = 1; n <= 6; ++n) {
    bool expected = n % 2 == 0;  // complete and evenly many vertices
    ok = ok && raag_kahler_verdict(testutil::complete_graph(n)).kahler == expected;
  }
  LabeledGraph braid = parse_graph_file(
      "graph braid-b4\nvertices g1 g2 g3\nedge g1 g2 3\nedge g2 g3 3\nedge g1 g3 2\n");
  MalcevVerdict mv = artin_malcev_verdict(braid);
  ok = ok && mv.pass && mv.contraction.order() == 1;
  return ok;
}

bool product_laws() {
  int good = 0;
  for (const auto& [a, b] : testutil::free_pair_names())
    if (testutil::free_pair_charvar_zero(corpus_presentation(a), corpus_presentation(b))) ++good;
  for (const auto& [a, b] : testutil::direct_pair_names())
    if (testutil::direct_pair_r1_law(corpus_presentation(a), corpus_presentation(b))) ++good;
  return good == 10;
}

bool property_suites() {
  bool ok = testutil::suite_fox_product_rule(101, 200) == 0;
  ok = ok && testutil::suite_fox_fundamental_identity(102, 200) == 0;
  ok = ok && testutil::suite_buchberger_spolys(103, 200) == 0;
  ok = ok && testutil::suite_fitting_chain(104, 200) == 0;
  ok = ok && testutil::suite_tangent_cone_props(105, 200) == 0;
  ok = ok && testutil::suite_delta_composition(106, 200) == 0;
  ok = ok && testutil::suite_nabla_res_agreement(107, 25) == 0;  // 8 groups x 25 points
  return ok;
}

bool point_probes() { return testutil::suite_point_ideal_agreement(108, 20) == 0; }

}  // namespace

int main() {
  criterion(1, "arrangement group loci and position checks", 5.0, arrangement_group);
  criterion(2, "nilpotent group cone obstruction", 5.0, nilpotent_group);
  criterion(3, "knot group polynomial and formality", 2.0, knot_group);
  criterion(4, "graph group resonance coherence, 12 graphs", 60.0, raag_coherence);
  criterion(5, "multipartite and parity verdicts", 0.0, serre_verdicts);
  criterion(6, "free and direct product laws, 10 pairs", 0.0, product_laws);
  criterion(7, "randomized property suites, 200+ cases each", 0.0, property_suites);
  criterion(8, "character depth vs ideal vanishing, 20 points per group", 0.0, point_probes);
  if (g_failures) {
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("acceptance: all 8 criteria passed\n");
  return 0;
}
