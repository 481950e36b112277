#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jumploci/artin.hpp"
#include "jumploci/obstructions.hpp"
#include "jumploci/resonance.hpp"
#include "testutil.hpp"

using namespace jumploci;

namespace {

const char* kTwoPlanes =
    "ambient 4\n"
    "comp p=? basis: 1 0 0 0; 0 1 0 0; 0 0 1 0\n"
    "comp p=? basis: 1 0 0 0; 0 1 0 0; 0 0 1 -2\n";

Subspace axis(int n, int i) {
  QMat v(1, QVec(n, Q(0)));
  v[0][i] = Q(1);
  return make_subspace(n, v);
}

Subspace full_space(int n) {
  QMat v(n, QVec(n, Q(0)));
  for (int i = 0; i < n; ++i) v[i][i] = Q(1);
  return make_subspace(n, v);
}

Subspace coord_plane(int n, int i, int j) {
  QMat v(2, QVec(n, Q(0)));
  v[0][i] = Q(1);
  v[1][j] = Q(1);
  return make_subspace(n, v);
}

}  // namespace

TEST_CASE("component file parsing") {
  auto specs = parse_component_file(kTwoPlanes);
  REQUIRE(specs.size() == 2);
  CHECK(specs[0].space.dim() == 3);
  CHECK(specs[1].space.dim() == 3);
  CHECK_FALSE(specs[0].declared_p.has_value());
  CHECK(subspace_equal(subspace_intersect(specs[0].space, specs[1].space),
                       coord_plane(4, 0, 1)));

  auto declared = parse_component_file("ambient 2\ncomp p=1 basis: 1 0; 0 1\n");
  REQUIRE(declared.size() == 1);
  CHECK(declared[0].declared_p == 1);

  CHECK_THROWS_AS(parse_component_file("comp p=? basis: 1 0\n"), parse_error);
  CHECK_THROWS_AS(parse_component_file("ambient 2\nplane p=? basis: 1 0\n"), parse_error);
  CHECK_THROWS_AS(parse_component_file("ambient 2\ncomp p=2 basis: 1 0\n"), parse_error);
  CHECK_THROWS_AS(parse_component_file("ambient 2\ncomp p=? basis: 0 0\n"), parse_error);
  CHECK_THROWS_AS(parse_component_file("ambient 2\ncomp p=? basis: 1 0 0\n"), parse_error);
  CHECK_THROWS_AS(parse_component_file("ambient 2\ncomp p=? basis:\n"), parse_error);
  CHECK_THROWS_AS(parse_component_file(""), parse_error);
}

TEST_CASE("isotropy classification of restriction of the cup pairing") {
  CupStructure genus1 = make_cup(2, {{Q(1)}});
  CHECK(isotropy_classify(full_space(2), genus1) == IsotropyClass::p1);
  CHECK(isotropy_classify(axis(2, 0), genus1) == IsotropyClass::p0);

  CupStructure genus2 = cup_structure(corpus_presentation("surface-2"));
  CHECK(isotropy_classify(full_space(4), genus2) == IsotropyClass::p1);
  CHECK(isotropy_classify(coord_plane(4, 0, 2), genus2) == IsotropyClass::p0);
  // e1, e2 pair under e12 + e34 but the form on the plane degenerates nowhere
  CHECK(isotropy_classify(coord_plane(4, 0, 1), genus2) == IsotropyClass::p1);

  CupStructure zc = cup_structure(corpus_presentation("ziegler-2134"));
  auto specs = parse_component_file(kTwoPlanes);
  CHECK(isotropy_classify(specs[0].space, zc) == IsotropyClass::neither);
  CHECK(isotropy_classify(specs[1].space, zc) == IsotropyClass::neither);

  CupStructure hc = cup_structure(corpus_presentation("heisenberg"));
  CHECK(isotropy_classify(full_space(2), hc) == IsotropyClass::zero_map_ambient);

  CHECK(isotropy_p(IsotropyClass::p0) == 0);
  CHECK(isotropy_p(IsotropyClass::p1) == 1);
  CHECK(isotropy_p(IsotropyClass::neither) == 0);
  CHECK(isotropy_p(IsotropyClass::zero_map_ambient) == 0);
  CHECK(isotropy_str(IsotropyClass::neither) == "neither");

  CHECK_THROWS_AS(isotropy_classify(axis(3, 0), genus1), input_error);

  // a p1 classification forces a symplectic, hence even-dimensional, subspace
  testutil::Rng rng(40);
  for (int c = 0; c < 50; ++c) {
    QMat vecs;
    int d = rng.rint(1, 4);
    for (int i = 0; i < d; ++i) {
      QVec v(4);
      for (int j = 0; j < 4; ++j) v[j] = Q(static_cast<long>(rng.rint(-2, 2)));
      vecs.push_back(v);
    }
    Subspace V = make_subspace(4, vecs);
    if (V.dim() == 0) continue;
    if (isotropy_classify(V, genus2) == IsotropyClass::p1) CHECK(V.dim() % 2 == 0);
  }
}

TEST_CASE("position check: isotropicity, dimension bound, genericity") {
  CupStructure zc = cup_structure(corpus_presentation("ziegler-2134"));
  auto comps = classify_components(parse_component_file(kTwoPlanes), zc);
  PositionResult pos = position_check(comps, zc);
  CHECK(pos.isotropicity == Verdict::fail);
  CHECK(pos.dim_bound == Verdict::not_applicable);
  CHECK(pos.genericity == Verdict::fail);
  REQUIRE(pos.bad_pairs.size() == 1);
  CHECK(pos.bad_pairs[0] == std::pair<int, int>(0, 1));

  CupStructure zero4 = make_cup(4, {});
  std::vector<Component> planes = {{coord_plane(4, 0, 1), IsotropyClass::zero_map_ambient},
                                   {coord_plane(4, 2, 3), IsotropyClass::zero_map_ambient}};
  PositionResult ok = position_check(planes, zero4);
  CHECK(ok.isotropicity == Verdict::pass);
  CHECK(ok.dim_bound == Verdict::pass);
  CHECK(ok.genericity == Verdict::pass);
  CHECK(ok.bad_pairs.empty());

  // a line is too small to be p0 of dimension >= 2
  std::vector<Component> line = {{axis(4, 0), IsotropyClass::zero_map_ambient}};
  PositionResult small = position_check(line, zero4);
  CHECK(small.isotropicity == Verdict::fail);
  CHECK(small.dim_bound == Verdict::fail);

  Graph c5 = testutil::cycle_graph(5);
  auto rcomps = raag_resonance_components(c5);
  REQUIRE(rcomps.size() == 5);
  CupStructure cc = cup_structure(raag_presentation(c5));
  PositionResult cpos = position_check(rcomps, cc);
  CHECK(cpos.isotropicity == Verdict::fail);
  CHECK(cpos.genericity == Verdict::fail);
}

TEST_CASE("coverage verification of a component list against a locus") {
  CupStructure zc = cup_structure(corpus_presentation("ziegler-2134"));
  JumpingLocus R1 = resonance_ideal(zc, 1);
  auto specs = parse_component_file(kTwoPlanes);
  std::vector<Subspace> both = {specs[0].space, specs[1].space};
  CHECK(component_cover_verify(both, R1).verdict == Verdict::pass);

  CoverageResult missing = component_cover_verify({specs[0].space}, R1);
  CHECK(missing.verdict == Verdict::fail);
  CHECK(missing.reason == "variety is not covered by the listed components");

  Ring R = make_ring("z", 2);
  JumpingLocus axes;
  axes.ideal = make_ideal(R, {parse_poly(R, "z1*z2")});
  axes.origin_included = true;
  CHECK(component_cover_verify({axis(2, 0), axis(2, 1)}, axes).verdict == Verdict::pass);
  CHECK(component_cover_verify({axis(2, 1)}, axes).verdict == Verdict::fail);

  JumpingLocus line;
  line.ideal = make_ideal(R, {parse_poly(R, "z1")});
  line.origin_included = true;
  CoverageResult outside = component_cover_verify({axis(2, 0)}, line);
  CHECK(outside.verdict == Verdict::fail);
  CHECK(outside.reason == "component 1 is not inside the variety");

  JumpingLocus everything;
  everything.ideal = make_ideal(R, {});
  everything.origin_included = true;
  CoverageResult redundant = component_cover_verify({axis(2, 0), full_space(2)}, everything);
  CHECK(redundant.verdict == Verdict::fail);
  CHECK(redundant.reason == "component 1 is contained in component 2");

  CHECK_THROWS_AS(component_cover_verify({axis(3, 0)}, line), input_error);
}

TEST_CASE("depth filtration against qualifying components") {
  {
    CupStructure zc = cup_structure(corpus_presentation("ziegler-2134"));
    auto comps = classify_components(parse_component_file(kTwoPlanes), zc);
    FiltrationResult res = filtration_check(comps, zc, 2);
    CHECK(res.verdict == Verdict::fail);
    CHECK(res.first_failed_k == 2);
    CHECK(res.kmax == 2);
  }
  {
    CupStructure zero2 = make_cup(2, {});
    std::vector<Component> comp = {{full_space(2), IsotropyClass::zero_map_ambient}};
    FiltrationResult res = filtration_check(comp, zero2, 2);
    CHECK(res.verdict == Verdict::pass);
    CHECK(res.first_failed_k == 0);
  }
  {
    CupStructure genus2 = cup_structure(corpus_presentation("surface-2"));
    std::vector<Component> comp = {{full_space(4), IsotropyClass::p1}};
    FiltrationResult res = filtration_check(comp, genus2, 4);
    CHECK(res.verdict == Verdict::pass);
    CHECK(res.kmax == 4);
  }
}

TEST_CASE("obstruction battery: formality failure dominates") {
  GroupPresentation h = corpus_presentation("heisenberg");
  CupStructure hc = cup_structure(h);
  std::vector<ComponentSpec> specs = {{full_space(2), std::nullopt}};
  ObstructionReport rep = obstruction_battery(hc, specs, 0, h);
  CHECK(rep.tangent_cone == Verdict::fail);
  CHECK(rep.overall == "1-formality obstructed");
  CHECK(rep.exit_code == 2);
  CHECK(rep.coverage == Verdict::pass);
  CHECK(rep.free_quotient);
  CHECK(rep.free_hint);
  REQUIRE(rep.component_classes.size() == 1);
  CHECK(rep.component_classes[0] == "zero-map-ambient");
}

TEST_CASE("obstruction battery: a bad cover is inconclusive") {
  CupStructure pc = cup_structure(corpus_presentation("p3-raag"));
  std::vector<ComponentSpec> specs = {{axis(3, 0), std::nullopt}};
  ObstructionReport rep = obstruction_battery(pc, specs, 0, std::nullopt);
  CHECK(rep.coverage == Verdict::fail);
  CHECK(rep.overall == "inconclusive");
  CHECK(rep.exit_code == 3);
  CHECK(rep.tangent_cone == Verdict::not_applicable);
  CHECK(rep.filtration == Verdict::not_applicable);
  bool skipped_note = false;
  for (const auto& n : rep.notes)
    if (n.find("filtration: skipped") == 0) skipped_note = true;
  CHECK(skipped_note);
}

TEST_CASE("obstruction battery: position failures under a verified cover") {
  CupStructure zc = cup_structure(corpus_presentation("ziegler-2134"));
  auto specs = parse_component_file(kTwoPlanes);
  ObstructionReport rep = obstruction_battery(zc, specs, 2, std::nullopt);
  CHECK(rep.coverage == Verdict::pass);
  CHECK(rep.isotropicity == Verdict::fail);
  CHECK(rep.genericity == Verdict::fail);
  CHECK(rep.filtration == Verdict::fail);
  CHECK(rep.filtration_failed_k == 2);
  CHECK(rep.tangent_cone == Verdict::not_applicable);
  CHECK(rep.overall == "quasi-Kähler obstructed (assuming 1-formal)");
  CHECK(rep.exit_code == 2);
  REQUIRE(rep.component_classes.size() == 2);
  CHECK(rep.component_classes[0] == "neither");
  CHECK(rep.component_classes[1] == "neither");
  bool gen_note = false, filt_note = false;
  for (const auto& n : rep.notes) {
    if (n == "genericity: components 1 and 2 have nonzero intersection") gen_note = true;
    if (n == "filtration: depth 2 resonance does not match the qualifying components")
      filt_note = true;
  }
  CHECK(gen_note);
  CHECK(filt_note);
}

TEST_CASE("obstruction battery: consistent run") {
  GroupPresentation p3 = corpus_presentation("p3-raag");
  CupStructure pc = cup_structure(p3);
  std::vector<ComponentSpec> specs = {{coord_plane(3, 0, 2), std::nullopt}};
  ObstructionReport rep = obstruction_battery(pc, specs, 2, p3);
  CHECK(rep.coverage == Verdict::pass);
  CHECK(rep.isotropicity == Verdict::pass);
  CHECK(rep.genericity == Verdict::pass);
  CHECK(rep.filtration == Verdict::pass);
  CHECK(rep.tangent_cone == Verdict::pass);
  CHECK(rep.overall == "consistent");
  CHECK(rep.exit_code == 0);
  REQUIRE(rep.component_classes.size() == 1);
  CHECK(rep.component_classes[0] == "p0");
}

TEST_CASE("declared isotropy that contradicts the computed class is noted") {
  CupStructure zc = cup_structure(corpus_presentation("ziegler-2134"));
  auto specs = parse_component_file(kTwoPlanes);
  specs[0].declared_p = 1;
  std::vector<std::string> notes;
  auto comps = classify_components(specs, zc, &notes);
  REQUIRE(comps.size() == 2);
  REQUIRE(notes.size() == 1);
  CHECK(notes[0] == "component 1 declared p=1 but classifies as neither");
}
