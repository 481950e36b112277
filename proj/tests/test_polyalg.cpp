#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jumploci/errors.hpp"
#include "testutil.hpp"

using namespace jumploci;

namespace {

Ring R2() { return make_ring(std::vector<std::string>{"x", "y"}); }

std::vector<Q> random_point(testutil::Rng& rng, int n, bool nonzero_coords) {
  std::vector<Q> pt(n);
  for (int i = 0; i < n; ++i)
    pt[i] = Q(static_cast<long>(nonzero_coords ? rng.nonzero(4) : rng.rint(-4, 4)));
  return pt;
}

}  // namespace

TEST_CASE("polynomial canonical form and print/parse round trip") {
  Ring R = R2();
  testutil::Rng rng(11);
  for (int c = 0; c < 100; ++c) {
    Polynomial p = testutil::random_poly(rng, R, 4, 3, 5);
    for (size_t i = 0; i + 1 < p.t.size(); ++i)
      CHECK(mono_cmp(R.ord, p.t[i].m, p.t[i + 1].m) > 0);
    for (const Term& t : p.t) CHECK(sgn(t.c) != 0);
    CHECK(poly_equal(parse_poly(R, poly_str(R, p)), p));

    Polynomial s = canonical_scale(p);
    if (!s.is_zero()) {
      CHECK(sgn(poly_lt(s).c) > 0);
      Z g(0);
      for (const Term& t : s.t) {
        CHECK(t.c.get_den() == 1);
        g = gcd(g, t.c.get_num());
      }
      CHECK(g == 1);
    }
  }
}

TEST_CASE("groebner basis worked examples") {
  Ring R = R2();
  {
    Ideal I = make_ideal(R, {parse_poly(R, "x^2"), parse_poly(R, "x*y")});
    const auto& basis = groebner(I);
    REQUIRE(basis.size() == 2);
    CHECK(poly_equal(basis[0], parse_poly(R, "x*y")));
    CHECK(poly_equal(basis[1], parse_poly(R, "x^2")));
  }
  {
    Ideal I = make_ideal(R, {parse_poly(R, "x - 1"), parse_poly(R, "x")});
    const auto& basis = groebner(I);
    REQUIRE(basis.size() == 1);
    CHECK(poly_equal(basis[0], poly_one(R)));
    CHECK(ideal_is_unit(I));
  }
  {
    Ideal I = make_ideal(R, {parse_poly(R, "2*x^2 - 4")});
    const auto& basis = groebner(I);
    REQUIRE(basis.size() == 1);
    CHECK(poly_equal(basis[0], parse_poly(R, "x^2 - 2")));
  }
  CHECK(groebner_basis(R, {}, Budget{}).empty());
}

TEST_CASE("buchberger S-polynomials of the output basis reduce to zero") {
  CHECK(testutil::suite_buchberger_spolys(4242, 200) == 0);
}

TEST_CASE("ideal membership examples and combination oracle") {
  Ring R = R2();
  Ideal I = make_ideal(R, {parse_poly(R, "x")});
  CHECK(ideal_member(parse_poly(R, "x"), I));
  CHECK_FALSE(ideal_member(parse_poly(R, "y"), I));

  testutil::Rng rng(99);
  for (int c = 0; c < 100; ++c) {
    std::vector<Polynomial> gens;
    int k = rng.rint(1, 3);
    for (int i = 0; i < k; ++i) gens.push_back(testutil::random_poly(rng, R, 3, 2, 3));
    Ideal J = make_ideal(R, gens);
    Polynomial f = poly_zero(R);
    for (const Polynomial& g : gens)
      f = padd(R, f, pmul(R, g, testutil::random_poly(rng, R, 2, 2, 2)));
    CHECK(ideal_member(f, J));
  }
}

TEST_CASE("radical membership examples and power oracle") {
  Ring R = R2();
  CHECK(radical_member(parse_poly(R, "x"), make_ideal(R, {parse_poly(R, "x^2")})));
  CHECK(radical_member(parse_poly(R, "x + y"),
                       make_ideal(R, {parse_poly(R, "x^2"), parse_poly(R, "y^2")})));
  CHECK_FALSE(radical_member(parse_poly(R, "x"), make_ideal(R, {parse_poly(R, "y")})));

  testutil::Rng rng(123);
  for (int c = 0; c < 60; ++c) {
    std::vector<Polynomial> gens;
    int k = rng.rint(1, 2);
    for (int i = 0; i < k; ++i) gens.push_back(testutil::random_poly(rng, R, 2, 2, 3));
    Ideal J = make_ideal(R, gens);
    Polynomial f = testutil::random_poly(rng, R, 2, 2, 2);
    bool some_power_in = false;
    Polynomial fp = poly_one(R);
    for (int m = 1; m <= 6 && !some_power_in; ++m) {
      fp = pmul(R, fp, f);
      some_power_in = ideal_member(fp, J);
    }
    if (some_power_in) CHECK(radical_member(f, J));
  }
}

TEST_CASE("minors ideal conventions and the hyperplane-pair fixture") {
  Ring R = R2();
  LaurentMatrix Z0 = laurent_matrix(R, 2, 2);
  CHECK(ideal_is_zero(minors_ideal(Z0, 1)));
  CHECK(ideal_is_unit(minors_ideal(Z0, 0)));
  CHECK(ideal_is_zero(minors_ideal(Z0, 3)));

  // 4x3 contraction matrix of the classes 2 e1^e3 + e1^e4, e2^e4, e3^e4:
  // its 3-minors cut out the union of a coordinate hyperplane and a slanted
  // one, and every minor keeps its monomial factor.
  Ring Rz = make_ring("z", 4);
  auto zp = [&](const std::string& s) { return parse_poly(Rz, s); };
  std::vector<Polynomial> entries = {
      zp("-2*z3 - z4"), zp("0"),   zp("0"),    //
      zp("0"),          zp("-z4"), zp("0"),    //
      zp("2*z1"),       zp("0"),   zp("-z4"),  //
      zp("z1"),         zp("z2"),  zp("z3"),
  };
  LaurentMatrix M = laurent_matrix_from_polys(Rz, 4, 3, entries);
  Ideal I = minors_ideal(M, 3);
  REQUIRE(I.gens.size() == 4);
  CHECK(poly_equal(I.gens[0], zp("2*z3*z4^2 + z4^3")));
  CHECK(poly_equal(I.gens[1], zp("2*z3^2*z4 + z3*z4^2")));
  CHECK(poly_equal(I.gens[2], zp("2*z2*z3*z4 + z2*z4^2")));
  CHECK(poly_equal(I.gens[3], zp("2*z1*z3*z4 + z1*z4^2")));

  Ideal hyperplanes = ideal_product(make_ideal(Rz, {zp("z4")}), make_ideal(Rz, {zp("2*z3 + z4")}));
  CHECK(variety_equal(I, hyperplanes));

  // laurent_minor matches a hand determinant including its shift
  LaurentEntry m01 = laurent_minor(M, {0, 1}, {0, 1});
  CHECK(laurent_equal(m01, laurent_from_poly(Rz, zp("2*z3*z4 + z4^2"))));
}

TEST_CASE("fitting ideals: conventions, chain, block products") {
  Ring R = R2();
  LaurentMatrix F = laurent_matrix_from_polys(R, 1, 1, {parse_poly(R, "x + y^2")});
  Ideal F0 = fitting_ideal(F, 0);
  REQUIRE(F0.gens.size() == 1);
  CHECK(poly_equal(F0.gens[0], parse_poly(R, "x + y^2")));
  CHECK(ideal_is_unit(fitting_ideal(F, 1)));

  CHECK(testutil::suite_fitting_chain(555, 200) == 0);

  testutil::Rng rng(777);
  for (int c = 0; c < 50; ++c) {
    std::vector<Polynomial> ea, eb;
    for (int i = 0; i < 4; ++i) ea.push_back(testutil::random_poly(rng, R, 2, 1, 3));
    for (int i = 0; i < 4; ++i) eb.push_back(testutil::random_poly(rng, R, 2, 1, 3));
    LaurentMatrix A = laurent_matrix_from_polys(R, 2, 2, ea);
    LaurentMatrix B = laurent_matrix_from_polys(R, 2, 2, eb);
    LaurentMatrix M = laurent_matrix(R, 4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        M.at(i, j) = A.at(i, j);
        M.at(2 + i, 2 + j) = B.at(i, j);
      }
    for (int ka = 0; ka <= 2; ++ka)
      for (int kb = 0; kb <= 2; ++kb) {
        Ideal Fk = fitting_ideal(M, ka + kb);
        for (const Polynomial& ga : fitting_ideal(A, ka).gens)
          for (const Polynomial& gb : fitting_ideal(B, kb).gens)
            CHECK(ideal_member(pmul(R, ga, gb), Fk));
      }
  }
}

TEST_CASE("tangent cone ideal worked examples") {
  Ring R = R2();
  {
    Ideal T = tangent_cone_ideal(make_ideal(R, {parse_poly(R, "x + y + x*y")}));
    REQUIRE(T.gens.size() == 1);
    CHECK(poly_equal(T.gens[0], parse_poly(R, "x + y")));
  }
  {
    Ideal T = tangent_cone_ideal(make_ideal(R, {parse_poly(R, "x*y")}));
    REQUIRE(T.gens.size() == 1);
    CHECK(poly_equal(T.gens[0], parse_poly(R, "x*y")));
  }
  {
    Ring U = make_ring("u", 1);
    Ideal T = tangent_cone_ideal(make_ideal(U, {parse_poly(U, "u1^2 + u1 + 1")}));
    CHECK(ideal_is_unit(T));
  }
}

TEST_CASE("tangent cone output is homogeneous and contains initial forms") {
  CHECK(testutil::suite_tangent_cone_props(888, 200) == 0);
}

TEST_CASE("saturation by a variable") {
  Ring R = R2();
  Ideal I = make_ideal(R, {parse_poly(R, "x*y"), parse_poly(R, "x*x")});
  Ideal S = saturate_by_variable(I, 0);
  CHECK(ideal_member(parse_poly(R, "y"), S));
  CHECK(ideal_member(parse_poly(R, "x"), S));

  Ideal J = make_ideal(R, {parse_poly(R, "x*y - x")});
  Ideal SJ = saturate_by_variable(J, 0);
  CHECK(ideal_member(parse_poly(R, "y - 1"), SJ));
  CHECK_FALSE(ideal_member(parse_poly(R, "y"), SJ));
}

TEST_CASE("variety comparisons") {
  Ring R = R2();
  CHECK(variety_subset(make_ideal(R, {parse_poly(R, "x^2")}), make_ideal(R, {parse_poly(R, "x")})));
  CHECK_FALSE(
      variety_subset(make_ideal(R, {parse_poly(R, "x")}), make_ideal(R, {parse_poly(R, "y")})));
  CHECK(variety_equal(make_ideal(R, {parse_poly(R, "x^2")}), make_ideal(R, {parse_poly(R, "x")})));

  Ideal xy = make_ideal(R, {parse_poly(R, "x*y")});
  CHECK(variety_subset_union(xy, {{parse_poly(R, "x")}, {parse_poly(R, "y")}}, false));
  Ideal diff = make_ideal(R, {parse_poly(R, "x^2 - y^2")});
  CHECK_FALSE(variety_subset_union(diff, {{parse_poly(R, "x - y")}}, false));
}

TEST_CASE("subspace arithmetic and the slanted-pair intersection") {
  // span{e1,e2,e3} and span{e1,e2,e3-2e4} meet exactly in the plane x3=x4=0
  Subspace a = make_subspace(4, {{Q(1), Q(0), Q(0), Q(0)},
                                 {Q(0), Q(1), Q(0), Q(0)},
                                 {Q(0), Q(0), Q(1), Q(0)}});
  Subspace b = make_subspace(4, {{Q(1), Q(0), Q(0), Q(0)},
                                 {Q(0), Q(1), Q(0), Q(0)},
                                 {Q(0), Q(0), Q(1), Q(-2)}});
  Subspace meet = subspace_intersect(a, b);
  CHECK(meet.dim() == 2);
  CHECK(subspace_equal(
      meet, make_subspace(4, {{Q(1), Q(0), Q(0), Q(0)}, {Q(0), Q(1), Q(0), Q(0)}})));

  CHECK(subspace_equal(subspace_intersect(a, a), a));

  testutil::Rng rng(2718);
  for (int c = 0; c < 100; ++c) {
    QMat va, vb;
    int da = rng.rint(1, 3), db = rng.rint(1, 3);
    for (int i = 0; i < da; ++i) va.push_back(random_point(rng, 5, false));
    for (int i = 0; i < db; ++i) vb.push_back(random_point(rng, 5, false));
    Subspace V = make_subspace(5, va), W = make_subspace(5, vb);
    CHECK(subspace_sum(V, W).dim() + subspace_intersect(V, W).dim() == V.dim() + W.dim());
    CHECK(subspace_leq(subspace_intersect(V, W), V));
    CHECK(subspace_leq(V, subspace_sum(V, W)));
  }
}

TEST_CASE("laurent normalization and arithmetic agree with evaluation") {
  Ring R = R2();
  testutil::Rng rng(31415);
  for (int c = 0; c < 100; ++c) {
    Mono shift = {rng.rint(-2, 2), rng.rint(-2, 2)};
    LaurentEntry a = laurent_normalize(R, shift, testutil::random_poly(rng, R, 3, 2, 3));
    LaurentEntry again = laurent_normalize(R, a.shift, a.num);
    CHECK(laurent_equal(a, again));
    if (!a.is_zero()) {
      Mono content = a.num.t.front().m;
      for (const Term& t : a.num.t) content = mono_gcd(content, t.m);
      CHECK(mono_is_one(content));
    }

    LaurentEntry b = laurent_normalize(R, {rng.rint(-2, 2), rng.rint(-2, 2)},
                                       testutil::random_poly(rng, R, 3, 2, 3));
    std::vector<Q> pt = random_point(rng, 2, true);
    CHECK(laurent_eval(laurent_add(R, a, b), pt) == laurent_eval(a, pt) + laurent_eval(b, pt));
    CHECK(laurent_eval(laurent_mul(R, a, b), pt) == laurent_eval(a, pt) * laurent_eval(b, pt));
    CHECK(laurent_eval(laurent_sub(R, a, b), pt) == laurent_eval(a, pt) - laurent_eval(b, pt));
  }
}

TEST_CASE("budget overruns are reported, never silently truncated") {
  Ring R = R2();
  Budget tiny;
  tiny.max_total_terms = 4;
  // leading monomials x^2 and x*y share a variable, so the S-pair is reduced
  // and the basis must grow past the term cap
  std::vector<Polynomial> gens = {parse_poly(R, "x^2 + y^2"), parse_poly(R, "x*y + 1")};
  CHECK_THROWS_AS(groebner_basis(R, gens, tiny), budget_exceeded);
}
