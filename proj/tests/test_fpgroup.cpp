#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jumploci/combinators.hpp"
#include "jumploci/errors.hpp"
#include "testutil.hpp"

using namespace jumploci;

namespace {

Word w_of(std::initializer_list<Syllable> sylls) { return word_reduce(Word(sylls)); }

}  // namespace

TEST_CASE("free reduction is canonical and involutive on inverses") {
  Word w = {{0, 1}, {1, 2}, {1, -2}, {0, -1}};
  CHECK(word_reduce(w).empty());

  testutil::Rng rng(101);
  for (int c = 0; c < 100; ++c) {
    Word u = testutil::random_word(rng, 3, 6, 3);
    CHECK(word_reduce(u) == u);  // idempotent
    CHECK(word_mul(u, word_inv(u)).empty());
    for (size_t i = 0; i + 1 < u.size(); ++i) CHECK(u[i].gen != u[i + 1].gen);
    for (const Syllable& s : u) CHECK(s.exp != 0);
  }
}

TEST_CASE("presentation parsing expands commutators and reduces relators") {
  GroupPresentation p = parse_presentation("gens x y\nrel (x,y)\n");
  REQUIRE(p.rels.size() == 1);
  CHECK(p.rels[0] == w_of({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));

  GroupPresentation q = parse_presentation("gens x\nrel x x^-1\n");
  REQUIRE(q.rels.size() == 1);
  CHECK(q.rels[0].empty());

  GroupPresentation z = corpus_presentation("ziegler-2134");
  REQUIRE(z.rels.size() == 3);
  // (x1, x3^2 x4) = x1 x3^2 x4 x1^-1 x4^-1 x3^-2
  CHECK(z.rels[0] == w_of({{0, 1}, {2, 2}, {3, 1}, {0, -1}, {3, -1}, {2, -2}}));

  CHECK_THROWS_AS(parse_presentation("gens x\nrel y\n"), parse_error);
  CHECK_THROWS_AS(parse_presentation("gens x x\n"), parse_error);
  CHECK_THROWS_AS(parse_presentation("rel x\n"), parse_error);
  CHECK_THROWS_AS(parse_presentation("gens x\nrel (x\n"), parse_error);
}

TEST_CASE("fox derivative axioms and the trefoil relator") {
  Word x = {{0, 1}};
  CHECK(gr_is_zero(gr_sub(fox_derivative(x, 0), gr_int(1))));
  CHECK(gr_is_zero(fox_derivative(x, 1)));

  Word xinv = {{0, -1}};
  GroupRingElt expect;
  gr_add_term(expect, Word{{0, -1}}, -1);
  CHECK(gr_is_zero(gr_sub(fox_derivative(xinv, 0), expect)));

  // d/dx (x y x y^-1 x^-1 y^-1) = 1 + xy - xyxy^-1x^-1
  Word trefoil = corpus_presentation("trefoil").rels[0];
  GroupRingElt hand;
  gr_add_term(hand, Word{}, 1);
  gr_add_term(hand, w_of({{0, 1}, {1, 1}}), 1);
  gr_add_term(hand, w_of({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}}), -1);
  CHECK(gr_is_zero(gr_sub(fox_derivative(trefoil, 0), hand)));
  CHECK(gr_is_zero(gr_sub(testutil::fox_oracle(trefoil, 0), hand)));
}

TEST_CASE("fox product rule holds on random words") {
  CHECK(testutil::suite_fox_product_rule(2024, 200) == 0);
}

TEST_CASE("fox fundamental identity holds on random words") {
  CHECK(testutil::suite_fox_fundamental_identity(2025, 200) == 0);
}

TEST_CASE("syllable fox derivative agrees with the letterwise oracle") {
  CHECK(testutil::suite_fox_oracle_agreement(2026, 200) == 0);
}

TEST_CASE("smith normal form examples and recomposition property") {
  {
    SNFResult r = smith_normal_form({{Z(2)}});
    CHECK(r.D[0][0] == 2);
  }
  {
    SNFResult r = smith_normal_form({{Z(1), Z(-1)}});
    CHECK(r.D[0][0] == 1);
    CHECK(r.D[0][1] == 0);
  }
  testutil::Rng rng(31337);
  for (int c = 0; c < 100; ++c) {
    ZMat A = zmat(3, 3);
    for (auto& row : A)
      for (auto& v : row) v = Z(static_cast<long>(rng.rint(-4, 4)));
    SNFResult r = smith_normal_form(A);
    CHECK(zmat_mul(zmat_mul(r.U, A), r.V) == r.D);
    Z du = zmat_det(r.U), dv = zmat_det(r.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (int i = 0; i + 1 < 3; ++i) {
      const Z& a = r.D[i][i];
      const Z& b = r.D[i + 1][i + 1];
      CHECK(a >= 0);
      if (a == 0) CHECK(b == 0);
      else CHECK(b % a == 0);
    }
  }
}

TEST_CASE("abelianization ranks and torsion") {
  AbelianizationData tre = abelianize_presentation(corpus_presentation("trefoil"));
  CHECK(tre.rank_b1 == 1);
  CHECK(tre.torsion_orders.empty());
  // both generators map to the same free image t
  CHECK(tre.gen_free_image[0] == tre.gen_free_image[1]);

  AbelianizationData f2 = abelianize_presentation(corpus_presentation("free-2"));
  CHECK(f2.rank_b1 == 2);

  AbelianizationData c2 = abelianize_presentation(parse_presentation("gens x\nrel x^2\n"));
  CHECK(c2.rank_b1 == 0);
  REQUIRE(c2.torsion_orders.size() == 1);
  CHECK(c2.torsion_orders[0] == 2);
}

TEST_CASE("abelianized alexander matrices") {
  GroupPresentation tre = corpus_presentation("trefoil");
  AbelianizationData d = abelianize_presentation(tre);
  LaurentMatrix A = abelianized_alexander_matrix(tre, d);
  REQUIRE(A.rows == 1);
  REQUIRE(A.cols == 2);
  Polynomial delta = parse_poly(A.ring, "t1^2 - t1 + 1");
  CHECK(poly_equal(canonical_scale(A.at(0, 0).num), delta));
  CHECK(poly_equal(canonical_scale(A.at(0, 1).num), delta));

  // independent path for entry (0,0): letterwise fox oracle + exponent sums
  GroupRingElt dx = testutil::fox_oracle(tre.rels[0], 0);
  std::map<int, long long> by_power;
  for (const auto& [w, c] : dx)
    by_power[word_exponent_sum(w, 0) + word_exponent_sum(w, 1)] += c;
  Polynomial oracle = poly_zero(A.ring);
  for (const auto& [e, c] : by_power) {
    REQUIRE(e >= 0);
    oracle = padd(A.ring, oracle, poly_term(A.ring, Q(static_cast<long>(c)), Mono{e}));
  }
  CHECK(poly_equal(A.at(0, 0).num, oracle));

  GroupPresentation surf = corpus_presentation("surface-1");
  LaurentMatrix S = abelianized_alexander_matrix(surf);
  REQUIRE(S.rows == 1);
  REQUIRE(S.cols == 2);
  CHECK(poly_equal(S.at(0, 0).num, parse_poly(S.ring, "1 - t2")));
  CHECK(mono_is_one(S.at(0, 0).shift));
  CHECK(poly_equal(S.at(0, 1).num, parse_poly(S.ring, "t1 - 1")));
  CHECK(mono_is_one(S.at(0, 1).shift));

  LaurentMatrix F = abelianized_alexander_matrix(corpus_presentation("free-2"));
  CHECK(F.rows == 0);
  CHECK(F.cols == 2);
}

TEST_CASE("magnus quadratic parts of commutator relators") {
  // (x,y), n=2: single wedge coordinate e1^e2
  auto xy = magnus_quadratic(word_commutator({{0, 1}}, {{1, 1}}), 2);
  REQUIRE(xy.has_value());
  REQUIRE(xy->size() == 1);
  CHECK((*xy)[0] == Q(1));

  // ((x,y),x) lies in the third lower-central term: quadratic part vanishes
  Word inner = word_commutator({{0, 1}}, {{1, 1}});
  auto deep = magnus_quadratic(word_commutator(inner, {{0, 1}}), 2);
  REQUIRE(deep.has_value());
  CHECK((*deep)[0] == Q(0));

  // (x1, x3^2 x4), n=4: 2 e1^e3 + e1^e4
  Word zrel = corpus_presentation("ziegler-2134").rels[0];
  auto zq = magnus_quadratic(zrel, 4);
  REQUIRE(zq.has_value());
  REQUIRE(zq->size() == 6);
  std::vector<Q> expect(6, Q(0));
  expect[pair_index(4, 0, 2)] = Q(2);
  expect[pair_index(4, 0, 3)] = Q(1);
  CHECK(*zq == expect);

  // nonzero exponent sum: no class
  CHECK_FALSE(magnus_quadratic(Word{{0, 1}}, 2).has_value());
}

TEST_CASE("cup structures from presentations") {
  CupStructure p3 = cup_structure(corpus_presentation("p3-raag"));
  CHECK(p3.n == 3);
  QMat expect = {{Q(1), Q(0), Q(0)}, {Q(0), Q(0), Q(1)}};  // e1^e2, e2^e3
  CHECK(cup_equal(p3, make_cup(3, expect)));

  CupStructure heis = cup_structure(corpus_presentation("heisenberg"));
  CHECK(heis.n == 2);
  CHECK(heis.classes.empty());

  CHECK_THROWS_AS(cup_structure(corpus_presentation("trefoil")), unsupported_presentation);
}

TEST_CASE("cup file format round trip") {
  CupStructure z = cup_structure(corpus_presentation("ziegler-2134"));
  CupStructure back = parse_cup_file(cup_file_str(z));
  CHECK(cup_equal(z, back));

  CupStructure tre = parse_cup_file("h1 1\n");
  CHECK(tre.n == 1);
  CHECK(tre.classes.empty());

  CHECK_THROWS_AS(parse_cup_file("h1 2\nclass 1 on 2 1\n"), parse_error);
}

TEST_CASE("free and direct product combinators") {
  GroupPresentation f1 = corpus_presentation("free-1");
  GroupPresentation f2 = corpus_presentation("free-2");
  GroupPresentation z2 = corpus_presentation("surface-1");  // Z^2

  GroupPresentation fp = free_product(f1, f1);
  CHECK(fp.gens.size() == 2);
  CHECK(fp.rels.empty());

  GroupPresentation zz = free_product(z2, z2);
  CHECK(zz.gens.size() == 4);
  CHECK(zz.rels.size() == 2);

  GroupPresentation dp = direct_product(f1, f1);
  CHECK(dp.gens.size() == 2);
  REQUIRE(dp.rels.size() == 1);
  CHECK(dp.rels[0] == word_commutator({{0, 1}}, {{1, 1}}));

  GroupPresentation d21 = direct_product(f2, f1);
  CHECK(d21.gens.size() == 3);
  CHECK(d21.rels.size() == 2);

  testutil::Rng rng(7);
  for (int c = 0; c < 20; ++c) {
    GroupPresentation a, b;
    a.name = "a";
    b.name = "b";
    int sa = rng.rint(1, 3), sb = rng.rint(1, 3);
    for (int i = 0; i < sa; ++i) a.gens.push_back("g" + std::to_string(i));
    for (int i = 0; i < sb; ++i) b.gens.push_back("h" + std::to_string(i));
    int ra = rng.rint(0, 2), rb = rng.rint(0, 2);
    for (int i = 0; i < ra; ++i) {
      Word w = testutil::random_word(rng, sa, 4, 2);
      a.rels.push_back(w);
    }
    for (int i = 0; i < rb; ++i) b.rels.push_back(testutil::random_word(rng, sb, 4, 2));
    CHECK(free_product(a, b).rels.size() == a.rels.size() + b.rels.size());
    GroupPresentation d = direct_product(a, b);
    CHECK(d.gens.size() == static_cast<size_t>(sa + sb));
    CHECK(d.rels.size() == a.rels.size() + b.rels.size() + static_cast<size_t>(sa * sb));
  }
}
