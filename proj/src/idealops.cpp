#include "jumploci/idealops.hpp"

#include <algorithm>
#include <cassert>

#include "jumploci/errors.hpp"

namespace jumploci {

Polynomial poly_substitute(const Ring& src, const Polynomial& p, const Ring& dst,
                           const std::vector<Polynomial>& images) {
  assert(static_cast<int>(images.size()) == src.n);
  Polynomial acc = poly_zero(dst);
  for (const auto& t : p.t) {
    Polynomial term = poly_const(dst, t.c);
    for (int i = 0; i < src.n; ++i)
      if (t.m[i] != 0) term = pmul(dst, term, ppow(dst, images[i], t.m[i]));
    acc = padd(dst, acc, term);
  }
  return acc;
}

Ideal with_order(const Ideal& I, Order ord) {
  if (I.ring.ord == ord) return I;
  Ring R2 = I.ring;
  R2.ord = ord;
  std::vector<Polynomial> gens;
  gens.reserve(I.gens.size());
  for (const auto& g : I.gens) gens.push_back(reordered(R2, g));
  return make_ideal(R2, std::move(gens));
}

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
  std::vector<Polynomial> gens = A.gens;
  gens.insert(gens.end(), B.gens.begin(), B.gens.end());
  return make_ideal(A.ring, std::move(gens));
}

Ideal ideal_product(const Ideal& A, const Ideal& B) {
  std::vector<Polynomial> gens;
  gens.reserve(A.gens.size() * B.gens.size());
  for (const auto& a : A.gens)
    for (const auto& b : B.gens) gens.push_back(pmul(A.ring, a, b));
  return make_ideal(A.ring, std::move(gens));
}

Ideal irrelevant_ideal(const Ring& R) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < R.n; ++i) gens.push_back(poly_var(R, i));
  return make_ideal(R, std::move(gens));
}

Ideal with_origin_adjoined(const Ideal& I) {
  if (I.gens.empty()) return I;
  bool vanishes = true;
  for (const auto& g : I.gens)
    if (sgn(poly_constant_term(g)) != 0) vanishes = false;
  if (vanishes) return I;
  return ideal_product(I, irrelevant_ideal(I.ring));
}

namespace {

Ring extend_ring(const Ring& R, const std::vector<std::string>& front,
                 const std::vector<std::string>& back, Order ord) {
  std::vector<std::string> names = front;
  names.insert(names.end(), R.names.begin(), R.names.end());
  names.insert(names.end(), back.begin(), back.end());
  return make_ring(std::move(names), ord);
}

// Re-embeds p with `front` fresh variables prepended and `back` appended.
Polynomial lift(const Ring& src, const Polynomial& p, const Ring& dst, int front) {
  std::vector<Term> terms;
  terms.reserve(p.t.size());
  for (const auto& t : p.t) {
    Mono m = mono_one(dst.n);
    for (int i = 0; i < src.n; ++i) m[front + i] = t.m[i];
    terms.push_back({t.c, m});
  }
  return poly_from_terms(dst, terms);
}

Polynomial project_drop_front(const Ring& src, const Polynomial& p, const Ring& dst, int front) {
  std::vector<Term> terms;
  for (const auto& t : p.t) {
    Mono m = mono_one(dst.n);
    for (int i = 0; i < dst.n; ++i) m[i] = t.m[front + i];
    terms.push_back({t.c, m});
  }
  return poly_from_terms(dst, terms);
}

}  // namespace

bool radical_member(const Polynomial& f, const Ideal& I, const Budget& budget) {
  if (f.is_zero()) return true;
  Ring ext = extend_ring(I.ring, {}, {"@r"}, Order::grevlex);
  std::vector<Polynomial> gens;
  for (const auto& g : groebner(I, budget)) gens.push_back(lift(I.ring, g, ext, 0));
  // 1 - y*f
  Polynomial yf = pmul(ext, lift(I.ring, f, ext, 0), poly_var(ext, ext.n - 1));
  gens.push_back(psub(ext, poly_one(ext), yf));
  auto gb = groebner_basis(ext, gens, budget);
  return gb.size() == 1 && poly_is_constant(gb[0]);
}

Ideal saturate_by_variable(const Ideal& I, int v, const Budget& budget) {
  assert(v >= 0 && v < I.ring.n);
  Ring ext = extend_ring(I.ring, {"@e"}, {}, Order::lex);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens) gens.push_back(lift(I.ring, g, ext, 1));
  Polynomial ex = pmul(ext, poly_var(ext, 0), poly_var(ext, 1 + v));
  gens.push_back(psub(ext, poly_one(ext), ex));
  auto gb = groebner_basis(ext, gens, budget);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool uses_e = false;
    for (const auto& t : g.t)
      if (t.m[0] != 0) uses_e = true;
    if (!uses_e) kept.push_back(project_drop_front(ext, g, I.ring, 1));
  }
  return make_ideal(I.ring, std::move(kept));
}

Ideal tangent_cone_ideal(const Ideal& I, const Budget& budget) {
  const Ring& R = I.ring;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) return zero_ideal(R);
  for (const auto& g : gens)
    if (sgn(poly_constant_term(g)) != 0) return unit_ideal(R);  // origin not on the zero set

  // Substitute x_i -> h*x_i and strip h^{ord}: the lowest form survives at h=0.
  Ring reesR = extend_ring(R, {}, {"@h"}, Order::grevlex);
  std::vector<Polynomial> rees;
  for (const auto& g : gens) {
    int ord = poly_order_degree(g);
    std::vector<Term> terms;
    for (const auto& t : g.t) {
      Mono m = mono_one(reesR.n);
      for (int i = 0; i < R.n; ++i) m[i] = t.m[i];
      m[R.n] = mono_deg(t.m) - ord;
      terms.push_back({t.c, m});
    }
    rees.push_back(poly_from_terms(reesR, terms));
  }
  Ideal J = saturate_by_variable(make_ideal(reesR, std::move(rees)), R.n, budget);

  // h := 0, then split into homogeneous parts (the saturated ideal is graded
  // for deg x = 1, deg h = -1, so every part lies in the initial ideal).
  std::vector<Polynomial> out;
  for (const auto& g : J.gens) {
    std::vector<Term> kept;
    for (const auto& t : g.t)
      if (t.m[R.n] == 0) kept.push_back(t);
    if (kept.empty()) continue;
    Polynomial base = project_drop_front(reesR, poly_from_terms(reesR, kept), R, 0);
    for (auto& h : homogeneous_components(R, base))
      if (!h.is_zero()) out.push_back(canonical_scale(h));
  }
  std::sort(out.begin(), out.end(),
            [&](const Polynomial& a, const Polynomial& b) { return poly_cmp(R, a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Polynomial& a, const Polynomial& b) { return poly_equal(a, b); }),
            out.end());
  return make_ideal(R, std::move(out));
}

bool variety_subset(const Ideal& A, const Ideal& B, const Budget& budget) {
  for (const auto& g : B.gens)
    if (!radical_member(g, A, budget)) return false;
  return true;
}

bool variety_equal(const Ideal& A, const Ideal& B, const Budget& budget) {
  return variety_subset(A, B, budget) && variety_subset(B, A, budget);
}

bool variety_subset_union(const Ideal& I, const std::vector<std::vector<Polynomial>>& comp_forms,
                          bool allow_origin, const Budget& budget) {
  const Ring& R = I.ring;
  std::vector<std::vector<Polynomial>> comps = comp_forms;
  if (comps.empty()) {
    if (!allow_origin) return ideal_is_unit(I, budget);
    std::vector<Polynomial> coords;
    for (int i = 0; i < R.n; ++i) coords.push_back(poly_var(R, i));
    comps.push_back(std::move(coords));
  }
  // A component with no defining forms is the whole space: trivially covered.
  for (const auto& forms : comps)
    if (forms.empty()) return true;

  long total = 1;
  for (const auto& forms : comps) {
    total *= static_cast<long>(forms.size());
    if (total > 200000) throw budget_exceeded("too many product choices in union check");
  }
  groebner(I, budget);  // shared by every membership query below
  std::vector<size_t> choice(comps.size(), 0);
  for (;;) {
    Polynomial prod = poly_one(R);
    for (size_t a = 0; a < comps.size(); ++a) prod = pmul(R, prod, comps[a][choice[a]]);
    if (!radical_member(prod, I, budget)) return false;
    size_t a = 0;
    while (a < comps.size()) {
      if (++choice[a] < comps[a].size()) break;
      choice[a] = 0;
      ++a;
    }
    if (a == comps.size()) break;
  }
  return true;
}

}  // namespace jumploci
