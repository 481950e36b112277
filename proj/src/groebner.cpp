#include "jumploci/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "jumploci/errors.hpp"

namespace jumploci {

Ideal make_ideal(const Ring& R, std::vector<Polynomial> gens) {
  Ideal I;
  I.ring = R;
  for (auto& g : gens)
    if (!g.is_zero()) I.gens.push_back(std::move(g));
  return I;
}

Ideal zero_ideal(const Ring& R) { return make_ideal(R, {}); }

Ideal unit_ideal(const Ring& R) { return make_ideal(R, {poly_one(R)}); }

bool ideal_is_zero(const Ideal& I) { return I.gens.empty(); }

namespace {

struct Work {
  const Ring& R;
  const Budget& budget;
  long steps = 0;

  void step(long k = 1) {
    steps += k;
    if (steps > budget.max_reduction_steps)
      throw budget_exceeded("reduction step budget exceeded");
  }
};

// f := f - c * x^m * g applied to a TermMap working copy.
void axpy(Work& w, TermMap& f, const Q& c, const Mono& m, const Polynomial& g) {
  for (const auto& tg : g.t) {
    w.step();
    Mono mm = mono_mul(m, tg.m);
    Q cc = c * tg.c;
    auto [it, fresh] = f.emplace(std::move(mm), -cc);
    if (!fresh) {
      it->second -= cc;
      if (sgn(it->second) == 0) f.erase(it);
    }
  }
}

Polynomial normal_form_impl(Work& w, const Polynomial& f, const std::vector<Polynomial>& basis) {
  TermMap work = to_map(w.R, f);
  std::vector<Term> out;
  while (!work.empty()) {
    auto it = work.begin();
    const Mono m = it->first;
    const Q c = it->second;
    const Polynomial* red = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && mono_divides(poly_lt(g).m, m)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      out.push_back({c, m});
      work.erase(it);
      continue;
    }
    Q q = c / poly_lt(*red).c;
    axpy(w, work, q, mono_div(m, poly_lt(*red).m), *red);
  }
  return poly_from_terms(w.R, out);
}

long total_terms(const std::vector<Polynomial>& basis) {
  long n = 0;
  for (const auto& g : basis) n += static_cast<long>(g.t.size());
  return n;
}

}  // namespace

Polynomial normal_form(const Ring& R, const Polynomial& f, const std::vector<Polynomial>& basis,
                       const Budget& budget) {
  Work w{R, budget};
  return normal_form_impl(w, f, basis);
}

Polynomial s_polynomial(const Ring& R, const Polynomial& f, const Polynomial& g) {
  const Term& lf = poly_lt(f);
  const Term& lg = poly_lt(g);
  Mono l = mono_lcm(lf.m, lg.m);
  Polynomial a = pmul_term(R, f, Q(1) / lf.c, mono_div(l, lf.m));
  Polynomial b = pmul_term(R, g, Q(1) / lg.c, mono_div(l, lg.m));
  return psub(R, a, b);
}

std::vector<Polynomial> groebner_basis(const Ring& R, std::vector<Polynomial> gens,
                                       const Budget& budget) {
  Work w{R, budget};

  std::vector<Polynomial> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(make_monic(g));

  // Deterministic input: sort and dedupe, then interreduce once.
  std::sort(basis.begin(), basis.end(),
            [&](const Polynomial& a, const Polynomial& b) { return poly_cmp(R, a, b) < 0; });
  basis.erase(std::unique(basis.begin(), basis.end(),
                          [](const Polynomial& a, const Polynomial& b) { return poly_equal(a, b); }),
              basis.end());
  {
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(basis.size() - 1 + reduced.size());
      for (size_t j = i + 1; j < basis.size(); ++j) others.push_back(basis[j]);
      for (const auto& g : reduced) others.push_back(g);
      Polynomial r = normal_form_impl(w, basis[i], others);
      if (!r.is_zero()) reduced.push_back(make_monic(r));
    }
    basis = std::move(reduced);
    std::sort(basis.begin(), basis.end(),
              [&](const Polynomial& a, const Polynomial& b) { return poly_cmp(R, a, b) < 0; });
  }

  struct Pair {
    Mono lcm;
    int i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    int c = mono_cmp(R.ord, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> queue;
  auto push_pair = [&](int i, int j) {
    queue.push_back({mono_lcm(poly_lt(basis[i]).m, poly_lt(basis[j]).m), i, j});
    std::push_heap(queue.begin(), queue.end(),
                   [&](const Pair& a, const Pair& b) { return pair_less(b, a); });
  };
  auto pop_pair = [&]() {
    std::pop_heap(queue.begin(), queue.end(),
                  [&](const Pair& a, const Pair& b) { return pair_less(b, a); });
    Pair p = queue.back();
    queue.pop_back();
    return p;
  };

  std::set<std::pair<int, int>> done;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push_pair(static_cast<int>(i), static_cast<int>(j));

  while (!queue.empty()) {
    Pair p = pop_pair();
    if (done.count({p.i, p.j})) continue;
    done.insert({p.i, p.j});

    const Polynomial& f = basis[p.i];
    const Polynomial& g = basis[p.j];
    // Buchberger product criterion.
    if (mono_coprime(poly_lt(f).m, poly_lt(g).m)) continue;
    // Chain criterion: a third element dividing the lcm whose pairs with both
    // ends were already treated makes this S-pair redundant.
    bool chained = false;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      int ki = static_cast<int>(k);
      if (ki == p.i || ki == p.j) continue;
      if (!mono_divides(poly_lt(basis[k]).m, p.lcm)) continue;
      auto key1 = std::minmax(p.i, ki);
      auto key2 = std::minmax(p.j, ki);
      if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
        chained = true;
    }
    if (chained) continue;

    Polynomial s = s_polynomial(R, f, g);
    Polynomial r = normal_form_impl(w, s, basis);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r));
    int newi = static_cast<int>(basis.size()) - 1;
    if (static_cast<long>(basis.size()) > budget.max_basis)
      throw budget_exceeded("basis size budget exceeded");
    if (total_terms(basis) > budget.max_total_terms)
      throw budget_exceeded("basis term budget exceeded");
    for (int i = 0; i < newi; ++i) push_pair(i, newi);
  }

  // Minimalize: drop elements whose leading term another one divides.
  std::vector<char> keep(basis.size(), 1);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const Mono& mi = poly_lt(basis[i]).m;
      const Mono& mj = poly_lt(basis[j]).m;
      if (mono_divides(mj, mi) && (mi != mj || j < i)) keep[i] = 0;
    }
  }
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // Tail-reduce for the unique reduced basis.
  std::vector<Polynomial> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normal_form_impl(w, minimal[i], others);
    if (!r.is_zero()) out.push_back(canonical_scale(r));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(R.ord, poly_lt(a).m, poly_lt(b).m) < 0;
  });
  return out;
}

const std::vector<Polynomial>& groebner(const Ideal& I, const Budget& budget) {
  auto& slot = I.ring.ord == Order::grevlex ? I.gb_grevlex : I.gb_lex;
  if (!slot) slot = std::make_shared<std::vector<Polynomial>>(groebner_basis(I.ring, I.gens, budget));
  return *slot;
}

bool ideal_member(const Polynomial& f, const Ideal& I, const Budget& budget) {
  if (f.is_zero()) return true;
  const auto& gb = groebner(I, budget);
  return normal_form(I.ring, f, gb, budget).is_zero();
}

bool ideal_is_unit(const Ideal& I, const Budget& budget) {
  const auto& gb = groebner(I, budget);
  return gb.size() == 1 && poly_is_constant(gb[0]);
}

}  // namespace jumploci
