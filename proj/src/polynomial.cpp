#include "jumploci/polynomial.hpp"

#include <cassert>
#include <sstream>

#include "jumploci/errors.hpp"

namespace jumploci {

Q parse_rational(const std::string& s) {
  if (s.empty()) throw input_error("empty rational");
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  auto digits = [&](size_t& j) {
    size_t start = j;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == start) throw input_error("bad rational: " + s);
    return s.substr(start, j - start);
  };
  std::string num = digits(i);
  std::string den = "1";
  if (i < s.size() && s[i] == '/') {
    ++i;
    den = digits(i);
  }
  if (i != s.size()) throw input_error("bad rational: " + s);
  Z d(den);
  if (sgn(d) == 0) throw input_error("zero denominator: " + s);
  Q q(Z(num), d);
  q.canonicalize();
  return neg ? Q(-q) : q;
}

std::string q_str(const Q& q) { return q.get_str(); }
std::string z_str(const Z& z) { return z.get_str(); }

Ring make_ring(std::vector<std::string> names, Order ord) {
  Ring r;
  r.n = static_cast<int>(names.size());
  r.ord = ord;
  r.names = std::move(names);
  return r;
}

Ring make_ring(const std::string& stem, int n, Order ord) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return make_ring(std::move(names), ord);
}

Polynomial poly_zero(const Ring& R) { return Polynomial{R.n, {}}; }

Polynomial poly_const(const Ring& R, const Q& c) {
  Polynomial p{R.n, {}};
  if (sgn(c) != 0) p.t.push_back({c, mono_one(R.n)});
  return p;
}

Polynomial poly_one(const Ring& R) { return poly_const(R, 1); }

Polynomial poly_var(const Ring& R, int i, int exp) {
  assert(i >= 0 && i < R.n);
  Mono m = mono_one(R.n);
  m[i] = exp;
  return Polynomial{R.n, {{Q(1), m}}};
}

Polynomial poly_term(const Ring& R, const Q& c, const Mono& m) {
  Polynomial p{R.n, {}};
  if (sgn(c) != 0) p.t.push_back({c, m});
  return p;
}

Polynomial poly_from_map(const Ring& R, const TermMap& m) {
  Polynomial p{R.n, {}};
  p.t.reserve(m.size());
  for (const auto& [mono, c] : m)
    if (sgn(c) != 0) p.t.push_back({c, mono});
  return p;
}

TermMap to_map(const Ring& R, const Polynomial& p) {
  TermMap m(MonoGreater{R.ord});
  for (const auto& t : p.t) m.emplace(t.m, t.c);
  return m;
}

Polynomial poly_from_terms(const Ring& R, const std::vector<Term>& terms) {
  TermMap m(MonoGreater{R.ord});
  for (const auto& t : terms) {
    auto [it, fresh] = m.emplace(t.m, t.c);
    if (!fresh) it->second += t.c;
  }
  return poly_from_map(R, m);
}

Polynomial padd(const Ring& R, const Polynomial& a, const Polynomial& b) {
  // Merge of two descending term lists.
  Polynomial r{R.n, {}};
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = mono_cmp(R.ord, a.t[i].m, b.t[j].m);
    if (c > 0) {
      r.t.push_back(a.t[i++]);
    } else if (c < 0) {
      r.t.push_back(b.t[j++]);
    } else {
      Q s = a.t[i].c + b.t[j].c;
      if (sgn(s) != 0) r.t.push_back({s, a.t[i].m});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
  return r;
}

Polynomial pneg(const Polynomial& a) {
  Polynomial r = a;
  for (auto& t : r.t) t.c = -t.c;
  return r;
}

Polynomial psub(const Ring& R, const Polynomial& a, const Polynomial& b) {
  return padd(R, a, pneg(b));
}

Polynomial pscale(const Polynomial& a, const Q& c) {
  if (sgn(c) == 0) return Polynomial{a.n, {}};
  Polynomial r = a;
  for (auto& t : r.t) t.c *= c;
  return r;
}

Polynomial pmul_term(const Ring& R, const Polynomial& a, const Q& c, const Mono& m) {
  (void)R;
  if (sgn(c) == 0) return Polynomial{a.n, {}};
  Polynomial r{a.n, {}};
  r.t.reserve(a.t.size());
  for (const auto& t : a.t) r.t.push_back({t.c * c, mono_mul(t.m, m)});
  return r;  // multiplying by a monomial preserves the term order
}

Polynomial pmul(const Ring& R, const Polynomial& a, const Polynomial& b) {
  TermMap m(MonoGreater{R.ord});
  for (const auto& ta : a.t)
    for (const auto& tb : b.t) {
      Mono mm = mono_mul(ta.m, tb.m);
      Q c = ta.c * tb.c;
      auto [it, fresh] = m.emplace(std::move(mm), c);
      if (!fresh) it->second += c;
    }
  return poly_from_map(R, m);
}

Polynomial ppow(const Ring& R, const Polynomial& a, int k) {
  assert(k >= 0);
  Polynomial r = poly_one(R);
  Polynomial base = a;
  while (k > 0) {
    if (k & 1) r = pmul(R, r, base);
    k >>= 1;
    if (k) base = pmul(R, base, base);
  }
  return r;
}

bool poly_equal(const Polynomial& a, const Polynomial& b) {
  if (a.t.size() != b.t.size()) return false;
  for (size_t i = 0; i < a.t.size(); ++i)
    if (a.t[i].m != b.t[i].m || a.t[i].c != b.t[i].c) return false;
  return true;
}

int poly_cmp(const Ring& R, const Polynomial& a, const Polynomial& b) {
  size_t k = std::min(a.t.size(), b.t.size());
  for (size_t i = 0; i < k; ++i) {
    int c = mono_cmp(R.ord, a.t[i].m, b.t[i].m);
    if (c != 0) return c;
    int s = cmp(a.t[i].c, b.t[i].c);
    if (s != 0) return s;
  }
  if (a.t.size() != b.t.size()) return a.t.size() > b.t.size() ? 1 : -1;
  return 0;
}

const Term& poly_lt(const Polynomial& a) {
  assert(!a.t.empty());
  return a.t.front();
}

int poly_total_degree(const Polynomial& a) {
  int d = -1;
  for (const auto& t : a.t) d = std::max(d, mono_deg(t.m));
  return d;
}

int poly_order_degree(const Polynomial& a) {
  if (a.t.empty()) return -1;
  int d = mono_deg(a.t.front().m);
  for (const auto& t : a.t) d = std::min(d, mono_deg(t.m));
  return d;
}

bool poly_is_homogeneous(const Polynomial& a) {
  if (a.t.empty()) return true;
  int d = mono_deg(a.t.front().m);
  for (const auto& t : a.t)
    if (mono_deg(t.m) != d) return false;
  return true;
}

std::vector<Polynomial> homogeneous_components(const Ring& R, const Polynomial& a) {
  std::map<int, std::vector<Term>> by_deg;
  for (const auto& t : a.t) by_deg[mono_deg(t.m)].push_back(t);
  std::vector<Polynomial> out;
  for (auto& [d, terms] : by_deg) out.push_back(poly_from_terms(R, terms));
  return out;
}

bool poly_is_constant(const Polynomial& a) {
  return a.t.empty() || (a.t.size() == 1 && mono_is_one(a.t[0].m));
}

Q poly_constant_term(const Polynomial& a) {
  for (const auto& t : a.t)
    if (mono_is_one(t.m)) return t.c;
  return Q(0);
}

Q poly_eval(const Polynomial& a, const std::vector<Q>& point) {
  assert(static_cast<int>(point.size()) == a.n);
  Q acc(0);
  for (const auto& t : a.t) {
    Q v = t.c;
    for (int i = 0; i < a.n; ++i) {
      for (int e = 0; e < t.m[i]; ++e) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

Polynomial canonical_scale(const Polynomial& a) {
  if (a.t.empty()) return a;
  Z num_gcd(0), den_lcm(1);
  for (const auto& t : a.t) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
  }
  Q scale(den_lcm, num_gcd);  // both positive
  scale.canonicalize();
  if (sgn(a.t.front().c) < 0) scale = -scale;
  return pscale(a, scale);
}

Polynomial make_monic(const Polynomial& a) {
  if (a.t.empty()) return a;
  return pscale(a, Q(1) / a.t.front().c);
}

Polynomial reordered(const Ring& to, const Polynomial& a) {
  return poly_from_terms(to, a.t);
}

}  // namespace jumploci
