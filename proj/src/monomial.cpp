#include "jumploci/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace jumploci {

Mono mono_one(int n) { return Mono(n, 0); }

int mono_deg(const Mono& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  assert(a.size() == b.size());
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
  assert(mono_divides(a, b));
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  assert(a.size() == b.size());
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Mono mono_gcd(const Mono& a, const Mono& b) {
  assert(a.size() == b.size());
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

bool mono_is_one(const Mono& a) {
  for (int e : a)
    if (e != 0) return false;
  return true;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

int mono_cmp(Order ord, const Mono& a, const Mono& b) {
  assert(a.size() == b.size());
  if (ord == Order::lex) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  // grevlex: compare total degree, then the last nonzero entry of a-b decides
  // with reversed sign.
  int da = mono_deg(a), db = mono_deg(b);
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace jumploci
