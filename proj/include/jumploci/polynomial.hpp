#pragma once

#include <map>
#include <string>
#include <vector>

#include "jumploci/monomial.hpp"
#include "jumploci/numtypes.hpp"

namespace jumploci {

// Variable names identify the ring; the order is a computation mode and two
// rings with the same names but different orders describe the same algebra.
struct Ring {
  int n = 0;
  Order ord = Order::grevlex;
  std::vector<std::string> names;
};

Ring make_ring(std::vector<std::string> names, Order ord = Order::grevlex);
// t1..tn / z1..zn / u1..un style helper.
Ring make_ring(const std::string& stem, int n, Order ord = Order::grevlex);

struct Term {
  Q c;
  Mono m;
};

// Invariant: terms sorted strictly descending in the owning ring's order,
// no zero coefficients. The zero polynomial has no terms.
struct Polynomial {
  int n = 0;
  std::vector<Term> t;
  bool is_zero() const { return t.empty(); }
};

struct MonoGreater {
  Order ord;
  bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(ord, a, b) > 0; }
};

// Map-backed accumulator used by arithmetic and reduction loops.
using TermMap = std::map<Mono, Q, MonoGreater>;

Polynomial poly_zero(const Ring& R);
Polynomial poly_const(const Ring& R, const Q& c);
Polynomial poly_one(const Ring& R);
Polynomial poly_var(const Ring& R, int i, int exp = 1);
Polynomial poly_term(const Ring& R, const Q& c, const Mono& m);
Polynomial poly_from_terms(const Ring& R, const std::vector<Term>& terms);
Polynomial poly_from_map(const Ring& R, const TermMap& m);
TermMap to_map(const Ring& R, const Polynomial& p);

Polynomial padd(const Ring& R, const Polynomial& a, const Polynomial& b);
Polynomial psub(const Ring& R, const Polynomial& a, const Polynomial& b);
Polynomial pneg(const Polynomial& a);
Polynomial pscale(const Polynomial& a, const Q& c);
Polynomial pmul_term(const Ring& R, const Polynomial& a, const Q& c, const Mono& m);
Polynomial pmul(const Ring& R, const Polynomial& a, const Polynomial& b);
Polynomial ppow(const Ring& R, const Polynomial& a, int k);

bool poly_equal(const Polynomial& a, const Polynomial& b);
// Deterministic total order on polynomials of one ring (termwise; used for
// canonical generator lists).
int poly_cmp(const Ring& R, const Polynomial& a, const Polynomial& b);

const Term& poly_lt(const Polynomial& a);  // requires nonzero
int poly_total_degree(const Polynomial& a);    // -1 for zero
int poly_order_degree(const Polynomial& a);    // min total degree of a term; -1 for zero
bool poly_is_homogeneous(const Polynomial& a);
std::vector<Polynomial> homogeneous_components(const Ring& R, const Polynomial& a);
bool poly_is_constant(const Polynomial& a);
Q poly_constant_term(const Polynomial& a);

Q poly_eval(const Polynomial& a, const std::vector<Q>& point);

// Scales by the unique positive rational giving coprime integer coefficients
// with a positive leading one.
Polynomial canonical_scale(const Polynomial& a);
Polynomial make_monic(const Polynomial& a);

// Re-sorts terms for a ring with a different order.
Polynomial reordered(const Ring& to, const Polynomial& a);

std::string poly_str(const Ring& R, const Polynomial& a);
Polynomial parse_poly(const Ring& R, const std::string& text);

}  // namespace jumploci
