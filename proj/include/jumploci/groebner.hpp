#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "jumploci/polynomial.hpp"

namespace jumploci {

// Caps for Buchberger runs. total_terms bounds the sum of term counts over the
// working basis; reduction_steps bounds single reduction events across a run.
struct Budget {
  long max_basis = 20000;
  long max_total_terms = 5000000;
  long max_reduction_steps = 50000000;
};

struct Ideal {
  Ring ring;
  std::vector<Polynomial> gens;

  // Reduced Groebner bases, lazily computed per order.
  mutable std::shared_ptr<std::vector<Polynomial>> gb_grevlex;
  mutable std::shared_ptr<std::vector<Polynomial>> gb_lex;
};

Ideal make_ideal(const Ring& R, std::vector<Polynomial> gens);
Ideal zero_ideal(const Ring& R);
Ideal unit_ideal(const Ring& R);

bool ideal_is_zero(const Ideal& I);

// Full normal form: every term of the result is reducible by no basis element.
Polynomial normal_form(const Ring& R, const Polynomial& f,
                       const std::vector<Polynomial>& basis, const Budget& budget);

Polynomial s_polynomial(const Ring& R, const Polynomial& f, const Polynomial& g);

// Reduced Groebner basis in R.ord, canonically scaled, sorted by leading
// monomial ascending. Unit ideal yields {1}; zero ideal yields {}.
std::vector<Polynomial> groebner_basis(const Ring& R, std::vector<Polynomial> gens,
                                       const Budget& budget);

// Cached via the Ideal's ring order.
const std::vector<Polynomial>& groebner(const Ideal& I, const Budget& budget = {});

bool ideal_member(const Polynomial& f, const Ideal& I, const Budget& budget = {});
bool ideal_is_unit(const Ideal& I, const Budget& budget = {});

}  // namespace jumploci
