#pragma once

#include <vector>

#include "jumploci/groebner.hpp"

namespace jumploci {

// Termwise substitution x_i -> images[i]; images live in dst.
Polynomial poly_substitute(const Ring& src, const Polynomial& p, const Ring& dst,
                           const std::vector<Polynomial>& images);

// Same variables, new order mode.
Ideal with_order(const Ideal& I, Order ord);

Ideal ideal_sum(const Ideal& A, const Ideal& B);
// Generated by pairwise products of generators; same zero set as intersection
// up to radical.
Ideal ideal_product(const Ideal& A, const Ideal& B);
// (x_1, ..., x_n).
Ideal irrelevant_ideal(const Ring& R);

// Z(result) = Z(I) with the origin adjoined; multiplies by the irrelevant
// ideal only when no generator already vanishes at 0.
Ideal with_origin_adjoined(const Ideal& I);

// Rabinowitsch: f in sqrt(I) iff 1 in I + (1 - y f).
bool radical_member(const Polynomial& f, const Ideal& I, const Budget& budget = {});

// I : (x_v)^infinity via an extra variable and lex elimination.
Ideal saturate_by_variable(const Ideal& I, int v, const Budget& budget = {});

// Initial ideal of lowest-degree forms at the origin. Output generators are
// homogeneous, canonically scaled, deduplicated, deterministically ordered.
Ideal tangent_cone_ideal(const Ideal& I, const Budget& budget = {});

// Z(A) subset of Z(B), decided by radical membership of B's generators.
bool variety_subset(const Ideal& A, const Ideal& B, const Budget& budget = {});
bool variety_equal(const Ideal& A, const Ideal& B, const Budget& budget = {});

// Z(I) subset of the union of linear subspaces given by their defining forms
// (one list per component), optionally with {0} as an extra member of the
// union. Checked on products of one form per component over all choices.
bool variety_subset_union(const Ideal& I, const std::vector<std::vector<Polynomial>>& comp_forms,
                          bool allow_origin, const Budget& budget = {});

}  // namespace jumploci
