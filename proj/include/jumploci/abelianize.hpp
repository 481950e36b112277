#pragma once

#include <vector>

#include "jumploci/fox.hpp"
#include "jumploci/laurent.hpp"
#include "jumploci/presentation.hpp"
#include "jumploci/snf.hpp"

namespace jumploci {

// Smith-form data for G_ab = Z^s / (row span of the relator exponent matrix).
// basis_change is the unimodular U with U * E^T * V = D; the free part of
// generator i is column i of U restricted to the rows past the SNF rank.
struct AbelianizationData {
  int rank_b1 = 0;
  std::vector<Z> torsion_orders;  // SNF diagonal entries > 1
  ZMat basis_change;
  int snf_rank = 0;
  std::vector<std::vector<Z>> gen_free_image;  // per generator, rank_b1 coords
};

AbelianizationData abelianize_presentation(const GroupPresentation& p);

// Image of a word in the free part of G_ab (torsion quotiented away).
std::vector<Z> ab_word(const AbelianizationData& d, const Word& w);

// t1..t_b1 in the given order.
Ring character_ring(const AbelianizationData& d, Order ord = Order::grevlex);

// Image of a group-ring element under x_i -> t^{ab(x_i)}.
LaurentEntry ab_group_ring(const Ring& R, const AbelianizationData& d, const GroupRingElt& e);

// r x s matrix of abelianized Fox derivatives, rows = relators.
// Throws input_error("trivial character torus") when b1 = 0.
LaurentMatrix abelianized_alexander_matrix(const GroupPresentation& p,
                                           const AbelianizationData& d,
                                           Order ord = Order::grevlex);
LaurentMatrix abelianized_alexander_matrix(const GroupPresentation& p,
                                           Order ord = Order::grevlex);

}  // namespace jumploci
