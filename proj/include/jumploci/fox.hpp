#pragma once

#include <map>

#include "jumploci/word.hpp"

namespace jumploci {

// Element of the integral group ring of a free group: word -> coefficient,
// no zero coefficients stored.
using GroupRingElt = std::map<Word, long long>;

void gr_add_term(GroupRingElt& e, const Word& w, long long c);
GroupRingElt gr_of_word(const Word& w);
GroupRingElt gr_int(long long c);
GroupRingElt gr_add(const GroupRingElt& a, const GroupRingElt& b);
GroupRingElt gr_sub(const GroupRingElt& a, const GroupRingElt& b);
GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b);
bool gr_is_zero(const GroupRingElt& e);

// Sum of coefficients (image under the augmentation map).
long long gr_augmentation(const GroupRingElt& e);

// The derivation with d(x_i)/d(x_i) = 1, d(x_j)/d(x_i) = 0 for j != i,
// and d(uv) = d(u) + u d(v); hence d(x^-1) = -x^-1.
GroupRingElt fox_derivative(const Word& w, int i);

}  // namespace jumploci
