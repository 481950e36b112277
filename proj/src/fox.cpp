#include "jumploci/fox.hpp"

namespace jumploci {

void gr_add_term(GroupRingElt& e, const Word& w, long long c) {
  if (c == 0) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) e.erase(it);
}

GroupRingElt gr_of_word(const Word& w) {
  GroupRingElt e;
  e.emplace(w, 1);
  return e;
}

GroupRingElt gr_int(long long c) {
  GroupRingElt e;
  if (c != 0) e.emplace(Word{}, c);
  return e;
}

GroupRingElt gr_add(const GroupRingElt& a, const GroupRingElt& b) {
  GroupRingElt out = a;
  for (const auto& [w, c] : b) gr_add_term(out, w, c);
  return out;
}

GroupRingElt gr_sub(const GroupRingElt& a, const GroupRingElt& b) {
  GroupRingElt out = a;
  for (const auto& [w, c] : b) gr_add_term(out, w, -c);
  return out;
}

GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b) {
  GroupRingElt out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) gr_add_term(out, word_mul(wa, wb), ca * cb);
  return out;
}

bool gr_is_zero(const GroupRingElt& e) { return e.empty(); }

long long gr_augmentation(const GroupRingElt& e) {
  long long s = 0;
  for (const auto& [w, c] : e) s += c;
  return s;
}

GroupRingElt fox_derivative(const Word& w, int i) {
  GroupRingElt out;
  Word prefix;
  for (const Syllable& syl : w) {
    if (syl.gen == i) {
      // d(g^e)/dg = 1 + g + ... + g^{e-1} for e > 0,
      //             -(g^-1 + ... + g^e)   for e < 0.
      if (syl.exp > 0) {
        for (int j = 0; j < syl.exp; ++j)
          gr_add_term(out, word_mul(prefix, word_pow({{syl.gen, 1}}, j)), 1);
      } else {
        for (int j = 1; j <= -syl.exp; ++j)
          gr_add_term(out, word_mul(prefix, word_pow({{syl.gen, 1}}, -j)), -1);
      }
    }
    prefix = word_mul(prefix, {{syl.gen, syl.exp}});
  }
  return out;
}

}  // namespace jumploci
