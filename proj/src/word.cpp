#include "jumploci/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace jumploci {

Word word_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Syllable& s : w) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

Word word_mul(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return word_reduce(std::move(w));
}

Word word_inv(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->exp});
  return out;
}

Word word_pow(const Word& w, int k) {
  if (k == 0) return {};
  Word base = k > 0 ? w : word_inv(w);
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out = word_mul(out, base);
  return out;
}

Word word_commutator(const Word& u, const Word& v) {
  return word_mul(word_mul(u, v), word_mul(word_inv(u), word_inv(v)));
}

int word_exponent_sum(const Word& w, int gen) {
  int s = 0;
  for (const Syllable& syl : w)
    if (syl.gen == gen) s += syl.exp;
  return s;
}

int word_length(const Word& w) {
  int n = 0;
  for (const Syllable& syl : w) n += std::abs(syl.exp);
  return n;
}

int word_max_gen(const Word& w) {
  int m = -1;
  for (const Syllable& syl : w) m = std::max(m, syl.gen);
  return m;
}

}  // namespace jumploci
