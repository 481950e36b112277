#pragma once

#include <compare>
#include <vector>

namespace jumploci {

// One syllable g^e of a free-group word; e is never 0 in reduced form.
struct Syllable {
  int gen = 0;
  int exp = 0;

  auto operator<=>(const Syllable&) const = default;
};

// Freely reduced word: adjacent syllables never share a generator.
using Word = std::vector<Syllable>;

Word word_reduce(Word w);
Word word_mul(const Word& a, const Word& b);
Word word_inv(const Word& w);
Word word_pow(const Word& w, int k);

// (u,v) = u v u^-1 v^-1
Word word_commutator(const Word& u, const Word& v);

int word_exponent_sum(const Word& w, int gen);
int word_length(const Word& w);  // total letter count, sum of |exp|
int word_max_gen(const Word& w);  // largest generator index, -1 if empty

}  // namespace jumploci
