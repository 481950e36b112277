#include "jumploci/combinators.hpp"

#include <set>

namespace jumploci {

namespace {

GroupPresentation merge_generators(const GroupPresentation& p1, const GroupPresentation& p2,
                                   const std::string& joiner) {
  GroupPresentation out;
  out.name = p1.name + joiner + p2.name;
  std::set<std::string> names1(p1.gens.begin(), p1.gens.end());
  bool clash = false;
  for (const auto& g : p2.gens)
    if (names1.count(g)) { clash = true; break; }
  for (const auto& g : p1.gens) out.gens.push_back(clash ? "a." + g : g);
  for (const auto& g : p2.gens) out.gens.push_back(clash ? "b." + g : g);
  const int s1 = static_cast<int>(p1.gens.size());
  out.rels = p1.rels;
  for (Word w : p2.rels) {
    for (Syllable& s : w) s.gen += s1;
    out.rels.push_back(std::move(w));
  }
  return out;
}

}  // namespace

GroupPresentation free_product(const GroupPresentation& p1, const GroupPresentation& p2) {
  return merge_generators(p1, p2, "*");
}

GroupPresentation direct_product(const GroupPresentation& p1, const GroupPresentation& p2) {
  GroupPresentation out = merge_generators(p1, p2, "x");
  const int s1 = static_cast<int>(p1.gens.size());
  const int s2 = static_cast<int>(p2.gens.size());
  for (int i = 0; i < s1; ++i)
    for (int j = 0; j < s2; ++j)
      out.rels.push_back(word_commutator({{i, 1}}, {{s1 + j, 1}}));
  return out;
}

}  // namespace jumploci
