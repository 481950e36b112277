#pragma once

#include <string>
#include <vector>

#include "jumploci/word.hpp"

namespace jumploci {

struct GroupPresentation {
  std::string name;
  std::vector<std::string> gens;  // distinct identifiers
  std::vector<Word> rels;         // freely reduced, indices < gens.size()
};

// Grammar (line-oriented, '#' starts a comment):
//   group NAME          (optional)
//   gens IDENT+
//   rel WORD            (zero or more)
// WORD := TERM+ ; TERM := IDENT ("^" INT)? | "(" WORD "," WORD ")"
// (u,v) is the commutator u v u^-1 v^-1.
GroupPresentation parse_presentation(const std::string& text);

std::string presentation_str(const GroupPresentation& p);
std::string word_str(const GroupPresentation& p, const Word& w);

int gen_index(const GroupPresentation& p, const std::string& name);  // -1 if absent

}  // namespace jumploci
