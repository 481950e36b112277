#pragma once

#include <string>
#include <vector>

#include "jumploci/groebner.hpp"
#include "jumploci/magnus.hpp"
#include "jumploci/presentation.hpp"

namespace jumploci {

// Bundled fixtures. Presentations are stored as source text in the
// presentation file format and parsed on demand.
std::vector<std::string> corpus_presentation_names();
std::vector<std::string> corpus_cup_names();
std::vector<std::string> corpus_ideal_names();

bool corpus_has_presentation(const std::string& name);
bool corpus_has_cup(const std::string& name);
bool corpus_has_ideal(const std::string& name);

// All throw input_error for unknown names.
std::string corpus_presentation_text(const std::string& name);
GroupPresentation corpus_presentation(const std::string& name);
CupStructure corpus_cup(const std::string& name);
Ideal corpus_ideal(const std::string& name);

}  // namespace jumploci
