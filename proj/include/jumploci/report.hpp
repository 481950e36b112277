#pragma once

#include <string>
#include <vector>

#include "jumploci/artin.hpp"
#include "jumploci/formality.hpp"
#include "jumploci/loci.hpp"
#include "jumploci/obstructions.hpp"

namespace jumploci {

// Reduced Groebner basis rendered as strings: the canonical generator list
// every report uses, so identical inputs give byte-identical output.
std::vector<std::string> ideal_generator_strings(const Ideal& I, const Budget& budget = {});

// Keys: kind, k, vars, generators, then identity_member (characteristic
// kind) or origin_included, then notes when nonempty.
std::string locus_report_json(const JumpingLocus& L, const std::vector<std::string>& notes = {},
                              const Budget& budget = {});
std::string locus_report_text(const JumpingLocus& L, const std::vector<std::string>& notes = {},
                              const Budget& budget = {});

// {"vars": [...], "gens": [...]} with polynomial strings.
std::string ideal_json(const Ideal& I);
Ideal parse_ideal_json(const std::string& text, Order ord = Order::grevlex);

std::string formality_report_json(const FormalityReport& r,
                                  const std::vector<std::string>& notes = {});
std::string formality_report_text(const FormalityReport& r,
                                  const std::vector<std::string>& notes = {});

std::string obstruction_report_json(const ObstructionReport& r);
std::string obstruction_report_text(const ObstructionReport& r);

struct RaagReport {
  std::string graph_name;
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> subsets;
  std::vector<std::string> component_classes;
  SerreVerdict serre;
  KahlerVerdict kahler;
  std::vector<std::string> notes;
};
std::string raag_report_json(const RaagReport& r);
std::string raag_report_text(const RaagReport& r);

struct ArtinReport {
  std::string graph_name;
  MalcevVerdict malcev;
  std::vector<std::string> notes;
};
std::string artin_report_json(const ArtinReport& r);
std::string artin_report_text(const ArtinReport& r);

}  // namespace jumploci
