#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jumploci/graph.hpp"
#include "jumploci/obstructions.hpp"
#include "jumploci/presentation.hpp"

namespace jumploci {

// One commutator relator per edge; generator names are the vertex names.
GroupPresentation raag_presentation(const Graph& g);

// All W with induced subgraph disconnected and no disconnected proper
// superset. Each subset sorted; list sorted lexicographically. Throws
// input_error past 24 vertices.
std::vector<std::vector<int>> maximal_disconnected_subsets(const Graph& g);

// Coordinate subspace C^W per maximal disconnected W, isotropy computed
// through the group's cup structure.
std::vector<Component> raag_resonance_components(const Graph& g);

// Subtorus {t : t_v = 1 for v outside W}, same W list.
struct TorusComponent {
  std::vector<int> support;
  std::vector<Polynomial> equations;  // t_v - 1 in the character ring
};
std::vector<TorusComponent> raag_charvar_components(const Graph& g);

// Part sizes ascending when the complement's components are all cliques.
struct MultipartiteDecomp {
  bool yes = false;
  std::vector<int> parts;
  std::vector<std::vector<int>> part_vertices;
};
MultipartiteDecomp is_complete_multipartite(const Graph& g);

// Joins of discrete graphs are the products of free groups; a part of size
// one contributes Z, a part of size m contributes F_m.
std::string multipartite_structure(const MultipartiteDecomp& d);

struct SerreVerdict {
  bool quasi_kahler = false;
  MultipartiteDecomp decomp;
  std::string structure;
  // A maximal disconnected subset carrying an edge; present iff not
  // quasi-Kahler.
  std::vector<int> counter_witness;
};
SerreVerdict raag_serre_verdict(const Graph& g);

struct KahlerVerdict {
  bool kahler = false;
  std::string reason;
};
KahlerVerdict raag_kahler_verdict(const Graph& g);

// Vertices are the components of the odd-labeled subgraph, named by joining
// member names with '+'; an edge wherever any original edge crosses.
Graph odd_contraction(const LabeledGraph& lg);

struct MalcevVerdict {
  bool pass = false;
  Graph contraction;
  MultipartiteDecomp decomp;
  std::vector<int> counter_witness;  // in contraction indices, when failing
};
MalcevVerdict artin_malcev_verdict(const LabeledGraph& lg);

}  // namespace jumploci
