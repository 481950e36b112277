#include "jumploci/report.hpp"

#include <sstream>

#include "json.hpp"
#include "jumploci/errors.hpp"

namespace jumploci {

using ordered_json = nlohmann::ordered_json;

std::string locus_kind_str(LocusKind k) {
  switch (k) {
    case LocusKind::characteristic:
      return "characteristic";
    case LocusKind::resonance:
      return "resonance";
    default:
      return "tangent-cone";
  }
}

std::vector<std::string> ideal_generator_strings(const Ideal& I, const Budget& budget) {
  std::vector<std::string> out;
  for (const auto& g : groebner(I, budget)) out.push_back(poly_str(I.ring, g));
  return out;
}

namespace {

const char* point_flag_key(const JumpingLocus& L) {
  return L.kind == LocusKind::characteristic ? "identity_member" : "origin_included";
}

std::string subset_names(const std::vector<std::string>& vertices, const std::vector<int>& W) {
  std::string out = "{";
  for (size_t i = 0; i < W.size(); ++i) {
    if (i) out += ",";
    out += vertices[W[i]];
  }
  return out + "}";
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string locus_report_json(const JumpingLocus& L, const std::vector<std::string>& notes,
                              const Budget& budget) {
  ordered_json j;
  j["kind"] = locus_kind_str(L.kind);
  j["k"] = L.k;
  j["vars"] = L.ideal.ring.names;
  j["generators"] = ideal_generator_strings(L.ideal, budget);
  j[point_flag_key(L)] = L.origin_included;
  if (!notes.empty()) j["notes"] = notes;
  return dump(j);
}

std::string locus_report_text(const JumpingLocus& L, const std::vector<std::string>& notes,
                              const Budget& budget) {
  std::ostringstream out;
  out << "kind: " << locus_kind_str(L.kind) << "\n";
  out << "k: " << L.k << "\n";
  out << "vars:";
  for (const auto& v : L.ideal.ring.names) out << " " << v;
  out << "\n";
  auto gens = ideal_generator_strings(L.ideal, budget);
  if (gens.empty()) {
    out << "generators: (zero ideal)\n";
  } else {
    out << "generators:\n";
    for (const auto& g : gens) out << "  " << g << "\n";
  }
  out << point_flag_key(L) << ": " << (L.origin_included ? "true" : "false") << "\n";
  for (const auto& n : notes) out << "note: " << n << "\n";
  return out.str();
}

std::string ideal_json(const Ideal& I) {
  ordered_json j;
  j["vars"] = I.ring.names;
  std::vector<std::string> gens;
  for (const auto& g : I.gens) gens.push_back(poly_str(I.ring, g));
  j["gens"] = gens;
  return dump(j);
}

Ideal parse_ideal_json(const std::string& text, Order ord) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw input_error(std::string("bad ideal JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
    throw input_error("ideal JSON needs 'vars' and 'gens'");
  std::vector<std::string> names;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw input_error("ideal JSON vars must be strings");
    names.push_back(v.get<std::string>());
  }
  if (names.empty()) throw input_error("ideal JSON needs at least one variable");
  Ring R = make_ring(names, ord);
  std::vector<Polynomial> gens;
  for (const auto& g : j["gens"]) {
    if (!g.is_string()) throw input_error("ideal JSON gens must be strings");
    gens.push_back(parse_poly(R, g.get<std::string>()));
  }
  return make_ideal(R, gens);
}

std::string formality_report_json(const FormalityReport& r, const std::vector<std::string>& notes) {
  ordered_json j;
  j["kind"] = "formality";
  j["kmax"] = r.kmax;
  std::vector<std::string> per_k;
  for (auto v : r.per_k) per_k.push_back(verdict_str(v));
  j["per_k"] = per_k;
  j["verdict"] = r.verdict;
  if (!notes.empty()) j["notes"] = notes;
  return dump(j);
}

std::string formality_report_text(const FormalityReport& r, const std::vector<std::string>& notes) {
  std::ostringstream out;
  out << "tangent cone formality test, kmax = " << r.kmax << "\n";
  for (size_t i = 0; i < r.per_k.size(); ++i)
    out << "  k=" << (i + 1) << ": " << verdict_str(r.per_k[i]) << "\n";
  out << "verdict: " << r.verdict << "\n";
  for (const auto& n : notes) out << "note: " << n << "\n";
  return out.str();
}

std::string obstruction_report_json(const ObstructionReport& r) {
  ordered_json j;
  j["kind"] = "quasi-kahler-obstructions";
  j["coverage"] = verdict_str(r.coverage);
  j["isotropicity"] = verdict_str(r.isotropicity);
  j["dim_bound"] = verdict_str(r.dim_bound);
  j["genericity"] = verdict_str(r.genericity);
  j["filtration"] = verdict_str(r.filtration);
  if (r.filtration == Verdict::fail) j["filtration_failed_k"] = r.filtration_failed_k;
  j["tangent_cone"] = verdict_str(r.tangent_cone);
  j["component_classes"] = r.component_classes;
  j["free_quotient"] = r.free_quotient;
  j["free_hint"] = r.free_hint;
  j["overall"] = r.overall;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return dump(j);
}

std::string obstruction_report_text(const ObstructionReport& r) {
  std::ostringstream out;
  out << "quasi-Kähler obstruction battery\n";
  out << "  coverage: " << verdict_str(r.coverage) << "\n";
  out << "  isotropicity: " << verdict_str(r.isotropicity) << "\n";
  out << "  dim_bound: " << verdict_str(r.dim_bound) << "\n";
  out << "  genericity: " << verdict_str(r.genericity) << "\n";
  out << "  filtration: " << verdict_str(r.filtration);
  if (r.filtration == Verdict::fail) out << " (first failure at k=" << r.filtration_failed_k << ")";
  out << "\n";
  out << "  tangent_cone: " << verdict_str(r.tangent_cone) << "\n";
  out << "component classes:";
  if (r.component_classes.empty()) out << " (none)";
  for (size_t i = 0; i < r.component_classes.size(); ++i)
    out << (i ? ", " : " ") << r.component_classes[i];
  out << "\n";
  out << "free quotient of rank >= 2: " << (r.free_quotient ? "yes" : "no")
      << " (under the quasi-Kähler and 1-formality hypotheses)\n";
  if (r.free_hint) out << "hint: cup structure is zero; if the group is 1-formal, it is free\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "overall: " << r.overall << "\n";
  return out.str();
}

std::string raag_report_json(const RaagReport& r) {
  ordered_json j;
  j["kind"] = "raag";
  j["graph"] = r.graph_name;
  j["vertices"] = r.vertices;
  std::vector<std::vector<std::string>> subsets;
  for (const auto& W : r.subsets) {
    std::vector<std::string> names;
    for (int v : W) names.push_back(r.vertices[v]);
    subsets.push_back(std::move(names));
  }
  j["maximal_disconnected_subsets"] = subsets;
  j["component_classes"] = r.component_classes;
  j["quasi_kahler"] = r.serre.quasi_kahler;
  if (r.serre.quasi_kahler) {
    j["parts"] = r.serre.decomp.parts;
    j["structure"] = r.serre.structure;
  } else {
    std::vector<std::string> cw;
    for (int v : r.serre.counter_witness) cw.push_back(r.vertices[v]);
    j["counter_witness"] = cw;
  }
  j["kahler"] = r.kahler.kahler;
  j["kahler_reason"] = r.kahler.reason;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return dump(j);
}

std::string raag_report_text(const RaagReport& r) {
  std::ostringstream out;
  out << "graph: " << (r.graph_name.empty() ? "(unnamed)" : r.graph_name) << "\n";
  out << "maximal disconnected subsets:";
  if (r.subsets.empty()) out << " (none)";
  for (size_t i = 0; i < r.subsets.size(); ++i)
    out << (i ? ", " : " ") << subset_names(r.vertices, r.subsets[i]);
  out << "\n";
  out << "component classes:";
  if (r.component_classes.empty()) out << " (none)";
  for (size_t i = 0; i < r.component_classes.size(); ++i)
    out << (i ? ", " : " ") << r.component_classes[i];
  out << "\n";
  if (r.serre.quasi_kahler) {
    out << "quasi-Kähler: yes (" << r.serre.structure << ")\n";
  } else {
    out << "quasi-Kähler: no (maximal disconnected subset "
        << subset_names(r.vertices, r.serre.counter_witness) << " contains an edge)\n";
  }
  out << "Kähler: " << (r.kahler.kahler ? "yes" : "no") << " (" << r.kahler.reason << ")\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string artin_report_json(const ArtinReport& r) {
  ordered_json j;
  j["kind"] = "artin";
  j["graph"] = r.graph_name;
  j["contraction_vertices"] = r.malcev.contraction.vertices;
  std::vector<std::vector<std::string>> edges;
  for (const auto& e : r.malcev.contraction.edges)
    edges.push_back(
        {r.malcev.contraction.vertices[e.first], r.malcev.contraction.vertices[e.second]});
  j["contraction_edges"] = edges;
  j["pass"] = r.malcev.pass;
  if (r.malcev.pass) {
    j["parts"] = r.malcev.decomp.parts;
  } else {
    std::vector<std::string> cw;
    for (int v : r.malcev.counter_witness) cw.push_back(r.malcev.contraction.vertices[v]);
    j["counter_witness"] = cw;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return dump(j);
}

std::string artin_report_text(const ArtinReport& r) {
  std::ostringstream out;
  out << "graph: " << (r.graph_name.empty() ? "(unnamed)" : r.graph_name) << "\n";
  out << "odd contraction vertices:";
  for (const auto& v : r.malcev.contraction.vertices) out << " " << v;
  out << "\n";
  out << "odd contraction edges:";
  if (r.malcev.contraction.edges.empty()) out << " (none)";
  for (const auto& e : r.malcev.contraction.edges)
    out << " (" << r.malcev.contraction.vertices[e.first] << ","
        << r.malcev.contraction.vertices[e.second] << ")";
  out << "\n";
  if (r.malcev.pass) {
    out << "Malcev quasi-Kähler test: pass (contraction is complete multipartite)\n";
  } else {
    out << "Malcev quasi-Kähler test: fail (contraction subset "
        << subset_names(r.malcev.contraction.vertices, r.malcev.counter_witness)
        << " contains an edge)\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace jumploci
