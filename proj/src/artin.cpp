#include "jumploci/artin.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "jumploci/errors.hpp"
#include "jumploci/magnus.hpp"
#include "jumploci/word.hpp"

namespace jumploci {

GroupPresentation raag_presentation(const Graph& g) {
  GroupPresentation p;
  p.name = g.name;
  p.gens = g.vertices;
  for (const auto& e : g.edges)
    p.rels.push_back(word_commutator({{e.first, 1}}, {{e.second, 1}}));
  return p;
}

namespace {

// Component of `seed` inside the induced subgraph on mask W.
uint32_t mask_component(uint32_t seed, uint32_t W, const std::vector<uint32_t>& adj) {
  uint32_t C = seed & W;
  while (true) {
    uint32_t nb = 0;
    for (uint32_t rest = C; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      nb |= adj[v];
    }
    uint32_t grown = C | (nb & W);
    if (grown == C) return C;
    C = grown;
  }
}

std::vector<int> mask_bits(uint32_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> maximal_disconnected_subsets(const Graph& g) {
  int n = g.order();
  if (n > 24) throw input_error("subset enumeration capped at 24 vertices");
  std::vector<uint32_t> adj(n, 0);
  for (const auto& e : g.edges) {
    adj[e.first] |= 1u << e.second;
    adj[e.second] |= 1u << e.first;
  }
  std::vector<std::vector<int>> out;
  for (uint32_t W = 3; W < (1u << n); ++W) {
    if (std::popcount(W) < 2) continue;
    uint32_t lo = W & (0u - W);
    uint32_t C = mask_component(lo, W, adj);
    if (C == W) continue;
    // A maximal W is C plus exactly the vertices with no neighbor in C.
    uint32_t B = 0;
    for (int v = 0; v < n; ++v)
      if (!((C >> v) & 1) && (adj[v] & C) == 0) B |= 1u << v;
    if ((C | B) != W) continue;
    // Full check: every outside vertex must reconnect all components.
    std::vector<uint32_t> comps;
    for (uint32_t rest = W; rest;) {
      uint32_t K = mask_component(rest & (0u - rest), W, adj);
      comps.push_back(K);
      rest &= ~K;
    }
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if ((W >> v) & 1) continue;
      for (uint32_t K : comps)
        if ((adj[v] & K) == 0) {
          maximal = false;
          break;
        }
    }
    if (maximal) out.push_back(mask_bits(W));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Component> raag_resonance_components(const Graph& g) {
  CupStructure c = cup_structure(raag_presentation(g));
  std::vector<Component> comps;
  for (const auto& W : maximal_disconnected_subsets(g)) {
    QMat basis;
    for (int v : W) {
      QVec row(g.order(), Q(0));
      row[v] = 1;
      basis.push_back(row);
    }
    Component comp;
    comp.space = make_subspace(g.order(), basis);
    comp.cls = isotropy_classify(comp.space, c);
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<TorusComponent> raag_charvar_components(const Graph& g) {
  Ring T = make_ring("t", g.order());
  std::vector<TorusComponent> out;
  for (const auto& W : maximal_disconnected_subsets(g)) {
    TorusComponent tc;
    tc.support = W;
    for (int v = 0; v < g.order(); ++v)
      if (!std::binary_search(W.begin(), W.end(), v))
        tc.equations.push_back(psub(T, poly_var(T, v), poly_one(T)));
    out.push_back(std::move(tc));
  }
  return out;
}

MultipartiteDecomp is_complete_multipartite(const Graph& g) {
  MultipartiteDecomp d;
  Graph co = graph_complement(g);
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  auto comps = induced_components(co, all);
  for (const auto& part : comps)
    for (size_t i = 0; i < part.size(); ++i)
      for (size_t j = i + 1; j < part.size(); ++j)
        if (!co.adjacent(part[i], part[j])) return d;  // not a clique: no
  d.yes = true;
  d.part_vertices = comps;
  std::sort(d.part_vertices.begin(), d.part_vertices.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (const auto& part : d.part_vertices) d.parts.push_back(static_cast<int>(part.size()));
  return d;
}

std::string multipartite_structure(const MultipartiteDecomp& d) {
  std::string out;
  for (size_t i = 0; i < d.parts.size(); ++i) {
    if (i) out += " × ";
    out += d.parts[i] == 1 ? "Z" : "F_" + std::to_string(d.parts[i]);
  }
  return out;
}

SerreVerdict raag_serre_verdict(const Graph& g) {
  SerreVerdict v;
  v.decomp = is_complete_multipartite(g);
  v.quasi_kahler = v.decomp.yes;
  if (v.decomp.yes) {
    v.structure = multipartite_structure(v.decomp);
    return v;
  }
  for (const auto& W : maximal_disconnected_subsets(g)) {
    bool has_edge = false;
    for (size_t i = 0; i < W.size() && !has_edge; ++i)
      for (size_t j = i + 1; j < W.size(); ++j)
        if (g.adjacent(W[i], W[j])) {
          has_edge = true;
          break;
        }
    if (has_edge) {
      v.counter_witness = W;
      break;
    }
  }
  return v;
}

KahlerVerdict raag_kahler_verdict(const Graph& g) {
  KahlerVerdict v;
  if (!graph_is_complete(g)) {
    v.reason = "graph is not complete";
  } else if (g.order() % 2 != 0) {
    v.reason = "odd number of vertices";
  } else {
    v.kahler = true;
    v.reason = "complete graph on an even number of vertices";
  }
  return v;
}

Graph odd_contraction(const LabeledGraph& lg) {
  const Graph& g = lg.g;
  Graph odd;
  odd.vertices = g.vertices;
  for (const auto& [e, label] : lg.labels)
    if (label % 2 != 0) odd.edges.insert(e);
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  auto comps = induced_components(odd, all);

  Graph out;
  out.name = g.name.empty() ? "" : g.name + ".odd";
  std::vector<int> comp_of(g.order(), -1);
  for (size_t c = 0; c < comps.size(); ++c) {
    std::string nm;
    for (int v : comps[c]) {
      if (!nm.empty()) nm += "+";
      nm += g.vertices[v];
      comp_of[v] = static_cast<int>(c);
    }
    out.vertices.push_back(nm);
  }
  for (const auto& e : g.edges) {
    int a = comp_of[e.first], b = comp_of[e.second];
    if (a != b) out.edges.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

MalcevVerdict artin_malcev_verdict(const LabeledGraph& lg) {
  MalcevVerdict v;
  v.contraction = odd_contraction(lg);
  v.decomp = is_complete_multipartite(v.contraction);
  v.pass = v.decomp.yes;
  if (!v.pass) {
    for (const auto& W : maximal_disconnected_subsets(v.contraction)) {
      bool has_edge = false;
      for (size_t i = 0; i < W.size() && !has_edge; ++i)
        for (size_t j = i + 1; j < W.size(); ++j)
          if (v.contraction.adjacent(W[i], W[j])) {
            has_edge = true;
            break;
          }
      if (has_edge) {
        v.counter_witness = W;
        break;
      }
    }
  }
  return v;
}

}  // namespace jumploci
