#include "jumploci/obstructions.hpp"

#include <sstream>

#include "jumploci/errors.hpp"
#include "jumploci/formality.hpp"
#include "jumploci/idealops.hpp"
#include "jumploci/resonance.hpp"

namespace jumploci {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "n/a";
  }
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::vector<ComponentSpec> parse_component_file(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int ambient = 0;
  bool have_ambient = false;
  std::vector<ComponentSpec> specs;
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    if (!have_ambient) {
      if (toks.size() != 2 || toks[0] != "ambient")
        throw parse_error("expected 'ambient n'", lineno, 1);
      try {
        ambient = std::stoi(toks[1]);
      } catch (const std::exception&) {
        throw parse_error("bad ambient dimension", lineno, 1);
      }
      if (ambient < 1) throw parse_error("ambient dimension must be positive", lineno, 1);
      have_ambient = true;
      continue;
    }
    if (toks[0] != "comp") throw parse_error("expected 'comp' line", lineno, 1);
    if (toks.size() < 3 || toks[1].rfind("p=", 0) != 0)
      throw parse_error("expected 'p=<0|1|?>'", lineno, 1);
    std::string pval = toks[1].substr(2);
    ComponentSpec spec;
    if (pval == "0")
      spec.declared_p = 0;
    else if (pval == "1")
      spec.declared_p = 1;
    else if (pval != "?")
      throw parse_error("p must be 0, 1 or ?", lineno, 1);
    if (toks[2] != "basis:") throw parse_error("expected 'basis:'", lineno, 1);
    QMat vectors;
    QVec cur;
    for (size_t i = 3; i < toks.size(); ++i) {
      std::string tok = toks[i];
      // ';' separates vectors and may be glued to a number.
      while (true) {
        auto pos = tok.find(';');
        std::string head = pos == std::string::npos ? tok : tok.substr(0, pos);
        if (!head.empty()) {
          try {
            cur.push_back(parse_rational(head));
          } catch (const std::exception&) {
            throw parse_error("bad rational '" + head + "'", lineno, 1);
          }
        }
        if (pos == std::string::npos) break;
        if (cur.empty()) throw parse_error("empty basis vector", lineno, 1);
        vectors.push_back(cur);
        cur.clear();
        tok = tok.substr(pos + 1);
        if (tok.empty()) break;
      }
    }
    if (!cur.empty()) vectors.push_back(cur);
    if (vectors.empty()) throw parse_error("component needs at least one vector", lineno, 1);
    for (const auto& v : vectors)
      if (static_cast<int>(v.size()) != ambient)
        throw parse_error("vector length does not match ambient dimension", lineno, 1);
    spec.space = make_subspace(ambient, vectors);
    if (spec.space.dim() == 0)
      throw parse_error("component is zero-dimensional", lineno, 1);
    specs.push_back(std::move(spec));
  }
  if (!have_ambient) throw parse_error("missing 'ambient' line", lineno == 0 ? 1 : lineno, 1);
  return specs;
}

std::vector<Component> classify_components(const std::vector<ComponentSpec>& specs,
                                           const CupStructure& c,
                                           std::vector<std::string>* notes) {
  std::vector<Component> comps;
  for (size_t i = 0; i < specs.size(); ++i) {
    Component comp;
    comp.space = specs[i].space;
    comp.cls = isotropy_classify(comp.space, c);
    bool mismatch = specs[i].declared_p && (comp.cls == IsotropyClass::neither ||
                                            *specs[i].declared_p != isotropy_p(comp.cls));
    if (mismatch && notes) {
      notes->push_back("component " + std::to_string(i + 1) + " declared p=" +
                       std::to_string(*specs[i].declared_p) + " but classifies as " +
                       isotropy_str(comp.cls));
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

PositionResult position_check(const std::vector<Component>& comps, const CupStructure&) {
  PositionResult res;
  bool iso_ok = true;
  bool any_neither = false;
  bool dim_ok = true;
  for (const auto& comp : comps) {
    if (comp.cls == IsotropyClass::neither) {
      any_neither = true;
      iso_ok = false;
      continue;
    }
    if (comp.space.dim() < 2 * isotropy_p(comp.cls) + 2) {
      iso_ok = false;
      dim_ok = false;
    }
  }
  res.isotropicity = iso_ok ? Verdict::pass : Verdict::fail;
  res.dim_bound = !dim_ok ? Verdict::fail
                          : (any_neither ? Verdict::not_applicable : Verdict::pass);
  bool gen_ok = true;
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t j = i + 1; j < comps.size(); ++j)
      if (subspace_intersect(comps[i].space, comps[j].space).dim() > 0) {
        gen_ok = false;
        res.bad_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
  res.genericity = gen_ok ? Verdict::pass : Verdict::fail;
  return res;
}

CoverageResult component_cover_verify(const std::vector<Subspace>& comps, const JumpingLocus& L,
                                      const Budget& budget) {
  const Ring& R = L.ideal.ring;
  CoverageResult res;
  // (a) each subspace lies in the zero set: substitute a parametrization.
  for (size_t idx = 0; idx < comps.size(); ++idx) {
    const Subspace& V = comps[idx];
    if (V.n != R.n) throw input_error("component ambient dimension mismatch");
    if (V.dim() == 0) throw input_error("zero-dimensional component");
    Ring S = make_ring("s", V.dim(), R.ord);
    std::vector<Polynomial> images;
    for (int i = 0; i < R.n; ++i) {
      Polynomial im = poly_zero(S);
      for (int j = 0; j < V.dim(); ++j)
        im = padd(S, im, pscale(poly_var(S, j), V.basis[j][i]));
      images.push_back(im);
    }
    for (const auto& g : L.ideal.gens) {
      if (!poly_substitute(R, g, S, images).is_zero()) {
        res.verdict = Verdict::fail;
        res.reason = "component " + std::to_string(idx + 1) + " is not inside the variety";
        return res;
      }
    }
  }
  // (c) irredundancy before the expensive direction.
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t j = 0; j < comps.size(); ++j)
      if (i != j && subspace_leq(comps[i], comps[j])) {
        res.verdict = Verdict::fail;
        res.reason = "component " + std::to_string(i + 1) + " is contained in component " +
                     std::to_string(j + 1);
        return res;
      }
  // (b) the variety is inside the union of the subspaces (plus the origin
  // when the locus includes it).
  std::vector<std::vector<Polynomial>> forms;
  for (const auto& V : comps) forms.push_back(defining_forms(R, V));
  if (!variety_subset_union(L.ideal, forms, L.origin_included, budget)) {
    res.verdict = Verdict::fail;
    res.reason = "variety is not covered by the listed components";
    return res;
  }
  res.verdict = Verdict::pass;
  return res;
}

FiltrationResult filtration_check(const std::vector<Component>& comps, const CupStructure& c,
                                  int kmax, const Budget& budget) {
  FiltrationResult res;
  if (kmax <= 0 || kmax > c.n) kmax = c.n;
  res.kmax = kmax;
  Ring Rz = resonance_ring(c);
  for (int k = 1; k <= kmax; ++k) {
    JumpingLocus Rk = resonance_ideal(c, k);
    std::vector<const Component*> qual;
    for (const auto& comp : comps)
      if (comp.space.dim() > k + isotropy_p(comp.cls)) qual.push_back(&comp);
    Ideal U = irrelevant_ideal(Rz);
    for (size_t i = 0; i < qual.size(); ++i) {
      Ideal Ci = make_ideal(Rz, defining_forms(Rz, qual[i]->space));
      U = i == 0 ? Ci : ideal_product(U, Ci);
    }
    if (!variety_equal(with_origin_adjoined(Rk.ideal), with_origin_adjoined(U), budget)) {
      res.verdict = Verdict::fail;
      res.first_failed_k = k;
      return res;
    }
  }
  res.verdict = Verdict::pass;
  return res;
}

ObstructionReport obstruction_battery(const CupStructure& cup,
                                      const std::vector<ComponentSpec>& specs, int kmax,
                                      const std::optional<GroupPresentation>& pres,
                                      const Budget& budget) {
  ObstructionReport rep;
  std::vector<Component> comps = classify_components(specs, cup, &rep.notes);
  for (const auto& comp : comps) rep.component_classes.push_back(isotropy_str(comp.cls));

  JumpingLocus R1 = resonance_ideal(cup, 1);
  std::vector<Subspace> spaces;
  for (const auto& comp : comps) spaces.push_back(comp.space);
  CoverageResult cov = component_cover_verify(spaces, R1, budget);
  rep.coverage = cov.verdict;
  if (!cov.reason.empty()) rep.notes.push_back("coverage: " + cov.reason);

  PositionResult pos = position_check(comps, cup);
  rep.isotropicity = pos.isotropicity;
  rep.dim_bound = pos.dim_bound;
  rep.genericity = pos.genericity;
  for (auto [i, j] : pos.bad_pairs)
    rep.notes.push_back("genericity: components " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " have nonzero intersection");

  if (rep.coverage == Verdict::pass) {
    FiltrationResult filt = filtration_check(comps, cup, kmax, budget);
    rep.filtration = filt.verdict;
    rep.filtration_failed_k = filt.first_failed_k;
    if (filt.verdict == Verdict::fail)
      rep.notes.push_back("filtration: depth " + std::to_string(filt.first_failed_k) +
                          " resonance does not match the qualifying components");
  } else {
    rep.notes.push_back("filtration: skipped, component list does not verify as a cover");
  }

  if (pres) {
    FormalityReport fr = formality_test(*pres, cup, kmax, budget);
    rep.tangent_cone = fr.obstructed ? Verdict::fail : Verdict::pass;
  }

  rep.free_quotient = free_quotient_test(cup, budget);
  rep.free_hint = pres ? free_group_hint(*pres) : false;

  if (rep.tangent_cone == Verdict::fail) {
    rep.overall = "1-formality obstructed";
    rep.exit_code = 2;
  } else if (rep.coverage == Verdict::fail) {
    rep.overall = "inconclusive";
    rep.exit_code = 3;
  } else if (rep.isotropicity == Verdict::fail || rep.dim_bound == Verdict::fail ||
             rep.genericity == Verdict::fail || rep.filtration == Verdict::fail) {
    rep.overall = "quasi-Kähler obstructed (assuming 1-formal)";
    rep.exit_code = 2;
  } else {
    rep.overall = "consistent";
    rep.exit_code = 0;
  }
  return rep;
}

}  // namespace jumploci
