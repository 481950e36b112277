#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "jumploci/abelianize.hpp"
#include "jumploci/artin.hpp"
#include "jumploci/charvar.hpp"
#include "jumploci/corpus.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/formality.hpp"
#include "jumploci/fox.hpp"
#include "jumploci/graph.hpp"
#include "jumploci/idealops.hpp"
#include "jumploci/magnus.hpp"
#include "jumploci/obstructions.hpp"
#include "jumploci/report.hpp"
#include "jumploci/resonance.hpp"
#include "jumploci/snf.hpp"
#include "jumploci/tangent.hpp"
#include "jumploci/word.hpp"

namespace {

using namespace jumploci;

struct Opts {
  std::string corpus;
  std::string presentation;
  std::string cup;
  std::string components;
  std::string graph;
  std::string ideal;
  std::string point;
  std::string name;
  std::string run;
  int k = 1;
  int kmax = 0;
  std::string order = "grevlex";
  long budget_terms = 0;
  bool json = false;
  unsigned long long seed = 12345;
  int cases = 50;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Order order_of(const Opts& o) {
  if (o.order == "grevlex") return Order::grevlex;
  if (o.order == "lex") return Order::lex;
  throw input_error("unknown order '" + o.order + "'");
}

Budget budget_of(const Opts& o) {
  Budget b;
  if (o.budget_terms > 0) b.max_total_terms = o.budget_terms;
  return b;
}

GroupPresentation resolve_presentation(const Opts& o) {
  if (!o.corpus.empty()) return corpus_presentation(o.corpus);
  if (!o.presentation.empty()) return parse_presentation(slurp(o.presentation));
  throw input_error("need --corpus or --presentation");
}

// Cup structure from --cup, a corpus fixture, or the presentation's own
// quadratic data; a NAME-cup fixture backs presentations outside the
// commutator-relator class.
CupStructure resolve_cup(const Opts& o, std::vector<std::string>* notes) {
  if (!o.cup.empty()) return parse_cup_file(slurp(o.cup));
  if (!o.corpus.empty()) {
    if (corpus_has_cup(o.corpus)) return corpus_cup(o.corpus);
    GroupPresentation p = corpus_presentation(o.corpus);
    try {
      return cup_structure(p);
    } catch (const unsupported_presentation&) {
      if (corpus_has_cup(o.corpus + "-cup")) {
        if (notes) notes->push_back("using bundled cup structure '" + o.corpus + "-cup'");
        return corpus_cup(o.corpus + "-cup");
      }
      throw;
    }
  }
  if (!o.presentation.empty()) return cup_structure(parse_presentation(slurp(o.presentation)));
  throw input_error("need --corpus, --presentation or --cup");
}

int clamp_k(int k, int hi, const char* what, std::vector<std::string>* notes) {
  if (k < 0) {
    notes->push_back(std::string(what) + " raised to 0");
    return 0;
  }
  if (k > hi) {
    notes->push_back(std::string(what) + " clamped to " + std::to_string(hi));
    return hi;
  }
  return k;
}

std::vector<Q> parse_point(const std::string& text) {
  std::vector<Q> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(parse_rational(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(parse_rational(cur));
  if (out.empty()) throw input_error("empty point");
  return out;
}

int cmd_resonance(const Opts& o) {
  std::vector<std::string> notes;
  CupStructure c = resolve_cup(o, &notes);
  int k = clamp_k(o.k, c.n, "k", &notes);
  JumpingLocus L = resonance_ideal(c, k, order_of(o));
  std::cout << (o.json ? locus_report_json(L, notes, budget_of(o))
                       : locus_report_text(L, notes, budget_of(o)));
  return 0;
}

int cmd_charvar(const Opts& o) {
  std::vector<std::string> notes;
  GroupPresentation p = resolve_presentation(o);
  AbelianizationData d = abelianize_presentation(p);
  if (!o.point.empty()) {
    std::vector<Q> pt = parse_point(o.point);
    int depth = charvar_point_test(p, pt);
    if (o.json) {
      std::ostringstream out;
      out << "{\n  \"kind\": \"charvar-point\",\n  \"point\": [";
      for (size_t i = 0; i < pt.size(); ++i) out << (i ? ", " : "") << "\"" << q_str(pt[i]) << "\"";
      out << "],\n  \"depth\": " << depth << "\n}\n";
      std::cout << out.str();
    } else {
      std::cout << "point:";
      for (const auto& q : pt) std::cout << " " << q_str(q);
      std::cout << "\ndepth: " << depth << "\n";
    }
    return 0;
  }
  int k = clamp_k(o.k, d.rank_b1, "k", &notes);
  JumpingLocus L = charvar_ideal(p, d, k, order_of(o));
  std::cout << (o.json ? locus_report_json(L, notes, budget_of(o))
                       : locus_report_text(L, notes, budget_of(o)));
  return 0;
}

int cmd_tangent_cone(const Opts& o) {
  std::vector<std::string> notes;
  Budget budget = budget_of(o);
  JumpingLocus T;
  if (!o.ideal.empty() || (!o.corpus.empty() && corpus_has_ideal(o.corpus))) {
    Ideal I = o.ideal.empty() ? corpus_ideal(o.corpus) : parse_ideal_json(slurp(o.ideal), order_of(o));
    if (I.ring.ord != order_of(o)) I = with_order(I, order_of(o));
    std::vector<Q> origin(I.ring.n, Q(0));
    bool at_origin = true;
    for (const auto& g : I.gens)
      if (poly_eval(g, origin) != 0) at_origin = false;
    T.kind = LocusKind::tangent_cone;
    T.k = o.k;
    T.ideal = tangent_cone_ideal(I, budget);
    T.origin_included = at_origin;
    notes.push_back("cone taken at the origin of the input ideal");
  } else {
    GroupPresentation p = resolve_presentation(o);
    AbelianizationData d = abelianize_presentation(p);
    int k = clamp_k(o.k, d.rank_b1, "k", &notes);
    T = tangent_cone_at_identity(charvar_ideal(p, d, k, order_of(o)), budget);
  }
  std::cout << (o.json ? locus_report_json(T, notes, budget) : locus_report_text(T, notes, budget));
  return 0;
}

int cmd_formality(const Opts& o) {
  std::vector<std::string> notes;
  GroupPresentation p = resolve_presentation(o);
  AbelianizationData d = abelianize_presentation(p);
  CupStructure c = resolve_cup(o, &notes);
  int kmax = o.kmax > 0 ? clamp_k(o.kmax, d.rank_b1, "kmax", &notes) : 0;
  FormalityReport rep = formality_test(p, c, kmax, budget_of(o));
  if (free_group_hint(p))
    notes.push_back("cup structure is zero: if the group is 1-formal, it is free");
  std::cout << (o.json ? formality_report_json(rep, notes) : formality_report_text(rep, notes));
  return rep.obstructed ? 2 : 0;
}

int cmd_qkahler(const Opts& o) {
  std::vector<std::string> notes;
  CupStructure c = resolve_cup(o, &notes);
  if (o.components.empty()) throw input_error("need --components");
  std::vector<ComponentSpec> specs = parse_component_file(slurp(o.components));
  ObstructionReport rep = obstruction_battery(c, specs, o.kmax, std::nullopt, budget_of(o));
  rep.notes.insert(rep.notes.begin(), notes.begin(), notes.end());
  std::cout << (o.json ? obstruction_report_json(rep) : obstruction_report_text(rep));
  return rep.exit_code;
}

int cmd_raag(const Opts& o) {
  if (o.graph.empty()) throw input_error("need --graph");
  LabeledGraph lg = parse_graph_file(slurp(o.graph));
  RaagReport rep;
  rep.graph_name = lg.g.name;
  rep.vertices = lg.g.vertices;
  for (const auto& [e, label] : lg.labels)
    if (label != 2) {
      rep.notes.push_back("edge labels ignored for the right-angled group");
      break;
    }
  rep.subsets = maximal_disconnected_subsets(lg.g);
  for (const auto& comp : raag_resonance_components(lg.g))
    rep.component_classes.push_back(isotropy_str(comp.cls));
  rep.serre = raag_serre_verdict(lg.g);
  rep.kahler = raag_kahler_verdict(lg.g);
  std::cout << (o.json ? raag_report_json(rep) : raag_report_text(rep));
  return rep.serre.quasi_kahler ? 0 : 2;
}

int cmd_artin(const Opts& o) {
  if (o.graph.empty()) throw input_error("need --graph");
  LabeledGraph lg = parse_graph_file(slurp(o.graph));
  ArtinReport rep;
  rep.graph_name = lg.g.name;
  rep.malcev = artin_malcev_verdict(lg);
  std::cout << (o.json ? artin_report_json(rep) : artin_report_text(rep));
  return rep.malcev.pass ? 0 : 2;
}

int cmd_corpus(const Opts& o) {
  if (!o.name.empty()) {
    if (corpus_has_presentation(o.name)) {
      std::cout << corpus_presentation_text(o.name);
    } else if (corpus_has_cup(o.name)) {
      std::cout << cup_file_str(corpus_cup(o.name));
    } else if (corpus_has_ideal(o.name)) {
      std::cout << ideal_json(corpus_ideal(o.name));
    } else {
      throw input_error("unknown corpus fixture '" + o.name + "'");
    }
    return 0;
  }
  if (!o.run.empty()) {
    GroupPresentation p = corpus_presentation(o.run);
    AbelianizationData d = abelianize_presentation(p);
    Budget budget = budget_of(o);
    std::cout << "fixture: " << o.run << "\n";
    std::cout << "b1: " << d.rank_b1 << "\n";
    Opts sub = o;
    sub.corpus = o.run;
    std::vector<std::string> notes;
    CupStructure c = resolve_cup(sub, &notes);
    JumpingLocus R1 = resonance_ideal(c, 1);
    std::cout << "resonance k=1 generators:";
    auto rg = ideal_generator_strings(R1.ideal, budget);
    if (rg.empty()) std::cout << " (zero ideal)";
    for (const auto& g : rg) std::cout << " " << g << ";";
    std::cout << "\n";
    if (d.rank_b1 >= 1) {
      JumpingLocus V1 = charvar_ideal(p, d, 1);
      std::cout << "charvar k=1 generators:";
      auto vg = ideal_generator_strings(V1.ideal, budget);
      if (vg.empty()) std::cout << " (zero ideal)";
      for (const auto& g : vg) std::cout << " " << g << ";";
      std::cout << "\n";
      FormalityReport fr = formality_test(p, c, 1, budget);
      std::cout << "tangent cone test k=1: " << verdict_str(fr.per_k[0]) << "\n";
      for (const auto& n : notes) std::cout << "note: " << n << "\n";
      return fr.obstructed ? 2 : 0;
    }
    return 0;
  }
  std::ostringstream out;
  auto emit = [&](const char* label, const std::vector<std::string>& names) {
    out << label << ":";
    for (const auto& n : names) out << " " << n;
    out << "\n";
  };
  emit("presentations", corpus_presentation_names());
  emit("cup structures", corpus_cup_names());
  emit("ideals", corpus_ideal_names());
  std::cout << out.str();
  return 0;
}

// Randomized re-checks of the algebra substrate; the only command --seed
// affects. Verdict-producing commands are deterministic.
int cmd_selftest(const Opts& o) {
  std::mt19937_64 rng(o.seed);
  int cases = o.cases;
  auto rand_int = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  auto rand_word = [&](int ngens, int len) {
    Word w;
    for (int i = 0; i < len; ++i) w.push_back({rand_int(0, ngens - 1), rand_int(0, 1) ? 1 : -1});
    return word_reduce(w);
  };
  bool all_ok = true;
  auto report = [&](const char* name, bool ok) {
    std::cout << "  " << name << ": " << (ok ? "ok" : "FAILED") << "\n";
    all_ok = all_ok && ok;
  };
  std::cout << "selftest: " << cases << " cases per suite, seed " << o.seed << "\n";

  {  // product rule: d(uv) = du + u dv, all generators
    bool ok = true;
    for (int it = 0; it < cases && ok; ++it) {
      int n = rand_int(1, 3);
      Word u = rand_word(n, rand_int(0, 6)), v = rand_word(n, rand_int(0, 6));
      Word uv = word_mul(u, v);
      for (int g = 0; g < n && ok; ++g) {
        GroupRingElt lhs = fox_derivative(uv, g);
        GroupRingElt rhs = gr_add(fox_derivative(u, g), gr_mul(gr_of_word(u), fox_derivative(v, g)));
        ok = gr_is_zero(gr_sub(lhs, rhs));
      }
    }
    report("fox product rule", ok);
  }
  {  // fundamental identity: w - 1 = sum_i dw/dx_i (x_i - 1)
    bool ok = true;
    for (int it = 0; it < cases && ok; ++it) {
      int n = rand_int(1, 3);
      Word w = rand_word(n, rand_int(0, 8));
      GroupRingElt sum = gr_sub(gr_of_word(w), gr_int(1));
      for (int g = 0; g < n; ++g) {
        GroupRingElt term =
            gr_mul(fox_derivative(w, g), gr_sub(gr_of_word({{g, 1}}), gr_int(1)));
        sum = gr_sub(sum, term);
      }
      ok = gr_is_zero(sum);
    }
    report("fox fundamental identity", ok);
  }
  {  // Smith form: U A V = D
    bool ok = true;
    for (int it = 0; it < cases && ok; ++it) {
      int r = rand_int(1, 4), c = rand_int(1, 4);
      ZMat A = zmat(r, c);
      for (auto& row : A)
        for (auto& x : row) x = rand_int(-5, 5);
      SNFResult s = smith_normal_form(A);
      ok = zmat_mul(zmat_mul(s.U, A), s.V) == s.D;
    }
    report("smith recomposition", ok);
  }
  {  // Buchberger: S-polynomials of the output basis reduce to zero
    bool ok = true;
    Budget budget;
    for (int it = 0; it < cases && ok; ++it) {
      int n = rand_int(1, 3);
      Ring R = make_ring("x", n);
      std::vector<Polynomial> gens;
      int ngens = rand_int(1, 3);
      for (int i = 0; i < ngens; ++i) {
        Polynomial f = poly_zero(R);
        int terms = rand_int(1, 3);
        for (int t = 0; t < terms; ++t) {
          Mono m = mono_one(n);
          for (int v = 0; v < n; ++v) m[v] = rand_int(0, 2);
          f = padd(R, f, poly_term(R, Q(rand_int(-3, 3)), m));
        }
        if (!f.is_zero()) gens.push_back(f);
      }
      if (gens.empty()) continue;
      auto gb = groebner_basis(R, gens, budget);
      for (size_t i = 0; i < gb.size() && ok; ++i)
        for (size_t j = i + 1; j < gb.size() && ok; ++j)
          ok = normal_form(R, s_polynomial(R, gb[i], gb[j]), gb, budget).is_zero();
    }
    report("groebner s-polynomials", ok);
  }
  return all_ok ? 0 : 2;
}

void add_common(CLI::App* sub, Opts& o) {
  sub->add_option("--order", o.order, "monomial order: grevlex or lex");
  sub->add_option("--budget-terms", o.budget_terms, "cap on total working terms");
  sub->add_flag("--json", o.json, "emit JSON instead of plain text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jumping loci and formality obstructions for finitely presented groups"};
  app.require_subcommand(1);

  Opts res, chv, tc, fml, qk, raag, artin, corp, self;

  CLI::App* s_res = app.add_subcommand("resonance", "depth-k resonance variety");
  s_res->add_option("--corpus", res.corpus, "bundled fixture name");
  s_res->add_option("--presentation", res.presentation, "presentation file");
  s_res->add_option("--cup", res.cup, "cup structure file");
  s_res->add_option("--k", res.k, "depth (default 1)");
  add_common(s_res, res);

  CLI::App* s_chv = app.add_subcommand("charvar", "depth-k characteristic variety");
  s_chv->add_option("--corpus", chv.corpus, "bundled fixture name");
  s_chv->add_option("--presentation", chv.presentation, "presentation file");
  s_chv->add_option("--k", chv.k, "depth (default 1)");
  s_chv->add_option("--point", chv.point, "rational torus point, comma-separated");
  add_common(s_chv, chv);

  CLI::App* s_tc = app.add_subcommand("tangent-cone", "tangent cone of a jump locus");
  s_tc->add_option("--corpus", tc.corpus, "bundled fixture name");
  s_tc->add_option("--presentation", tc.presentation, "presentation file");
  s_tc->add_option("--ideal", tc.ideal, "ideal JSON file");
  s_tc->add_option("--k", tc.k, "depth (default 1)");
  add_common(s_tc, tc);

  CLI::App* s_fml = app.add_subcommand("formality", "tangent cone formality test");
  s_fml->add_option("--corpus", fml.corpus, "bundled fixture name");
  s_fml->add_option("--presentation", fml.presentation, "presentation file");
  s_fml->add_option("--cup", fml.cup, "cup structure file");
  s_fml->add_option("--kmax,--k", fml.kmax, "test depths 1..kmax (default b1)");
  add_common(s_fml, fml);

  CLI::App* s_qk = app.add_subcommand("qkahler", "quasi-Kahler obstruction battery");
  s_qk->add_option("--corpus", qk.corpus, "bundled fixture name");
  s_qk->add_option("--presentation", qk.presentation, "presentation file");
  s_qk->add_option("--cup", qk.cup, "cup structure file");
  s_qk->add_option("--components", qk.components, "component file")->required();
  s_qk->add_option("--kmax,--k", qk.kmax, "filtration depth cap (default n)");
  add_common(s_qk, qk);

  CLI::App* s_raag = app.add_subcommand("raag", "right-angled Artin group verdicts");
  s_raag->add_option("--graph", raag.graph, "graph file")->required();
  add_common(s_raag, raag);

  CLI::App* s_artin = app.add_subcommand("artin", "labeled Artin graph Malcev verdict");
  s_artin->add_option("--graph", artin.graph, "graph file")->required();
  add_common(s_artin, artin);

  CLI::App* s_corp = app.add_subcommand("corpus", "list or dump bundled fixtures");
  s_corp->add_option("--name", corp.name, "dump one fixture");
  s_corp->add_option("--run", corp.run, "run one presentation fixture end-to-end");
  add_common(s_corp, corp);

  CLI::App* s_self = app.add_subcommand("selftest", "randomized substrate checks");
  s_self->add_option("--seed", self.seed, "RNG seed (default 12345)");
  s_self->add_option("--cases", self.cases, "cases per suite (default 50)");
  add_common(s_self, self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (s_res->parsed()) return cmd_resonance(res);
    if (s_chv->parsed()) return cmd_charvar(chv);
    if (s_tc->parsed()) return cmd_tangent_cone(tc);
    if (s_fml->parsed()) return cmd_formality(fml);
    if (s_qk->parsed()) return cmd_qkahler(qk);
    if (s_raag->parsed()) return cmd_raag(raag);
    if (s_artin->parsed()) return cmd_artin(artin);
    if (s_corp->parsed()) return cmd_corpus(corp);
    if (s_self->parsed()) return cmd_selftest(self);
  } catch (const budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const jumploci::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
