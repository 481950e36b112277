#include "jumploci/corpus.hpp"

#include "jumploci/errors.hpp"

namespace jumploci {

namespace {

struct TextFixture {
  const char* name;
  const char* text;
};

// One-relator knot group of the trefoil and the integral Heisenberg group
// are the smallest interesting cases on either side of the formality test;
// ziegler-2134 is the arrangement group whose obstruction battery fails.
const TextFixture kPresentations[] = {
    {"trefoil",
     "group trefoil\n"
     "gens x y\n"
     "rel x y x y^-1 x^-1 y^-1\n"},
    {"heisenberg",
     "group heisenberg\n"
     "gens x y\n"
     "rel ((x,y),x)\n"
     "rel ((x,y),y)\n"},
    {"ziegler-2134",
     "group ziegler-2134\n"
     "gens x1 x2 x3 x4\n"
     "rel (x1, x3^2 x4)\n"
     "rel (x2, x4)\n"
     "rel (x3, x4)\n"},
    {"surface-1",
     "group surface-1\n"
     "gens x y\n"
     "rel (x, y)\n"},
    {"surface-2",
     "group surface-2\n"
     "gens a1 b1 a2 b2\n"
     "rel (a1, b1) (a2, b2)\n"},
    {"free-1",
     "group free-1\n"
     "gens x\n"},
    {"free-2",
     "group free-2\n"
     "gens x y\n"},
    {"p3-raag",
     "group p3-raag\n"
     "gens v1 v2 v3\n"
     "rel (v1, v2)\n"
     "rel (v2, v3)\n"},
};

}  // namespace

std::vector<std::string> corpus_presentation_names() {
  std::vector<std::string> out;
  for (const auto& f : kPresentations) out.push_back(f.name);
  return out;
}

std::vector<std::string> corpus_cup_names() { return {"trefoil-cup"}; }

std::vector<std::string> corpus_ideal_names() { return {"scroll-n3"}; }

bool corpus_has_presentation(const std::string& name) {
  for (const auto& f : kPresentations)
    if (name == f.name) return true;
  return false;
}

bool corpus_has_cup(const std::string& name) { return name == "trefoil-cup"; }

bool corpus_has_ideal(const std::string& name) { return name == "scroll-n3"; }

std::string corpus_presentation_text(const std::string& name) {
  for (const auto& f : kPresentations)
    if (name == f.name) return f.text;
  throw input_error("unknown corpus presentation '" + name + "'");
}

GroupPresentation corpus_presentation(const std::string& name) {
  return parse_presentation(corpus_presentation_text(name));
}

CupStructure corpus_cup(const std::string& name) {
  if (name == "trefoil-cup") {
    // b1 = 1: the cup map has no domain, so there are no relation classes.
    CupStructure c;
    c.n = 1;
    return c;
  }
  throw input_error("unknown corpus cup structure '" + name + "'");
}

Ideal corpus_ideal(const std::string& name) {
  if (name == "scroll-n3") {
    // Linear slice of the quadric x1*y2 = x2*y1; the zero set is irreducible
    // and not a union of linear subspaces, which is what the coverage
    // counterexamples need.
    Ring R = make_ring({"x1", "x2", "x3", "y1", "y2", "y3"});
    std::vector<Polynomial> gens;
    gens.push_back(padd(R, padd(R, poly_var(R, 0), poly_var(R, 1)), poly_var(R, 2)));
    gens.push_back(padd(R, padd(R, poly_var(R, 3), poly_var(R, 4)), poly_var(R, 5)));
    gens.push_back(psub(R, pmul(R, poly_var(R, 0), poly_var(R, 4)),
                        pmul(R, poly_var(R, 1), poly_var(R, 3))));
    return make_ideal(R, gens);
  }
  throw input_error("unknown corpus ideal '" + name + "'");
}

}  // namespace jumploci
