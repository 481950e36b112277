#include "jumploci/magnus.hpp"

#include <cassert>
#include <sstream>

#include "jumploci/errors.hpp"

namespace jumploci {

MagnusSeries magnus_one(int n) {
  MagnusSeries m;
  m.c = 1;
  m.lin.assign(n, Z(0));
  m.quad.assign(n, std::vector<Z>(n, Z(0)));
  return m;
}

MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b) {
  const int n = static_cast<int>(a.lin.size());
  MagnusSeries m = magnus_one(n);
  m.c = a.c * b.c;
  for (int i = 0; i < n; ++i) m.lin[i] = a.c * b.lin[i] + b.c * a.lin[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.quad[i][j] = a.c * b.quad[i][j] + b.c * a.quad[i][j] + a.lin[i] * b.lin[j];
  return m;
}

MagnusSeries magnus_gen_pow(int n, int gen, int k) {
  MagnusSeries m = magnus_one(n);
  m.lin[gen] = k;
  m.quad[gen][gen] = Z(k) * Z(k - 1) / 2;
  return m;
}

MagnusSeries magnus_word(const Word& w, int n) {
  MagnusSeries m = magnus_one(n);
  for (const Syllable& s : w) m = magnus_mul(m, magnus_gen_pow(n, s.gen, s.exp));
  return m;
}

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int p, int q) {
  assert(0 <= p && p < q && q < n);
  return p * n - p * (p + 1) / 2 + (q - p - 1);
}

std::optional<std::vector<Q>> magnus_quadratic(const Word& w, int n_gens) {
  MagnusSeries m = magnus_word(w, n_gens);
  for (const Z& v : m.lin)
    if (v != 0) return std::nullopt;
  // With vanishing linear part the quadratic part is the log, hence a Lie
  // element: antisymmetric with zero diagonal.
  std::vector<Q> out(pair_count(n_gens), Q(0));
  for (int p = 0; p < n_gens; ++p) {
    assert(m.quad[p][p] == 0);
    for (int q = p + 1; q < n_gens; ++q) {
      assert(m.quad[p][q] == -m.quad[q][p]);
      out[pair_index(n_gens, p, q)] = Q(m.quad[p][q]);
    }
  }
  return out;
}

namespace {

// Scale to coprime integer entries with positive leading entry.
QVec primitive_scale(QVec v) {
  Z den_lcm(1), num_gcd(0);
  for (const Q& x : v) {
    if (x == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  }
  for (Q& x : v) x *= den_lcm;
  for (const Q& x : v) {
    if (x == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (num_gcd == 0) return v;
  for (Q& x : v) x /= num_gcd;
  for (const Q& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Q& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace

CupStructure make_cup(int n, QMat raw_classes) {
  const int m = pair_count(n);
  for (const auto& row : raw_classes)
    if (static_cast<int>(row.size()) != m)
      throw input_error("relation class has wrong arity");
  CupStructure c;
  c.n = n;
  for (auto& row : rref(std::move(raw_classes))) c.classes.push_back(primitive_scale(std::move(row)));
  return c;
}

CupStructure cup_structure(const GroupPresentation& p) {
  const int n = static_cast<int>(p.gens.size());
  QMat raw;
  for (const Word& w : p.rels) {
    auto cls = magnus_quadratic(w, n);
    if (!cls)
      throw unsupported_presentation(
          "relator '" + word_str(p, w) +
          "' has nonzero abelianization; supply a cup structure explicitly");
    raw.push_back(std::move(*cls));
  }
  return make_cup(n, std::move(raw));
}

bool cup_equal(const CupStructure& a, const CupStructure& b) {
  return a.n == b.n && a.classes == b.classes;
}

CupStructure parse_cup_file(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int n = -1;
  QMat classes;
  while (std::getline(in, raw)) {
    ++lineno;
    size_t h = raw.find('#');
    if (h != std::string::npos) raw = raw.substr(0, h);
    std::istringstream ls(raw);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "h1") {
      if (n >= 0) throw parse_error("duplicate h1 line", lineno, 1);
      if (!(ls >> n) || n < 0) throw parse_error("bad h1 dimension", lineno, 1);
    } else if (kw == "class") {
      if (n < 0) throw parse_error("'class' before 'h1'", lineno, 1);
      std::vector<Q> row(pair_count(n), Q(0));
      std::string ctok;
      while (ls >> ctok) {
        std::string on;
        int p = 0, q = 0;
        if (!(ls >> on) || on != "on" || !(ls >> p >> q))
          throw parse_error("expected '<coeff> on <p> <q>'", lineno, 1);
        if (p < 1 || q < 1 || p > n || q > n || p >= q)
          throw parse_error("bad basis pair indices", lineno, 1);
        Q c;
        try {
          c = parse_rational(ctok);
        } catch (const error&) {
          throw parse_error("bad rational '" + ctok + "'", lineno, 1);
        }
        row[pair_index(n, p - 1, q - 1)] += c;
      }
      classes.push_back(std::move(row));
    } else {
      throw parse_error("unknown directive '" + kw + "'", lineno, 1);
    }
  }
  if (n < 0) throw parse_error("missing h1 line", lineno == 0 ? 1 : lineno, 1);
  return make_cup(n, std::move(classes));
}

std::string cup_file_str(const CupStructure& c) {
  std::string out = "h1 " + std::to_string(c.n) + "\n";
  for (const auto& row : c.classes) {
    out += "class";
    for (int p = 0; p < c.n; ++p)
      for (int q = p + 1; q < c.n; ++q) {
        const Q& v = row[pair_index(c.n, p, q)];
        if (v != 0)
          out += " " + q_str(v) + " on " + std::to_string(p + 1) + " " + std::to_string(q + 1);
      }
    out += "\n";
  }
  return out;
}

}  // namespace jumploci
