#include <cctype>
#include <sstream>

#include "jumploci/errors.hpp"
#include "jumploci/polynomial.hpp"

namespace jumploci {

std::string poly_str(const Ring& R, const Polynomial& a) {
  if (a.t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.t) {
    Q c = t.c;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool trivial_mono = mono_is_one(t.m);
    bool wrote_coeff = false;
    if (c != 1 || trivial_mono) {
      os << c.get_str();
      wrote_coeff = true;
    }
    for (int i = 0; i < R.n; ++i) {
      if (t.m[i] == 0) continue;
      if (wrote_coeff) os << "*";
      os << R.names[i];
      if (t.m[i] != 1) os << "^" << t.m[i];
      wrote_coeff = true;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error("polynomial: " + msg, 1, static_cast<int>(i) + 1);
  }
  std::string number() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected digits");
    if (i < s.size() && s[i] == '/') {
      ++i;
      size_t dstart = i;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == dstart) fail("expected denominator digits");
    }
    return s.substr(start, i - start);
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() &&
           (isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '.')) {
      ++i;
    }
    if (i == start) fail("expected identifier");
    return s.substr(start, i - start);
  }
};

}  // namespace

Polynomial parse_poly(const Ring& R, const std::string& text) {
  Lexer lx{text};
  std::vector<Term> terms;
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++lx.i;
    } else if (!first) {
      lx.fail("expected '+' or '-' between terms");
    }
    first = false;
    Q coeff(sign);
    Mono m = mono_one(R.n);
    bool saw_factor = false;
    for (;;) {
      char p = lx.peek();
      if (isdigit(static_cast<unsigned char>(p))) {
        coeff *= parse_rational(lx.number());
        saw_factor = true;
      } else if (isalpha(static_cast<unsigned char>(p)) || p == '_') {
        std::string name = lx.ident();
        int vi = -1;
        for (int k = 0; k < R.n; ++k)
          if (R.names[k] == name) {
            vi = k;
            break;
          }
        if (vi < 0) lx.fail("unknown variable '" + name + "'");
        int exp = 1;
        if (lx.peek() == '^') {
          ++lx.i;
          int esign = 1;
          if (lx.peek() == '-') {
            esign = -1;
            ++lx.i;
          }
          exp = esign * std::stoi(lx.number());
          if (exp < 0) lx.fail("negative exponent in polynomial");
        }
        m[vi] += exp;
        saw_factor = true;
      } else {
        break;
      }
      if (lx.peek() == '*') {
        ++lx.i;
        continue;
      }
      // juxtaposition allowed; stop at +/- or end
      char q = lx.peek();
      if (q == '+' || q == '-' || q == '\0') break;
    }
    if (!saw_factor) lx.fail("empty term");
    terms.push_back({coeff, m});
  }
  return poly_from_terms(R, terms);
}

}  // namespace jumploci
