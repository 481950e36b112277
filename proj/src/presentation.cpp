#include "jumploci/presentation.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "jumploci/errors.hpp"

namespace jumploci {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

// Tokenizer over one comment-stripped line; pos is a true 0-based column.
struct RelLexer {
  const std::string& s;
  int line;
  size_t pos;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
  }
  int col() const { return static_cast<int>(pos) + 1; }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !ident_start(s[pos]))
      throw parse_error("expected generator name", line, col());
    size_t start = pos;
    while (pos < s.size() && ident_char(s[pos])) ++pos;
    return s.substr(start, pos - start);
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits)
      throw parse_error("expected integer exponent", line, static_cast<int>(start) + 1);
    return std::stoi(s.substr(start, pos - start));
  }
  void expect(char c, const char* what) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) throw parse_error(what, line, col());
    ++pos;
  }
};

struct RelParser {
  RelLexer lex;
  const std::vector<std::string>& gens;

  Word term() {
    char c = lex.peek();
    if (c == '(') {
      lex.expect('(', "expected '('");
      Word u = word(true);
      lex.expect(',', "expected ',' in commutator");
      Word v = word(true);
      lex.expect(')', "expected ')'");
      return word_commutator(u, v);
    }
    int namecol = lex.col();
    std::string name = lex.ident();
    int idx = -1;
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == name) { idx = static_cast<int>(i); break; }
    if (idx < 0) throw parse_error("unknown generator '" + name + "'", lex.line, namecol);
    int e = 1;
    if (lex.peek() == '^') {
      lex.expect('^', "expected '^'");
      e = lex.integer();
    }
    return word_reduce({{idx, e}});
  }

  // One or more terms; stops at ',' or ')' when inside a commutator.
  Word word(bool inside_comm) {
    Word w;
    bool any = false;
    while (true) {
      char c = lex.peek();
      if (c == '\0') break;
      if (inside_comm && (c == ',' || c == ')')) break;
      w = word_mul(w, term());
      any = true;
    }
    if (!any) throw parse_error("expected a word", lex.line, lex.col());
    return w;
  }
};

std::string strip_comment(const std::string& line) {
  size_t h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool valid_ident(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

}  // namespace

GroupPresentation parse_presentation(const std::string& text) {
  GroupPresentation p;
  bool have_gens = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string nc = strip_comment(raw);
    size_t start = nc.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    size_t kwend = start;
    while (kwend < nc.size() && ident_char(nc[kwend])) ++kwend;
    std::string kw = nc.substr(start, kwend - start);
    std::string rest = nc.substr(kwend);
    if (kw == "group") {
      if (have_gens) throw parse_error("'group' must precede 'gens'", lineno, static_cast<int>(start) + 1);
      p.name = trim(rest);
      if (p.name.empty())
        throw parse_error("missing group name", lineno, static_cast<int>(kwend) + 1);
    } else if (kw == "gens") {
      if (have_gens) throw parse_error("duplicate 'gens' line", lineno, static_cast<int>(start) + 1);
      std::istringstream ls(rest);
      std::string name;
      std::set<std::string> seen;
      while (ls >> name) {
        if (!valid_ident(name))
          throw parse_error("bad generator name '" + name + "'", lineno, static_cast<int>(start) + 1);
        if (!seen.insert(name).second)
          throw parse_error("duplicate generator '" + name + "'", lineno, static_cast<int>(start) + 1);
        p.gens.push_back(name);
      }
      if (p.gens.empty())
        throw parse_error("'gens' needs at least one name", lineno, static_cast<int>(kwend) + 1);
      have_gens = true;
    } else if (kw == "rel") {
      if (!have_gens) throw parse_error("'rel' before 'gens'", lineno, static_cast<int>(start) + 1);
      RelParser rp{RelLexer{nc, lineno, kwend}, p.gens};
      Word w = rp.word(false);
      if (!rp.lex.done())
        throw parse_error("trailing input after relator", lineno, rp.lex.col());
      p.rels.push_back(std::move(w));
    } else {
      throw parse_error("unknown directive '" + kw + "'", lineno, static_cast<int>(start) + 1);
    }
  }
  if (!have_gens) throw parse_error("missing 'gens' line", lineno == 0 ? 1 : lineno, 1);
  return p;
}

std::string word_str(const GroupPresentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Syllable& s : w) {
    if (!out.empty()) out += ' ';
    out += p.gens[s.gen];
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

std::string presentation_str(const GroupPresentation& p) {
  std::string out;
  if (!p.name.empty()) out += "group " + p.name + "\n";
  out += "gens";
  for (const auto& g : p.gens) out += " " + g;
  out += "\n";
  for (const Word& w : p.rels) out += "rel " + word_str(p, w) + "\n";
  return out;
}

int gen_index(const GroupPresentation& p, const std::string& name) {
  for (size_t i = 0; i < p.gens.size(); ++i)
    if (p.gens[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace jumploci
