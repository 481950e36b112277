#include "jumploci/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "jumploci/errors.hpp"

namespace jumploci {

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

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '.' && ch != '+')
      return false;
  return true;
}

}  // namespace

LabeledGraph parse_graph_file(const std::string& text) {
  LabeledGraph lg;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_vertices = false;
  bool seen_any = false;
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "graph") {
      if (seen_any) throw parse_error("'graph' must come first", lineno, 1);
      if (toks.size() != 2) throw parse_error("expected 'graph NAME'", lineno, 1);
      lg.g.name = toks[1];
      seen_any = true;
    } else if (toks[0] == "vertices") {
      if (have_vertices) throw parse_error("duplicate 'vertices' line", lineno, 1);
      if (toks.size() < 2) throw parse_error("expected at least one vertex", lineno, 1);
      for (size_t i = 1; i < toks.size(); ++i) {
        if (!valid_name(toks[i])) throw parse_error("bad vertex name '" + toks[i] + "'", lineno, 1);
        for (const auto& v : lg.g.vertices)
          if (v == toks[i]) throw parse_error("duplicate vertex '" + toks[i] + "'", lineno, 1);
        lg.g.vertices.push_back(toks[i]);
      }
      have_vertices = true;
      seen_any = true;
    } else if (toks[0] == "edge") {
      if (!have_vertices) throw parse_error("'edge' before 'vertices'", lineno, 1);
      if (toks.size() != 3 && toks.size() != 4)
        throw parse_error("expected 'edge a b [label]'", lineno, 1);
      int a = vertex_index(lg.g, toks[1]);
      int b = vertex_index(lg.g, toks[2]);
      if (a < 0) throw parse_error("unknown vertex '" + toks[1] + "'", lineno, 1);
      if (b < 0) throw parse_error("unknown vertex '" + toks[2] + "'", lineno, 1);
      if (a == b) throw parse_error("loop edge '" + toks[1] + "'", lineno, 1);
      if (a > b) std::swap(a, b);
      if (lg.g.edges.count({a, b})) throw parse_error("duplicate edge", lineno, 1);
      int label = 2;
      if (toks.size() == 4) {
        try {
          label = std::stoi(toks[3]);
        } catch (const std::exception&) {
          throw parse_error("bad edge label '" + toks[3] + "'", lineno, 1);
        }
        if (label < 2) throw parse_error("edge label must be at least 2", lineno, 1);
      }
      lg.g.edges.insert({a, b});
      lg.labels[{a, b}] = label;
      seen_any = true;
    } else {
      throw parse_error("unknown directive '" + toks[0] + "'", lineno, 1);
    }
  }
  if (!have_vertices) throw parse_error("missing 'vertices' line", lineno == 0 ? 1 : lineno, 1);
  return lg;
}

std::string graph_file_str(const LabeledGraph& lg) {
  std::ostringstream out;
  if (!lg.g.name.empty()) out << "graph " << lg.g.name << "\n";
  out << "vertices";
  for (const auto& v : lg.g.vertices) out << " " << v;
  out << "\n";
  for (const auto& e : lg.g.edges) {
    out << "edge " << lg.g.vertices[e.first] << " " << lg.g.vertices[e.second];
    int label = lg.labels.count(e) ? lg.labels.at(e) : 2;
    if (label != 2) out << " " << label;
    out << "\n";
  }
  return out.str();
}

int vertex_index(const Graph& g, const std::string& name) {
  for (int i = 0; i < g.order(); ++i)
    if (g.vertices[i] == name) return i;
  return -1;
}

Graph graph_complement(const Graph& g) {
  Graph c;
  c.name = g.name.empty() ? "" : g.name + "~";
  c.vertices = g.vertices;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.edges.count({i, j})) c.edges.insert({i, j});
  return c;
}

bool graph_is_complete(const Graph& g) {
  int n = g.order();
  return static_cast<int>(g.edges.size()) == n * (n - 1) / 2;
}

std::vector<std::vector<int>> induced_components(const Graph& g, const std::vector<int>& subset) {
  std::vector<int> verts = subset;
  std::sort(verts.begin(), verts.end());
  std::vector<bool> seen(verts.size(), false);
  std::vector<std::vector<int>> comps;
  for (size_t start = 0; start < verts.size(); ++start) {
    if (seen[start]) continue;
    std::vector<size_t> stack{start};
    std::vector<int> comp;
    seen[start] = true;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      comp.push_back(verts[cur]);
      for (size_t other = 0; other < verts.size(); ++other)
        if (!seen[other] && g.adjacent(verts[cur], verts[other])) {
          seen[other] = true;
          stack.push_back(other);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool induced_connected(const Graph& g, const std::vector<int>& subset) {
  return induced_components(g, subset).size() <= 1;
}

Graph graph_join(const Graph& a, const Graph& b) {
  Graph j;
  j.name = a.name + "*" + b.name;
  bool clash = false;
  for (const auto& v : b.vertices)
    if (vertex_index(a, v) >= 0) clash = true;
  for (const auto& v : a.vertices) j.vertices.push_back(clash ? "a." + v : v);
  for (const auto& v : b.vertices) j.vertices.push_back(clash ? "b." + v : v);
  int na = a.order();
  j.edges = a.edges;
  for (const auto& e : b.edges) j.edges.insert({e.first + na, e.second + na});
  for (int i = 0; i < na; ++i)
    for (int k = 0; k < b.order(); ++k) j.edges.insert({i, na + k});
  return j;
}

}  // namespace jumploci
