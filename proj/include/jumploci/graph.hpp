#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace jumploci {

// Simple graph. Edges are stored as index pairs (i, j) with i < j; the
// canonical form of a graph is its input vertex order.
struct Graph {
  std::string name;
  std::vector<std::string> vertices;
  std::set<std::pair<int, int>> edges;

  int order() const { return static_cast<int>(vertices.size()); }
  bool adjacent(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges.count({a, b}) != 0;
  }
};

// Every edge carries an integer label >= 2.
struct LabeledGraph {
  Graph g;
  std::map<std::pair<int, int>, int> labels;
};

// File format: optional "graph NAME" first, one "vertices a b c" line, then
// "edge a b [label]" lines (label defaults to 2). '#' starts a comment.
LabeledGraph parse_graph_file(const std::string& text);
std::string graph_file_str(const LabeledGraph& lg);

int vertex_index(const Graph& g, const std::string& name);

Graph graph_complement(const Graph& g);
bool graph_is_complete(const Graph& g);

// Connected components of the subgraph induced on `subset` (vertex indices);
// each component sorted, components ordered by smallest member.
std::vector<std::vector<int>> induced_components(const Graph& g, const std::vector<int>& subset);
bool induced_connected(const Graph& g, const std::vector<int>& subset);

// Disjoint union plus all edges between the two vertex sets. Vertex names
// that clash are prefixed "a." / "b." as in presentation merging.
Graph graph_join(const Graph& a, const Graph& b);

}  // namespace jumploci
