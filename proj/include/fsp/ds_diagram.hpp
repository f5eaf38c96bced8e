#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fsp/combinatorial_map.hpp"

namespace fsp {

struct GraphVertex {
  int id = 0;
  std::array<Dart, 3> darts{};  // counterclockwise
};

// A spine edge and the forward darts of its three graph-edge copies.
struct EdgeLabel {
  int id = 0;
  Dart e_copy = 0;
  Dart in_copy = 0;
  Dart out_copy = 0;
};

// A spine vertex and the ids of its four graph-vertex copies.
struct VertexLabel {
  int id = 0;
  std::array<int, 4> vertices{};
};

// A spine region: one inside face and one outside face, each named by its
// minimal dart.
struct RegionPair {
  int id = 0;
  Dart inside_face = 0;
  Dart outside_face = 0;
};

struct DsDiagram {
  CombinatorialMap map;
  std::vector<GraphVertex> vertices;
  std::vector<Dart> e_cycle;
  std::vector<EdgeLabel> edge_labels;
  std::vector<VertexLabel> vertex_labels;
  std::vector<RegionPair> regions;
};

struct ValidationReport {
  std::vector<std::string> violations;
  int spine_vertices = 0;  // n_v
  int spine_edges = 0;     // m
  int regions = 0;         // n
  bool valid() const { return violations.empty(); }
};

ValidationReport validate(const DsDiagram& d);
// Throws Error naming the first violation.
void require_valid(const DsDiagram& d);

enum class VertexType { l, r };
enum class EdgeType { a, b, c, d };
enum class Side { inside, outside };

char to_char(VertexType t);
char to_char(EdgeType t);

// Keyed by spine-edge label id: type from the sides of the third darts at the
// tail and head of the E-copy. a = (inside, outside), b = (inside, inside),
// c = (outside, outside), d = (outside, inside).
std::map<int, EdgeType> classify_edge_types(const DsDiagram& d);
// Keyed by spine-vertex label id.
std::map<int, VertexType> classify_vertex_types(const DsDiagram& d);
bool is_positive(const DsDiagram& d);

DsDiagram mirror(const DsDiagram& d);

// Checks the path grammar of positive diagrams: cutting the cyclic sequence
// of E-edge types at each edge whose tail third dart leaves inside, every
// piece is `b` or `a c^k d`.
bool satisfies_path_grammar(const DsDiagram& d);

}  // namespace fsp
