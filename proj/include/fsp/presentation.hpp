#pragma once

#include <string>
#include <vector>

#include "fsp/ds_diagram.hpp"

namespace fsp {

struct SignedEdge {
  int edge = 0;
  int sign = 1;  // +1: traversed along the edge orientation
  bool operator==(const SignedEdge&) const = default;
};

using BoundaryWord = std::vector<SignedEdge>;

struct PresentationEdge {
  int id = 0;
  bool circle = false;
  int from = 0;  // arc endpoints (unused for circles)
  int to = 0;
};

struct PresentationRegion {
  int id = 0;
  std::vector<BoundaryWord> boundaries;  // one cyclic word per boundary component
};

// Abstract branched spine. Vertices, edges and regions are kept sorted by id.
struct SpinePresentation {
  std::vector<int> vertices;
  std::vector<PresentationEdge> edges;
  std::vector<PresentationRegion> regions;

  int vertex_index(int id) const;  // -1 when absent
  int edge_index(int id) const;
  int euler_characteristic() const {
    return static_cast<int>(vertices.size() - edges.size() + regions.size());
  }
};

// Structural errors (unknown ids, duplicates, empty words) throw Error.
void check_structure(const SpinePresentation& p);
// Violated simple-polyhedron invariants: multiplicity 3, branching, and the
// Euler characteristic of a closed-manifold spine.
std::vector<std::string> check_presentation(const SpinePresentation& p);

// Special: at least one vertex, all edges arcs, every region one disk.
bool is_special(const SpinePresentation& p);

SpinePresentation derive_presentation(const DsDiagram& d);

SpinePresentation parse_presentation(const std::string& text);
std::string write_presentation(const SpinePresentation& p, const std::string& comment = {});

// Edge ids of a maximal tree of the singular set: arc edges in increasing id
// order, each kept when it joins two components.
std::vector<int> spanning_tree(const SpinePresentation& p);

std::string to_string(const BoundaryWord& w);

}  // namespace fsp
