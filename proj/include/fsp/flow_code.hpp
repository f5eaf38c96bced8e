#pragma once

#include <string>
#include <vector>

#include "fsp/ds_diagram.hpp"

namespace fsp {

// A flow-spine DS-diagram read along its E-cycle. Position k is the k-th
// E-vertex; `word[k]` names its spine vertex (0-based, each exactly twice);
// `inward[k]` says whether its third dart leaves inside (exactly one of the
// two passages of a spine vertex does); `types[v]` is the chirality of spine
// vertex v. E-edge k runs from position k to position k + 1.
struct FlowCode {
  std::vector<int> word;
  std::vector<bool> inward;
  std::vector<VertexType> types;

  int spine_vertices() const { return static_cast<int>(types.size()); }
  bool operator==(const FlowCode&) const = default;
};

// Checks the shape of a code (letters, multiplicities, one inward passage per
// letter). Returns an empty string when well formed.
std::string check_flow_code(const FlowCode& c);

// Completes the code to a DS-diagram: spine edge k + 1 is E-edge k, spine
// vertex v + 1 is letter v, regions are numbered by their inside faces.
// Throws Error when the completion is not a valid flow-spine diagram.
DsDiagram build_diagram(const FlowCode& c);

// Reads the code of a valid diagram starting at e_cycle[0]. Letters are
// numbered by first occurrence.
FlowCode flow_code(const DsDiagram& d);

std::string to_string(const FlowCode& c);

}  // namespace fsp
