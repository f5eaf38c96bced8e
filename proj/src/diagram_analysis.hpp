#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fsp/ds_diagram.hpp"

namespace fsp::detail {

enum class Copy { E, inside, outside };

// One end of a spine edge: the label index and whether it is the tail.
using EdgeEnd = std::pair<int, bool>;

struct SignedLetter {
  int edge_id;
  int sign;
  bool operator==(const SignedLetter&) const = default;
};

// Derived combinatorics of a diagram. Built in stages; when a stage fails the
// later fields stay empty and `complete` is false.
struct DiagramAnalysis {
  const DsDiagram* diagram = nullptr;
  bool complete = false;

  std::vector<int> vertex_of;  // dart -> index into diagram->vertices
  std::map<int, int> vertex_index;
  FaceStructure faces;
  std::map<Dart, int> face_by_name;

  std::vector<int> e_position;  // vertex index -> position on the E-cycle or -1
  std::vector<char> on_e;       // dart -> its graph edge lies on E
  std::vector<char> face_inside;

  std::vector<int> label_of;  // dart -> index into edge_labels
  std::vector<Copy> copy_of;
  std::vector<char> forward;
  std::vector<int> vlabel_of;        // vertex index -> index into vertex_labels
  std::vector<int> region_of_face;   // face index -> index into regions

  int left_face(Dart d) const { return faces.face_of[d]; }
  int right_face(Dart d) const { return faces.face_of[diagram->map.alpha[d]]; }
  EdgeEnd end(Dart d) const { return {label_of[d], forward[d] != 0}; }

  // Darts at the E-vertex at position k: outgoing E dart, incoming end, third.
  Dart e_out(int k) const;
  Dart e_in(int k) const;
  Dart e_third(int k) const;
  Side third_side(int k) const;

  // (edge label id, sign) along the inside face; reversed and flipped along
  // the outside face. Both start from the face's minimal dart.
  std::vector<SignedLetter> inside_word(int face) const;
  std::vector<SignedLetter> outside_word(int face) const;

  // For a spine-vertex label index: E positions of the passages whose third
  // dart leaves inside and outside, or -1.
  std::pair<int, int> passages(int vlabel) const;
};

DiagramAnalysis analyze(const DsDiagram& d, std::vector<std::string>* violations);
DiagramAnalysis analyze_valid(const DsDiagram& d);

bool cyclic_equal(const std::vector<SignedLetter>& a, const std::vector<SignedLetter>& b);

}  // namespace fsp::detail
