#pragma once

#include <vector>

namespace fsp {

using Dart = int;

// Darts point away from their vertex. sigma lists the darts around each
// vertex counterclockwise. The face successor is phi(d) = sigma^-1(alpha(d)),
// so the phi-orbit of d runs along the face on the left of d.
struct CombinatorialMap {
  std::vector<Dart> alpha;
  std::vector<Dart> sigma;

  int dart_count() const { return static_cast<int>(alpha.size()); }
  std::vector<Dart> sigma_inverse() const;
  std::vector<Dart> phi() const;
};

// Cycles of a permutation, each starting at its smallest element, ordered by
// that element.
std::vector<std::vector<Dart>> cycles(const std::vector<Dart>& perm);

struct FaceStructure {
  std::vector<std::vector<Dart>> faces;  // phi-orbits, named by their minimal dart
  std::vector<int> face_of;              // dart -> index into faces
  int name(int face) const { return faces[face].front(); }
};

FaceStructure face_structure(const CombinatorialMap& m);

bool is_connected(const CombinatorialMap& m);

}  // namespace fsp
