#include "fsp/combinatorial_map.hpp"

#include <algorithm>

namespace fsp {

std::vector<Dart> CombinatorialMap::sigma_inverse() const {
  std::vector<Dart> inv(sigma.size());
  for (Dart d = 0; d < dart_count(); ++d) inv[sigma[d]] = d;
  return inv;
}

std::vector<Dart> CombinatorialMap::phi() const {
  std::vector<Dart> inv = sigma_inverse();
  std::vector<Dart> out(alpha.size());
  for (Dart d = 0; d < dart_count(); ++d) out[d] = inv[alpha[d]];
  return out;
}

std::vector<std::vector<Dart>> cycles(const std::vector<Dart>& perm) {
  std::vector<std::vector<Dart>> out;
  std::vector<char> seen(perm.size(), 0);
  for (Dart d = 0; d < static_cast<Dart>(perm.size()); ++d) {
    if (seen[d]) continue;
    std::vector<Dart> orbit;
    for (Dart x = d; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      orbit.push_back(x);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

FaceStructure face_structure(const CombinatorialMap& m) {
  FaceStructure fs;
  fs.faces = cycles(m.phi());
  fs.face_of.assign(m.dart_count(), -1);
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
    for (Dart d : fs.faces[f]) fs.face_of[d] = f;
  return fs;
}

bool is_connected(const CombinatorialMap& m) {
  if (m.dart_count() == 0) return true;
  std::vector<char> seen(m.dart_count(), 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart n : {m.alpha[d], m.sigma[d]}) {
      if (seen[n]) continue;
      seen[n] = 1;
      ++count;
      stack.push_back(n);
    }
  }
  return count == m.dart_count();
}

}  // namespace fsp
