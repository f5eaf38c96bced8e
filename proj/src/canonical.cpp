#include "fsp/canonical.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "diagram_analysis.hpp"
#include "fsp/error.hpp"

namespace fsp {

namespace {

// Code of the diagram with darts renumbered in breadth-first order from
// `root`, which starts the E-cycle.
std::vector<int> rooted_code(const DsDiagram& d, const detail::DiagramAnalysis& a, int root_pos) {
  const CombinatorialMap& m = d.map;
  const int N = m.dart_count();
  const Dart root = d.e_cycle[root_pos];
  std::vector<int> fresh(N, -1);
  std::vector<Dart> order;
  std::deque<Dart> queue{root};
  fresh[root] = 0;
  order.push_back(root);
  while (!queue.empty()) {
    Dart x = queue.front();
    queue.pop_front();
    for (Dart y : {m.sigma[x], m.alpha[x]}) {
      if (fresh[y] != -1) continue;
      fresh[y] = static_cast<int>(order.size());
      order.push_back(y);
      queue.push_back(y);
    }
  }

  std::vector<int> code{N, static_cast<int>(d.e_cycle.size())};
  for (Dart x : order) {
    code.push_back(fresh[m.alpha[x]]);
    code.push_back(fresh[m.sigma[x]]);
  }
  const int k = static_cast<int>(d.e_cycle.size());
  for (int i = 0; i < k; ++i) code.push_back(fresh[d.e_cycle[(root_pos + i) % k]]);

  // Label classes numbered by first appearance in the new order.
  std::map<int, int> edge_class, vertex_class, region_class;
  auto cls = [](std::map<int, int>& c, int key) { return c.emplace(key, static_cast<int>(c.size())).first->second; };
  for (Dart x : order) {
    code.push_back(cls(edge_class, a.label_of[x]));
    code.push_back(static_cast<int>(a.copy_of[x]));
    code.push_back(a.forward[x]);
  }
  for (Dart x : order) code.push_back(cls(vertex_class, a.vlabel_of[a.vertex_of[x]]));
  for (Dart x : order) {
    const int f = a.left_face(x);
    code.push_back(cls(region_class, a.region_of_face[f]));
    code.push_back(a.face_inside[f]);
  }
  return code;
}

}  // namespace

CanonicalCode canonical_code(const DsDiagram& d) {
  detail::DiagramAnalysis a = detail::analyze_valid(d);
  std::vector<int> best;
  for (int r = 0; r < static_cast<int>(d.e_cycle.size()); ++r) {
    std::vector<int> c = rooted_code(d, a, r);
    if (best.empty() || c < best) best = std::move(c);
  }
  CanonicalCode out;
  for (int v : best) {
    if (v < 0 || v > 0xffff) throw Error("diagram too large for a canonical code");
    out.bytes.push_back(static_cast<std::uint8_t>(v >> 8));
    out.bytes.push_back(static_cast<std::uint8_t>(v & 0xff));
  }
  return out;
}

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (std::uint8_t b : bytes) {
    s += digits[b >> 4];
    s += digits[b & 15];
  }
  return s;
}

CanonicalCode CanonicalCode::from_hex(const std::string& text) {
  if (text.size() % 2) throw Error("odd-length hex code");
  auto nibble = [&](char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error("bad hex digit in code");
  };
  CanonicalCode c;
  for (size_t i = 0; i < text.size(); i += 2) c.bytes.push_back(static_cast<std::uint8_t>(nibble(text[i]) * 16 + nibble(text[i + 1])));
  return c;
}

DsDiagram relabel(const DsDiagram& d, const std::vector<Dart>& perm, int id_shift) {
  DsDiagram out = d;
  const int N = d.map.dart_count();
  out.map.alpha.assign(N, -1);
  out.map.sigma.assign(N, -1);
  for (Dart x = 0; x < N; ++x) {
    out.map.alpha[perm[x]] = perm[d.map.alpha[x]];
    out.map.sigma[perm[x]] = perm[d.map.sigma[x]];
  }
  for (GraphVertex& v : out.vertices) {
    v.id += id_shift;
    for (Dart& x : v.darts) x = perm[x];
    std::rotate(v.darts.begin(), std::min_element(v.darts.begin(), v.darts.end()), v.darts.end());
  }
  std::reverse(out.vertices.begin(), out.vertices.end());
  for (Dart& x : out.e_cycle) x = perm[x];
  for (EdgeLabel& l : out.edge_labels) {
    l.id += id_shift;
    l.e_copy = perm[l.e_copy];
    l.in_copy = perm[l.in_copy];
    l.out_copy = perm[l.out_copy];
  }
  for (VertexLabel& l : out.vertex_labels) {
    l.id += id_shift;
    for (int& v : l.vertices) v += id_shift;
  }
  // Face names are minimal darts, which move under the permutation.
  FaceStructure old_faces = face_structure(d.map);
  std::map<Dart, Dart> rename;
  for (const auto& f : old_faces.faces) {
    Dart best = perm[f.front()];
    for (Dart x : f) best = std::min(best, perm[x]);
    rename[f.front()] = best;
  }
  for (RegionPair& r : out.regions) {
    r.id += id_shift;
    r.inside_face = rename.at(r.inside_face);
    r.outside_face = rename.at(r.outside_face);
  }
  return out;
}

}  // namespace fsp
