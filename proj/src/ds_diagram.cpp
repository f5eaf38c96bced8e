#include "fsp/ds_diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "diagram_analysis.hpp"
#include "fsp/error.hpp"

namespace fsp {
namespace detail {

namespace {

std::string edge_name(const CombinatorialMap& m, Dart d) {
  std::ostringstream os;
  os << "{" << std::min(d, m.alpha[d]) << "," << std::max(d, m.alpha[d]) << "}";
  return os.str();
}

bool check_map(const DsDiagram& d, DiagramAnalysis& a, std::vector<std::string>& out) {
  const CombinatorialMap& m = d.map;
  const int n = m.dart_count();
  if (n == 0) {
    out.push_back("empty map");
    return false;
  }
  if (static_cast<int>(m.sigma.size()) != n) {
    out.push_back("sigma and alpha have different sizes");
    return false;
  }
  bool ok = true;
  for (Dart x = 0; x < n; ++x) {
    Dart y = m.alpha[x];
    if (y < 0 || y >= n || m.alpha[y] != x) {
      out.push_back("alpha is not an involution at dart " + std::to_string(x));
      return false;
    }
    if (y == x) {
      out.push_back("alpha has fixed point " + std::to_string(x));
      ok = false;
    }
  }
  std::vector<int> hits(n, 0);
  for (Dart x = 0; x < n; ++x) {
    if (m.sigma[x] < 0 || m.sigma[x] >= n) {
      out.push_back("sigma maps dart " + std::to_string(x) + " outside the map");
      return false;
    }
    ++hits[m.sigma[x]];
  }
  if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
    out.push_back("sigma is not a permutation");
    return false;
  }
  if (!ok) return false;

  a.vertex_of.assign(n, -1);
  for (int i = 0; i < static_cast<int>(d.vertices.size()); ++i) {
    const GraphVertex& v = d.vertices[i];
    if (!a.vertex_index.emplace(v.id, i).second)
      out.push_back("duplicate vertex id " + std::to_string(v.id));
    for (int j = 0; j < 3; ++j) {
      Dart x = v.darts[j];
      if (x < 0 || x >= n) {
        out.push_back("vertex " + std::to_string(v.id) + " names unknown dart " + std::to_string(x));
        return false;
      }
      if (a.vertex_of[x] != -1) {
        out.push_back("dart " + std::to_string(x) + " belongs to two vertices");
        return false;
      }
      a.vertex_of[x] = i;
      if (m.sigma[x] != v.darts[(j + 1) % 3]) {
        out.push_back("sigma disagrees with the rotation at vertex " + std::to_string(v.id));
        return false;
      }
    }
  }
  for (Dart x = 0; x < n; ++x)
    if (a.vertex_of[x] == -1) {
      out.push_back("dart " + std::to_string(x) + " is not at any vertex (map not trivalent)");
      return false;
    }
  if (!out.empty()) return false;
  if (!is_connected(m)) {
    out.push_back("map is not connected");
    return false;
  }
  a.faces = face_structure(m);
  for (int f = 0; f < static_cast<int>(a.faces.faces.size()); ++f) a.face_by_name[a.faces.name(f)] = f;
  const int V = static_cast<int>(d.vertices.size());
  const int E = n / 2;
  const int F = static_cast<int>(a.faces.faces.size());
  if (V - E + F != 2) {
    out.push_back("Euler formula fails: V - E + F = " + std::to_string(V - E + F));
    return false;
  }
  return true;
}

bool check_e_cycle(const DsDiagram& d, DiagramAnalysis& a, std::vector<std::string>& out) {
  const CombinatorialMap& m = d.map;
  const int n = m.dart_count();
  const int k = static_cast<int>(d.e_cycle.size());
  if (k == 0) {
    out.push_back("E-cycle is empty");
    return false;
  }
  for (Dart x : d.e_cycle)
    if (x < 0 || x >= n) {
      out.push_back("E-cycle names unknown dart " + std::to_string(x));
      return false;
    }
  a.e_position.assign(d.vertices.size(), -1);
  a.on_e.assign(n, 0);
  bool ok = true;
  for (int i = 0; i < k; ++i) {
    Dart x = d.e_cycle[i];
    Dart next = d.e_cycle[(i + 1) % k];
    if (a.vertex_of[m.alpha[x]] != a.vertex_of[next]) {
      out.push_back("E-cycle is not a closed walk at position " + std::to_string(i));
      ok = false;
    }
    int v = a.vertex_of[x];
    if (a.e_position[v] != -1) {
      out.push_back("E-cycle is not simple: vertex " + std::to_string(d.vertices[v].id) + " repeated");
      ok = false;
    }
    a.e_position[v] = i;
    if (a.on_e[x]) {
      out.push_back("E-cycle is not simple: edge " + edge_name(m, x) + " repeated");
      ok = false;
    }
    a.on_e[x] = a.on_e[m.alpha[x]] = 1;
  }
  if (!ok) return false;
  if (k < 2) {
    out.push_back("E-cycle is a loop at a single vertex");
    return false;
  }

  const int F = static_cast<int>(a.faces.faces.size());
  a.face_inside.assign(F, 0);
  std::vector<int> stack;
  for (Dart x : d.e_cycle) stack.push_back(a.left_face(x));
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    if (a.face_inside[f]) continue;
    a.face_inside[f] = 1;
    for (Dart x : a.faces.faces[f])
      if (!a.on_e[x]) stack.push_back(a.right_face(x));
  }
  for (Dart x : d.e_cycle)
    if (a.face_inside[a.right_face(x)]) {
      out.push_back("E-cycle does not separate inside from outside");
      return false;
    }
  return true;
}

bool check_labels(const DsDiagram& d, DiagramAnalysis& a, std::vector<std::string>& out) {
  const CombinatorialMap& m = d.map;
  const int n = m.dart_count();
  a.label_of.assign(n, -1);
  a.copy_of.assign(n, Copy::E);
  a.forward.assign(n, 0);
  std::vector<int> count(n, 0);
  std::set<int> ids;
  bool ok = true;
  auto edge_side = [&](Dart x) {
    bool in_l = a.face_inside[a.left_face(x)] != 0;
    bool in_r = a.face_inside[a.right_face(x)] != 0;
    if (a.on_e[x]) return Copy::E;
    return (in_l && in_r) ? Copy::inside : Copy::outside;
  };
  std::set<Dart> e_darts(d.e_cycle.begin(), d.e_cycle.end());
  for (int li = 0; li < static_cast<int>(d.edge_labels.size()); ++li) {
    const EdgeLabel& l = d.edge_labels[li];
    const std::string name = "spine edge " + std::to_string(l.id);
    if (!ids.insert(l.id).second) {
      out.push_back("duplicate spine-edge id " + std::to_string(l.id));
      ok = false;
    }
    const Dart copies[3] = {l.e_copy, l.in_copy, l.out_copy};
    const Copy kinds[3] = {Copy::E, Copy::inside, Copy::outside};
    for (int c = 0; c < 3; ++c) {
      Dart x = copies[c];
      if (x < 0 || x >= n) {
        out.push_back(name + " names unknown dart " + std::to_string(x));
        ok = false;
        continue;
      }
      if (c == 0 && !e_darts.count(x)) {
        out.push_back(name + ": E-copy dart is not a forward E-cycle dart");
        ok = false;
      } else if (edge_side(x) != kinds[c]) {
        out.push_back(name + ": copy " + edge_name(m, x) + " lies on the wrong side of E");
        ok = false;
      }
      for (Dart y : {x, m.alpha[x]}) {
        ++count[y];
        a.label_of[y] = li;
        a.copy_of[y] = kinds[c];
      }
      a.forward[x] = 1;
      a.forward[m.alpha[x]] = 0;
    }
  }
  for (Dart x = 0; x < n; ++x)
    if (x < m.alpha[x] && count[x] != 1) {
      out.push_back("label multiplicity ≠ 3: graph edge " + edge_name(m, x) + " carries " +
                    std::to_string(count[x]) + " spine-edge labels");
      ok = false;
    }

  const int V = static_cast<int>(d.vertices.size());
  a.vlabel_of.assign(V, -1);
  std::vector<int> vcount(V, 0);
  ids.clear();
  for (int li = 0; li < static_cast<int>(d.vertex_labels.size()); ++li) {
    const VertexLabel& l = d.vertex_labels[li];
    const std::string name = "spine vertex " + std::to_string(l.id);
    if (!ids.insert(l.id).second) {
      out.push_back("duplicate spine-vertex id " + std::to_string(l.id));
      ok = false;
    }
    int on_e = 0, inside = 0, outside = 0;
    for (int vid : l.vertices) {
      auto it = a.vertex_index.find(vid);
      if (it == a.vertex_index.end()) {
        out.push_back(name + " names unknown vertex " + std::to_string(vid));
        ok = false;
        continue;
      }
      int v = it->second;
      ++vcount[v];
      a.vlabel_of[v] = li;
      if (a.e_position[v] != -1) {
        ++on_e;
      } else if (a.face_inside[a.left_face(d.vertices[v].darts[0])]) {
        ++inside;
      } else {
        ++outside;
      }
    }
    if (on_e != 2 || inside != 1 || outside != 1) {
      out.push_back(name + " does not have two E-copies, one inside copy and one outside copy");
      ok = false;
    }
  }
  for (int v = 0; v < V; ++v)
    if (vcount[v] != 1) {
      out.push_back("label multiplicity ≠ 4: graph vertex " + std::to_string(d.vertices[v].id) +
                    " carries " + std::to_string(vcount[v]) + " spine-vertex labels");
      ok = false;
    }
  return ok;
}

bool check_incidence(const DsDiagram& d, DiagramAnalysis& a, std::vector<std::string>& out) {
  bool ok = true;
  for (const EdgeLabel& l : d.edge_labels) {
    std::set<int> tails, heads;
    for (Dart x : {l.e_copy, l.in_copy, l.out_copy}) {
      tails.insert(a.vlabel_of[a.vertex_of[x]]);
      heads.insert(a.vlabel_of[a.vertex_of[d.map.alpha[x]]]);
    }
    if (tails.size() != 1 || heads.size() != 1) {
      out.push_back("spine edge " + std::to_string(l.id) + ": copies disagree on endpoint spine vertices");
      ok = false;
    }
  }
  return ok;
}

bool rotation_matches(const DiagramAnalysis& a, const GraphVertex& v, const std::vector<EdgeEnd>& want) {
  for (int s = 0; s < 3; ++s) {
    bool all = true;
    for (int j = 0; j < 3 && all; ++j) all = a.end(v.darts[(s + j) % 3]) == want[j];
    if (all) return true;
  }
  return false;
}

bool check_vertex_models(const DsDiagram& d, DiagramAnalysis& a, std::vector<std::string>& out) {
  bool ok = true;
  for (int li = 0; li < static_cast<int>(d.vertex_labels.size()); ++li) {
    const std::string name = "spine vertex " + std::to_string(d.vertex_labels[li].id);
    auto [pa, pb] = a.passages(li);
    if (pa < 0 || pb < 0) {
      out.push_back("vertex model: both E-passages of " + name + " leave to the same side");
      ok = false;
      continue;
    }
    EdgeEnd P = a.end(a.e_in(pa)), Q = a.end(a.e_out(pa));
    EdgeEnd P2 = a.end(a.e_in(pb)), Q2 = a.end(a.e_out(pb));
    EdgeEnd ta = a.end(a.e_third(pa)), tb = a.end(a.e_third(pb));
    std::vector<EdgeEnd> want_in, want_out;
    if (ta == Q2 && tb == P) {
      want_in = {P, P2, Q};
      want_out = {Q2, Q, P2};
    } else if (ta == P2 && tb == Q) {
      want_in = {Q, P, Q2};
      want_out = {P2, Q2, P};
    } else {
      out.push_back("vertex model: third darts of " + name + " match neither chirality");
      ok = false;
      continue;
    }
    for (int vid : d.vertex_labels[li].vertices) {
      int v = a.vertex_index.at(vid);
      if (a.e_position[v] != -1) continue;
      bool inside = a.face_inside[a.left_face(d.vertices[v].darts[0])] != 0;
      if (!rotation_matches(a, d.vertices[v], inside ? want_in : want_out)) {
        out.push_back("vertex model: rotation at the " + std::string(inside ? "inside" : "outside") +
                      " copy of " + name + " is inconsistent");
        ok = false;
      }
    }
  }
  return ok;
}

bool check_regions(const DsDiagram& d, DiagramAnalysis& a, std::vector<std::string>& out) {
  const int F = static_cast<int>(a.faces.faces.size());
  a.region_of_face.assign(F, -1);
  bool ok = true;
  std::set<int> ids;
  for (int ri = 0; ri < static_cast<int>(d.regions.size()); ++ri) {
    const RegionPair& r = d.regions[ri];
    const std::string name = "region " + std::to_string(r.id);
    if (!ids.insert(r.id).second) {
      out.push_back("duplicate region id " + std::to_string(r.id));
      ok = false;
    }
    auto fi = a.face_by_name.find(r.inside_face);
    auto fo = a.face_by_name.find(r.outside_face);
    if (fi == a.face_by_name.end() || fo == a.face_by_name.end()) {
      out.push_back(name + " names a dart that is not the minimal dart of a face");
      ok = false;
      continue;
    }
    if (!a.face_inside[fi->second] || a.face_inside[fo->second]) {
      out.push_back(name + " does not pair an inside face with an outside face");
      ok = false;
      continue;
    }
    for (int f : {fi->second, fo->second}) {
      if (a.region_of_face[f] != -1) {
        out.push_back("face " + std::to_string(a.faces.name(f)) + " is paired twice");
        ok = false;
      }
      a.region_of_face[f] = ri;
    }
  }
  for (int f = 0; f < F; ++f)
    if (a.region_of_face[f] == -1) {
      out.push_back("face " + std::to_string(a.faces.name(f)) + " is not paired");
      ok = false;
    }
  if (!ok) return false;

  for (const EdgeLabel& l : d.edge_labels) {
    const int pairs[3][2] = {{a.left_face(l.e_copy), a.right_face(l.out_copy)},
                             {a.left_face(l.in_copy), a.right_face(l.e_copy)},
                             {a.right_face(l.in_copy), a.left_face(l.out_copy)}};
    for (const auto& p : pairs)
      if (a.region_of_face[p[0]] != a.region_of_face[p[1]]) {
        out.push_back("edge model: region pairing disagrees along spine edge " + std::to_string(l.id));
        ok = false;
        break;
      }
  }
  for (const RegionPair& r : d.regions) {
    auto wi = a.inside_word(a.face_by_name.at(r.inside_face));
    auto wo = a.outside_word(a.face_by_name.at(r.outside_face));
    if (!cyclic_equal(wi, wo)) {
      out.push_back("boundary-word mismatch in region " + std::to_string(r.id));
      ok = false;
    }
  }
  return ok;
}

}  // namespace

Dart DiagramAnalysis::e_out(int k) const { return diagram->e_cycle[k]; }

Dart DiagramAnalysis::e_in(int k) const {
  const int n = static_cast<int>(diagram->e_cycle.size());
  return diagram->map.alpha[diagram->e_cycle[(k + n - 1) % n]];
}

Dart DiagramAnalysis::e_third(int k) const {
  const GraphVertex& v = diagram->vertices[vertex_of[e_out(k)]];
  for (Dart x : v.darts)
    if (x != e_out(k) && x != e_in(k)) return x;
  return -1;
}

Side DiagramAnalysis::third_side(int k) const {
  return diagram->map.sigma[e_out(k)] == e_third(k) ? Side::inside : Side::outside;
}

std::vector<SignedLetter> DiagramAnalysis::inside_word(int face) const {
  std::vector<SignedLetter> w;
  for (Dart x : faces.faces[face]) w.push_back({diagram->edge_labels[label_of[x]].id, forward[x] ? 1 : -1});
  return w;
}

std::vector<SignedLetter> DiagramAnalysis::outside_word(int face) const {
  std::vector<SignedLetter> w;
  const auto& orbit = faces.faces[face];
  for (auto it = orbit.rbegin(); it != orbit.rend(); ++it)
    w.push_back({diagram->edge_labels[label_of[*it]].id, forward[*it] ? -1 : 1});
  return w;
}

std::pair<int, int> DiagramAnalysis::passages(int vlabel) const {
  int in = -1, out = -1;
  for (int vid : diagram->vertex_labels[vlabel].vertices) {
    int v = vertex_index.at(vid);
    int k = e_position[v];
    if (k < 0) continue;
    if (third_side(k) == Side::inside) {
      in = in == -1 ? k : -2;
    } else {
      out = out == -1 ? k : -2;
    }
  }
  return {in < 0 ? -1 : in, out < 0 ? -1 : out};
}

bool cyclic_equal(const std::vector<SignedLetter>& a, const std::vector<SignedLetter>& b) {
  if (a.size() != b.size()) return false;
  const size_t n = a.size();
  if (n == 0) return true;
  for (size_t s = 0; s < n; ++s) {
    bool all = true;
    for (size_t i = 0; i < n && all; ++i) all = a[i] == b[(i + s) % n];
    if (all) return true;
  }
  return false;
}

DiagramAnalysis analyze(const DsDiagram& d, std::vector<std::string>* violations) {
  DiagramAnalysis a;
  a.diagram = &d;
  std::vector<std::string> local;
  std::vector<std::string>& out = violations ? *violations : local;
  if (!check_map(d, a, out)) return a;
  if (!check_e_cycle(d, a, out)) return a;
  if (!check_labels(d, a, out)) return a;
  bool ok = check_incidence(d, a, out);
  ok = check_vertex_models(d, a, out) && ok;
  ok = check_regions(d, a, out) && ok;
  a.complete = ok;
  return a;
}

DiagramAnalysis analyze_valid(const DsDiagram& d) {
  std::vector<std::string> out;
  DiagramAnalysis a = analyze(d, &out);
  if (!out.empty()) throw Error("invalid diagram: " + out.front());
  return a;
}

}  // namespace detail

ValidationReport validate(const DsDiagram& d) {
  ValidationReport r;
  detail::DiagramAnalysis a = detail::analyze(d, &r.violations);
  r.spine_vertices = static_cast<int>(d.vertex_labels.size());
  r.spine_edges = static_cast<int>(d.edge_labels.size());
  r.regions = static_cast<int>(d.regions.size());
  if (a.complete && (r.spine_edges != 2 * r.spine_vertices || r.regions != r.spine_vertices + 1))
    r.violations.push_back("special counts fail: m = " + std::to_string(r.spine_edges) +
                           ", n = " + std::to_string(r.regions));
  return r;
}

void require_valid(const DsDiagram& d) {
  ValidationReport r = validate(d);
  if (!r.valid()) throw Error("invalid diagram: " + r.violations.front());
}

char to_char(VertexType t) { return t == VertexType::l ? 'l' : 'r'; }

char to_char(EdgeType t) { return "abcd"[static_cast<int>(t)]; }

std::map<int, EdgeType> classify_edge_types(const DsDiagram& d) {
  detail::DiagramAnalysis a = detail::analyze_valid(d);
  const int k = static_cast<int>(d.e_cycle.size());
  std::map<int, EdgeType> out;
  for (int i = 0; i < k; ++i) {
    const Dart x = d.e_cycle[i];
    if (a.vertex_of[x] == a.vertex_of[d.map.alpha[x]])
      throw Error("unclassifiable: E-copy of spine edge " +
                  std::to_string(d.edge_labels[a.label_of[x]].id) + " is a loop");
    const bool tail_in = a.third_side(i) == Side::inside;
    const bool head_in = a.third_side((i + 1) % k) == Side::inside;
    EdgeType t = tail_in ? (head_in ? EdgeType::b : EdgeType::a) : (head_in ? EdgeType::d : EdgeType::c);
    out[d.edge_labels[a.label_of[x]].id] = t;
  }
  return out;
}

std::map<int, VertexType> classify_vertex_types(const DsDiagram& d) {
  detail::DiagramAnalysis a = detail::analyze_valid(d);
  std::map<int, VertexType> out;
  for (int li = 0; li < static_cast<int>(d.vertex_labels.size()); ++li) {
    auto [pa, pb] = a.passages(li);
    const bool left = a.end(a.e_third(pa)) == a.end(a.e_out(pb));
    out[d.vertex_labels[li].id] = left ? VertexType::l : VertexType::r;
  }
  return out;
}

bool is_positive(const DsDiagram& d) {
  auto types = classify_vertex_types(d);
  if (types.empty()) return false;
  return std::all_of(types.begin(), types.end(), [](const auto& kv) { return kv.second == VertexType::l; });
}

bool satisfies_path_grammar(const DsDiagram& d) {
  auto types = classify_edge_types(d);
  std::string seq;
  detail::DiagramAnalysis a = detail::analyze_valid(d);
  for (Dart x : d.e_cycle) seq += to_char(types.at(d.edge_labels[a.label_of[x]].id));
  // Rotate so the sequence starts at an edge whose tail third dart is inside.
  const size_t n = seq.size();
  size_t start = n;
  for (size_t i = 0; i < n; ++i)
    if (seq[i] == 'a' || seq[i] == 'b') {
      start = i;
      break;
    }
  if (start == n) return false;
  std::string rot = seq.substr(start) + seq.substr(0, start);
  size_t i = 0;
  while (i < n) {
    if (rot[i] == 'b') {
      ++i;
      continue;
    }
    if (rot[i] != 'a') return false;
    ++i;
    while (i < n && rot[i] == 'c') ++i;
    if (i == n || rot[i] != 'd') return false;
    ++i;
  }
  return true;
}

DsDiagram mirror(const DsDiagram& d) {
  detail::DiagramAnalysis a = detail::analyze_valid(d);
  DsDiagram m = d;
  const auto& alpha = d.map.alpha;
  for (GraphVertex& v : m.vertices) std::swap(v.darts[1], v.darts[2]);
  m.map.sigma = d.map.sigma_inverse();
  m.e_cycle.clear();
  for (auto it = d.e_cycle.rbegin(); it != d.e_cycle.rend(); ++it) m.e_cycle.push_back(alpha[*it]);
  for (EdgeLabel& l : m.edge_labels) {
    l.e_copy = alpha[l.e_copy];
    l.in_copy = alpha[l.in_copy];
    l.out_copy = alpha[l.out_copy];
  }
  // The face left of x in the mirror is the old face right of alpha(x); name
  // each old face by the least alpha-image of its darts.
  auto rename = [&](Dart name) {
    const auto& orbit = a.faces.faces[a.face_by_name.at(name)];
    Dart best = alpha[orbit.front()];
    for (Dart x : orbit) best = std::min(best, alpha[x]);
    return best;
  };
  for (RegionPair& r : m.regions) {
    r.inside_face = rename(r.inside_face);
    r.outside_face = rename(r.outside_face);
  }
  return m;
}

}  // namespace fsp
