#include "fsp/flow_code.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "diagram_analysis.hpp"
#include "fsp/error.hpp"

namespace fsp {

std::string check_flow_code(const FlowCode& c) {
  const int n = c.spine_vertices();
  if (n == 0) return "flow code has no spine vertices";
  if (static_cast<int>(c.word.size()) != 2 * n || c.inward.size() != c.word.size())
    return "flow code lengths disagree";
  std::vector<int> seen(n, 0), inward(n, 0);
  for (size_t k = 0; k < c.word.size(); ++k) {
    int v = c.word[k];
    if (v < 0 || v >= n) return "flow code letter out of range";
    ++seen[v];
    if (c.inward[k]) ++inward[v];
  }
  for (int v = 0; v < n; ++v) {
    if (seen[v] != 2) return "flow code letter " + std::to_string(v) + " does not occur twice";
    if (inward[v] != 1) return "flow code letter " + std::to_string(v) + " needs exactly one inward passage";
  }
  return {};
}

namespace {

enum CopyIndex { kE = 0, kIn = 1, kOut = 2 };

// Dart numbering: E-edge k owns darts 6k..6k+5, copies E, inside, outside,
// each as (tail end, head end).
Dart dart(int edge, int copy, bool tail) { return 6 * edge + 2 * copy + (tail ? 0 : 1); }

struct End {
  int edge;
  bool tail;
};

}  // namespace

DsDiagram build_diagram(const FlowCode& c) {
  if (std::string err = check_flow_code(c); !err.empty()) throw Error(err);
  const int n = c.spine_vertices();
  const int len = 2 * n;
  auto p = [&](int k) { return End{(k + len - 1) % len, false}; };
  auto q = [&](int k) { return End{k, true}; };

  std::vector<std::array<int, 2>> occ(n, {-1, -1});
  for (int k = 0; k < len; ++k) {
    int v = c.word[k];
    (occ[v][0] == -1 ? occ[v][0] : occ[v][1]) = k;
  }

  DsDiagram d;
  const int N = 12 * n;
  d.map.alpha.resize(N);
  d.map.sigma.assign(N, -1);
  for (Dart x = 0; x < N; ++x) d.map.alpha[x] = x ^ 1;
  auto add_vertex = [&](int id, std::array<Dart, 3> ds) {
    d.vertices.push_back({id, ds});
    for (int j = 0; j < 3; ++j) d.map.sigma[ds[j]] = ds[(j + 1) % 3];
  };
  auto on = [&](End e, int copy) { return dart(e.edge, copy, e.tail); };

  struct Third {
    int copy;
    End end;
  };
  std::vector<Third> third(len);
  std::vector<std::array<int, 4>> copies(n);
  for (int v = 0; v < n; ++v) {
    int a = occ[v][0], b = occ[v][1];
    if (!c.inward[a]) std::swap(a, b);
    const End P = p(a), Q = q(a), P2 = p(b), Q2 = q(b);
    if (c.types[v] == VertexType::l) {
      third[a] = {kIn, Q2};
      third[b] = {kOut, P};
    } else {
      third[a] = {kIn, P2};
      third[b] = {kOut, Q};
    }
    copies[v] = {a, b, len + v, len + n + v};
  }
  for (int k = 0; k < len; ++k) {
    Dart dq = dart(k, kE, true), dp = dart((k + len - 1) % len, kE, false);
    Dart dt = on(third[k].end, third[k].copy);
    if (third[k].copy == kIn)
      add_vertex(k, {dq, dt, dp});
    else
      add_vertex(k, {dq, dp, dt});
  }
  for (int v = 0; v < n; ++v) {
    int a = copies[v][0], b = copies[v][1];
    End P = p(a), Q = q(a), P2 = p(b), Q2 = q(b);
    if (c.types[v] == VertexType::l) {
      add_vertex(len + v, {on(P, kIn), on(P2, kIn), on(Q, kIn)});
    } else {
      add_vertex(len + v, {on(Q, kIn), on(P, kIn), on(Q2, kIn)});
    }
  }
  for (int v = 0; v < n; ++v) {
    int a = copies[v][0], b = copies[v][1];
    End P = p(a), Q = q(a), P2 = p(b), Q2 = q(b);
    if (c.types[v] == VertexType::l) {
      add_vertex(len + n + v, {on(Q2, kOut), on(Q, kOut), on(P2, kOut)});
    } else {
      add_vertex(len + n + v, {on(P2, kOut), on(Q2, kOut), on(P, kOut)});
    }
  }
  for (int k = 0; k < len; ++k) d.e_cycle.push_back(dart(k, kE, true));
  for (int k = 0; k < len; ++k)
    d.edge_labels.push_back({k + 1, dart(k, kE, true), dart(k, kIn, true), dart(k, kOut, true)});
  for (int v = 0; v < n; ++v) d.vertex_labels.push_back({v + 1, copies[v]});

  // Region pairing from the edge model: left(E) ~ right(out),
  // right(E) ~ left(in), right(in) ~ left(out).
  FaceStructure fs = face_structure(d.map);
  const int V = 4 * n, E = 6 * n;
  if (V - E + static_cast<int>(fs.faces.size()) != 2)
    throw Error("flow code does not complete to a sphere map (Euler characteristic)");
  std::map<int, int> pair;
  bool consistent = true;
  auto link = [&](Dart in_side, Dart out_side) {
    int fi = fs.face_of[in_side], fo = fs.face_of[out_side];
    auto [it, fresh] = pair.emplace(fi, fo);
    if (!fresh && it->second != fo) consistent = false;
  };
  for (int k = 0; k < len; ++k) {
    Dart dE = dart(k, kE, true), dI = dart(k, kIn, true), dO = dart(k, kOut, true);
    link(dE, dO ^ 1);
    link(dI, dE ^ 1);
    link(dI ^ 1, dO);
  }
  if (!consistent) throw Error("flow code gives an inconsistent region pairing");
  int rid = 1;
  for (auto [fi, fo] : pair) d.regions.push_back({rid++, fs.name(fi), fs.name(fo)});

  ValidationReport r = validate(d);
  if (!r.valid()) throw Error("flow code does not give a valid diagram: " + r.violations.front());
  return d;
}

FlowCode flow_code(const DsDiagram& d) {
  detail::DiagramAnalysis a = detail::analyze_valid(d);
  auto types = classify_vertex_types(d);
  FlowCode c;
  std::map<int, int> letter;  // vertex-label index -> letter
  for (int k = 0; k < static_cast<int>(d.e_cycle.size()); ++k) {
    int li = a.vlabel_of[a.vertex_of[d.e_cycle[k]]];
    auto [it, fresh] = letter.emplace(li, static_cast<int>(letter.size()));
    if (fresh) c.types.push_back(types.at(d.vertex_labels[li].id));
    c.word.push_back(it->second);
    c.inward.push_back(a.third_side(k) == Side::inside);
  }
  return c;
}

std::string to_string(const FlowCode& c) {
  std::ostringstream os;
  for (size_t k = 0; k < c.word.size(); ++k) os << (k ? " " : "") << c.word[k] << (c.inward[k] ? "i" : "o");
  os << " |";
  for (VertexType t : c.types) os << " " << to_char(t);
  return os.str();
}

}  // namespace fsp
