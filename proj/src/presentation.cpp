#include "fsp/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "diagram_analysis.hpp"
#include "fsp/error.hpp"
#include "text_lines.hpp"

namespace fsp {

int SpinePresentation::vertex_index(int id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
  return it != vertices.end() && *it == id ? static_cast<int>(it - vertices.begin()) : -1;
}

int SpinePresentation::edge_index(int id) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), id,
                             [](const PresentationEdge& e, int v) { return e.id < v; });
  return it != edges.end() && it->id == id ? static_cast<int>(it - edges.begin()) : -1;
}

void check_structure(const SpinePresentation& p) {
  for (size_t i = 1; i < p.vertices.size(); ++i)
    if (p.vertices[i - 1] >= p.vertices[i]) throw Error("vertex ids not strictly increasing");
  for (size_t i = 1; i < p.edges.size(); ++i)
    if (p.edges[i - 1].id >= p.edges[i].id) throw Error("edge ids not strictly increasing");
  for (size_t i = 1; i < p.regions.size(); ++i)
    if (p.regions[i - 1].id >= p.regions[i].id) throw Error("region ids not strictly increasing");
  for (const PresentationEdge& e : p.edges)
    if (!e.circle && (p.vertex_index(e.from) < 0 || p.vertex_index(e.to) < 0))
      throw Error("edge " + std::to_string(e.id) + " has an unknown endpoint");
  for (const PresentationRegion& r : p.regions) {
    if (r.boundaries.empty()) throw Error("region " + std::to_string(r.id) + " has no boundary");
    for (const BoundaryWord& w : r.boundaries) {
      if (w.empty()) throw Error("region " + std::to_string(r.id) + " has an empty boundary word");
      for (const SignedEdge& s : w) {
        if (p.edge_index(s.edge) < 0)
          throw Error("region " + std::to_string(r.id) + " names unknown edge " + std::to_string(s.edge));
        if (s.sign != 1 && s.sign != -1) throw Error("boundary sign must be +1 or -1");
      }
    }
  }
}

std::vector<std::string> check_presentation(const SpinePresentation& p) {
  check_structure(p);
  std::vector<std::string> out;
  std::map<int, std::vector<int>> incidences;
  for (const PresentationRegion& r : p.regions)
    for (const BoundaryWord& w : r.boundaries)
      for (const SignedEdge& s : w) incidences[s.edge].push_back(s.sign);
  for (const PresentationEdge& e : p.edges) {
    const auto& signs = incidences[e.id];
    if (signs.size() != 3)
      out.push_back("edge " + std::to_string(e.id) + " has boundary multiplicity " + std::to_string(signs.size()));
    else if (std::all_of(signs.begin(), signs.end(), [&](int s) { return s == signs.front(); }))
      out.push_back("edge " + std::to_string(e.id) + " violates branching (all incidences agree)");
  }
  if (p.euler_characteristic() != 1)
    out.push_back("Euler characteristic is " + std::to_string(p.euler_characteristic()) + ", not 1");
  return out;
}

bool is_special(const SpinePresentation& p) {
  if (p.vertices.empty()) return false;
  for (const PresentationEdge& e : p.edges)
    if (e.circle) return false;
  for (const PresentationRegion& r : p.regions)
    if (r.boundaries.size() != 1) return false;
  return true;
}

SpinePresentation derive_presentation(const DsDiagram& d) {
  detail::DiagramAnalysis a = detail::analyze_valid(d);
  SpinePresentation p;
  for (const VertexLabel& l : d.vertex_labels) p.vertices.push_back(l.id);
  std::sort(p.vertices.begin(), p.vertices.end());
  for (const EdgeLabel& l : d.edge_labels) {
    int from = d.vertex_labels[a.vlabel_of[a.vertex_of[l.e_copy]]].id;
    int to = d.vertex_labels[a.vlabel_of[a.vertex_of[d.map.alpha[l.e_copy]]]].id;
    p.edges.push_back({l.id, false, from, to});
  }
  std::sort(p.edges.begin(), p.edges.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  for (const RegionPair& r : d.regions) {
    BoundaryWord w;
    for (const auto& s : a.inside_word(a.face_by_name.at(r.inside_face))) w.push_back({s.edge_id, s.sign});
    p.regions.push_back({r.id, {w}});
  }
  std::sort(p.regions.begin(), p.regions.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  return p;
}

SpinePresentation parse_presentation(const std::string& text) {
  SpinePresentation p;
  std::map<int, PresentationRegion> regions;
  std::set<int> vertex_ids, edge_ids;
  detail::LineReader in(text, "%spine 1");
  detail::Line line;
  while (in.next(line)) {
    if (line.key == "vertex") {
      line.expect_args(1);
      if (!vertex_ids.insert(line.integer(0)).second)
        throw ParseError(line.number, "duplicate vertex id " + line.args[0]);
    } else if (line.key == "edge") {
      if (line.args.size() < 2) throw ParseError(line.number, "'edge' expects an id and a kind");
      PresentationEdge e;
      e.id = line.integer(0);
      if (line.args[1] == "arc") {
        line.expect_args(4);
        e.from = line.integer(2);
        e.to = line.integer(3);
      } else if (line.args[1] == "circle") {
        line.expect_args(2);
        e.circle = true;
      } else {
        throw ParseError(line.number, "edge kind must be 'arc' or 'circle'");
      }
      if (!edge_ids.insert(e.id).second) throw ParseError(line.number, "duplicate edge id " + line.args[0]);
      p.edges.push_back(e);
    } else if (line.key == "region") {
      if (line.args.size() < 3 || line.args[1] != "word")
        throw ParseError(line.number, "expected 'region rid word ±eid ...'");
      PresentationRegion& r = regions[line.integer(0)];
      r.id = line.integer(0);
      BoundaryWord w;
      for (size_t i = 2; i < line.args.size(); ++i) {
        std::string tok = line.args[i];
        int sign = 1;
        if (tok[0] == '+' || tok[0] == '-') {
          sign = tok[0] == '-' ? -1 : 1;
          tok.erase(0, 1);
        }
        detail::Line sub = line;
        sub.args = {tok};
        w.push_back({sub.integer(0), sign});
      }
      r.boundaries.push_back(w);
    } else {
      throw ParseError(line.number, "unknown key '" + line.key + "'");
    }
  }
  p.vertices.assign(vertex_ids.begin(), vertex_ids.end());
  std::sort(p.edges.begin(), p.edges.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  for (auto& [id, r] : regions) p.regions.push_back(r);
  try {
    check_structure(p);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
  return p;
}

std::string to_string(const BoundaryWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << (w[i].sign > 0 ? "+" : "-") << w[i].edge;
  return os.str();
}

std::string write_presentation(const SpinePresentation& p, const std::string& comment) {
  std::ostringstream os;
  os << "%spine 1\n";
  std::istringstream cs(comment);
  for (std::string l; std::getline(cs, l);) os << "# " << l << "\n";
  for (int v : p.vertices) os << "vertex " << v << "\n";
  for (const PresentationEdge& e : p.edges) {
    os << "edge " << e.id;
    if (e.circle)
      os << " circle\n";
    else
      os << " arc " << e.from << " " << e.to << "\n";
  }
  for (const PresentationRegion& r : p.regions)
    for (const BoundaryWord& w : r.boundaries) os << "region " << r.id << " word " << to_string(w) << "\n";
  return os.str();
}

std::vector<int> spanning_tree(const SpinePresentation& p) {
  std::vector<int> parent(p.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> tree;
  for (const PresentationEdge& e : p.edges) {
    if (e.circle) continue;
    int a = find(p.vertex_index(e.from)), b = find(p.vertex_index(e.to));
    if (a == b) continue;
    parent[a] = b;
    tree.push_back(e.id);
  }
  return tree;
}

}  // namespace fsp
