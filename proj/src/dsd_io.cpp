#include "fsp/dsd_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fsp/error.hpp"
#include "text_lines.hpp"

namespace fsp {

DsDiagram parse_diagram(const std::string& text) {
  DsDiagram d;
  int darts = -1, darts_line = 0;
  bool have_ecycle = false;
  std::map<Dart, Dart> alpha;
  std::set<int> vertex_ids, edge_ids, vlabel_ids, region_ids;
  std::map<Dart, int> dart_vertex;

  detail::LineReader in(text, "%dsd 1");
  detail::Line line;
  while (in.next(line)) {
    const std::string& key = line.key;
    if (key == "darts") {
      line.expect_args(1);
      if (darts >= 0) throw ParseError(line.number, "repeated darts line");
      darts = line.integer(0);
      darts_line = line.number;
      if (darts < 0) throw ParseError(line.number, "negative dart count");
    } else if (key == "edge") {
      line.expect_args(2);
      Dart x = line.integer(0), y = line.integer(1);
      if (x == y) throw ParseError(line.number, "alpha has fixed point " + std::to_string(x));
      for (Dart z : {x, y})
        if (alpha.count(z)) throw ParseError(line.number, "duplicate dart " + std::to_string(z));
      alpha[x] = y;
      alpha[y] = x;
    } else if (key == "vertex") {
      line.expect_args(4);
      GraphVertex v{line.integer(0), {line.integer(1), line.integer(2), line.integer(3)}};
      if (!vertex_ids.insert(v.id).second)
        throw ParseError(line.number, "duplicate vertex id " + std::to_string(v.id));
      for (Dart z : v.darts)
        if (!dart_vertex.emplace(z, v.id).second)
          throw ParseError(line.number, "dart " + std::to_string(z) + " listed at two vertices");
      d.vertices.push_back(v);
    } else if (key == "ecycle") {
      if (have_ecycle) throw ParseError(line.number, "repeated ecycle line");
      if (line.args.empty()) throw ParseError(line.number, "empty ecycle");
      have_ecycle = true;
      for (size_t i = 0; i < line.args.size(); ++i) d.e_cycle.push_back(line.integer(i));
    } else if (key == "elabel") {
      line.expect_args(4);
      EdgeLabel l{line.integer(0), line.integer(1), line.integer(2), line.integer(3)};
      if (!edge_ids.insert(l.id).second)
        throw ParseError(line.number, "duplicate spine-edge id " + std::to_string(l.id));
      d.edge_labels.push_back(l);
    } else if (key == "vlabel") {
      line.expect_args(5);
      VertexLabel l{line.integer(0), {line.integer(1), line.integer(2), line.integer(3), line.integer(4)}};
      if (!vlabel_ids.insert(l.id).second)
        throw ParseError(line.number, "duplicate spine-vertex id " + std::to_string(l.id));
      d.vertex_labels.push_back(l);
    } else if (key == "region") {
      line.expect_args(3);
      RegionPair r{line.integer(0), line.integer(1), line.integer(2)};
      if (!region_ids.insert(r.id).second)
        throw ParseError(line.number, "duplicate region id " + std::to_string(r.id));
      d.regions.push_back(r);
    } else {
      throw ParseError(line.number, "unknown key '" + key + "'");
    }
  }
  if (darts < 0) throw ParseError(0, "missing darts line");
  if (darts == 0) throw ParseError(darts_line, "empty map");
  for (const auto& [x, y] : alpha)
    if (x < 0 || x >= darts) throw ParseError(0, "edge names dart " + std::to_string(x) + " outside 0..N-1");
  for (const auto& [x, v] : dart_vertex)
    if (x < 0 || x >= darts) throw ParseError(0, "vertex names dart " + std::to_string(x) + " outside 0..N-1");
  d.map.alpha.assign(darts, -1);
  d.map.sigma.assign(darts, -1);
  for (const auto& [x, y] : alpha) d.map.alpha[x] = y;
  for (Dart x = 0; x < darts; ++x)
    if (d.map.alpha[x] == -1) throw ParseError(0, "alpha not an involution: dart " + std::to_string(x) + " has no edge");
  for (const GraphVertex& v : d.vertices)
    for (int j = 0; j < 3; ++j) d.map.sigma[v.darts[j]] = v.darts[(j + 1) % 3];
  for (Dart x = 0; x < darts; ++x)
    if (d.map.sigma[x] == -1) throw ParseError(0, "dart " + std::to_string(x) + " is not at any vertex");
  if (!have_ecycle) throw ParseError(0, "missing ecycle line");
  return d;
}

std::string write_diagram(const DsDiagram& d, const std::string& comment) {
  std::ostringstream os;
  os << "%dsd 1\n";
  std::istringstream cs(comment);
  for (std::string l; std::getline(cs, l);) os << "# " << l << "\n";
  os << "darts " << d.map.dart_count() << "\n";
  for (Dart x = 0; x < d.map.dart_count(); ++x)
    if (x < d.map.alpha[x]) os << "edge " << x << " " << d.map.alpha[x] << "\n";
  for (const GraphVertex& v : d.vertices)
    os << "vertex " << v.id << " " << v.darts[0] << " " << v.darts[1] << " " << v.darts[2] << "\n";
  os << "ecycle";
  for (Dart x : d.e_cycle) os << " " << x;
  os << "\n";
  for (const EdgeLabel& l : d.edge_labels)
    os << "elabel " << l.id << " " << l.e_copy << " " << l.in_copy << " " << l.out_copy << "\n";
  for (const VertexLabel& l : d.vertex_labels) {
    os << "vlabel " << l.id;
    for (int v : l.vertices) os << " " << v;
    os << "\n";
  }
  for (const RegionPair& r : d.regions) os << "region " << r.id << " " << r.inside_face << " " << r.outside_face << "\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(0, "cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

DsDiagram read_diagram_file(const std::string& path) { return parse_diagram(read_text_file(path)); }

}  // namespace fsp
