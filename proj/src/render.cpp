#include "fsp/render.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "diagram_analysis.hpp"

namespace fsp {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

const char* copy_name(detail::Copy c) {
  switch (c) {
    case detail::Copy::E: return "E";
    case detail::Copy::inside: return "inside";
    case detail::Copy::outside: return "outside";
  }
  return "";
}

// Positions in the plane, unit circle for E.
std::vector<Eigen::Vector2d> layout(const DsDiagram& d, const detail::DiagramAnalysis& a) {
  const int V = static_cast<int>(d.vertices.size());
  const int k = static_cast<int>(d.e_cycle.size());
  std::vector<Eigen::Vector2d> pos(V, Eigen::Vector2d::Zero());
  for (int v = 0; v < V; ++v)
    if (a.e_position[v] >= 0) {
      double t = kPi / 2 - 2 * kPi * a.e_position[v] / k;
      pos[v] = {std::cos(t), std::sin(t)};
    }
  for (bool inside : {true, false}) {
    std::vector<int> free, index(V, -1);
    for (int v = 0; v < V; ++v)
      if (a.e_position[v] < 0 && (a.face_inside[a.left_face(d.vertices[v].darts[0])] != 0) == inside) {
        index[v] = static_cast<int>(free.size());
        free.push_back(v);
      }
    const int n = static_cast<int>(free.size());
    if (n == 0) continue;
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, 2);
    for (int i = 0; i < n; ++i) {
      lap(i, i) += 0.5;  // pull toward the centre keeps the system regular
      for (Dart x : d.vertices[free[i]].darts) {
        int u = a.vertex_of[d.map.alpha[x]];
        if (u == free[i]) continue;
        lap(i, i) += 1;
        if (index[u] >= 0)
          lap(i, index[u]) -= 1;
        else
          rhs.row(i) += pos[u].transpose();
      }
    }
    Eigen::MatrixXd sol = lap.partialPivLu().solve(rhs);
    for (int i = 0; i < n; ++i) {
      Eigen::Vector2d p = sol.row(i).transpose();
      if (!inside) {
        double r = p.norm();
        p = r < 1e-9 ? Eigen::Vector2d(0, 1.6) : Eigen::Vector2d(p * ((2.0 - r) / r));
      }
      pos[free[i]] = p;
    }
  }
  return pos;
}

std::string dot(const DsDiagram& d, const detail::DiagramAnalysis& a) {
  std::ostringstream os;
  os << "digraph dsd {\n  node [shape=circle, width=0.25, label=\"\"];\n";
  for (const GraphVertex& v : d.vertices) {
    int vi = a.vertex_index.at(v.id);
    os << "  v" << v.id << " [xlabel=\"" << d.vertex_labels[a.vlabel_of[vi]].id << "\"];\n";
  }
  for (Dart x = 0; x < d.map.dart_count(); ++x) {
    if (!a.forward[x]) continue;
    const auto c = a.copy_of[x];
    os << "  v" << d.vertices[a.vertex_of[x]].id << " -> v" << d.vertices[a.vertex_of[d.map.alpha[x]]].id
       << " [label=\"e" << d.edge_labels[a.label_of[x]].id << "\", class=\"" << copy_name(c) << "\""
       << (c == detail::Copy::E ? ", style=bold" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string svg(const DsDiagram& d, const detail::DiagramAnalysis& a) {
  const double scale = 100, size = 520, mid = size / 2;
  auto X = [&](const Eigen::Vector2d& p) { return fmt(mid + scale * p.x()); };
  auto Y = [&](const Eigen::Vector2d& p) { return fmt(mid - scale * p.y()); };
  std::vector<Eigen::Vector2d> pos = layout(d, a);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  os << "<circle class=\"e-cycle\" cx=\"" << fmt(mid) << "\" cy=\"" << fmt(mid) << "\" r=\"" << fmt(scale)
     << "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  std::map<std::pair<int, int>, int> seen;
  for (Dart x = 0; x < d.map.dart_count(); ++x) {
    if (!a.forward[x]) continue;
    const int u = a.vertex_of[x], v = a.vertex_of[d.map.alpha[x]];
    const int bend = seen[{std::min(u, v), std::max(u, v)}]++;
    const bool e = a.copy_of[x] == detail::Copy::E;
    const std::string stroke = e ? "#000" : (a.copy_of[x] == detail::Copy::inside ? "#2060c0" : "#c04020");
    Eigen::Vector2d p = pos[u], q = pos[v], m = (p + q) / 2, c;
    if (u == v) {
      Eigen::Vector2d out = p.norm() > 1e-9 ? Eigen::Vector2d(p.normalized()) : Eigen::Vector2d(0, 1);
      if (a.copy_of[x] == detail::Copy::inside) out = -out;
      c = p + out * (0.55 + 0.2 * bend);
      Eigen::Vector2d side(-out.y(), out.x());
      os << "<path class=\"edge\" d=\"M " << X(p) << " " << Y(p) << " C " << X(c + side * 0.3) << " "
         << Y(c + side * 0.3) << " " << X(c - side * 0.3) << " " << Y(c - side * 0.3) << " " << X(q) << " " << Y(q)
         << "\" fill=\"none\" stroke=\"" << stroke << "\"/>\n";
      m = c;
    } else {
      Eigen::Vector2d dir = q - p;
      Eigen::Vector2d normal(-dir.y(), dir.x());
      double sign = bend % 2 ? -1 : 1;
      c = m + normal * (0.25 * ((bend + 1) / 2) * sign);
      if (e) c = m.norm() > 1e-9 ? Eigen::Vector2d(m.normalized() * (1 + 0.15 * bend)) : m;
      os << "<path class=\"edge\" d=\"M " << X(p) << " " << Y(p) << " Q " << X(c) << " " << Y(c) << " " << X(q)
         << " " << Y(q) << "\" fill=\"none\" stroke=\"" << stroke << "\"" << (e ? " stroke-width=\"2\"" : "")
         << "/>\n";
      m = (p + q) / 4 + c / 2;
    }
    os << "<text x=\"" << X(m) << "\" y=\"" << Y(m) << "\" font-size=\"11\">e" << d.edge_labels[a.label_of[x]].id
       << "</text>\n";
  }
  for (const GraphVertex& v : d.vertices) {
    int vi = a.vertex_index.at(v.id);
    os << "<circle class=\"vertex\" cx=\"" << X(pos[vi]) << "\" cy=\"" << Y(pos[vi])
       << "\" r=\"5\" fill=\"#000\"><title>v" << d.vertex_labels[a.vlabel_of[vi]].id << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const DsDiagram& d, RenderFormat format) {
  detail::DiagramAnalysis a = detail::analyze_valid(d);
  return format == RenderFormat::dot ? dot(d, a) : svg(d, a);
}

}  // namespace fsp
