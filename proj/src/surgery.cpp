#include "fsp/surgery.hpp"

#include <algorithm>
#include <sstream>

#include "diagram_analysis.hpp"
#include "fsp/error.hpp"
#include "fsp/flow_code.hpp"
#include "text_lines.hpp"

namespace fsp {

Letter parse_letter(const std::string& t) {
  if (t == "R") return Letter::R;
  if (t == "L") return Letter::L;
  if (t == "Rbar" || t == "R̄" || t == "R̅") return Letter::Rbar;
  if (t == "Lbar" || t == "L̄" || t == "L̅") return Letter::Lbar;
  throw Error("unknown surgery letter '" + t + "' (use R, L, Rbar, Lbar)");
}

SurgeryWord parse_word(const std::string& text) {
  SurgeryWord w;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    w.push_back(parse_letter(item));
  }
  return w;
}

std::string to_string(Letter x) {
  switch (x) {
    case Letter::R: return "R";
    case Letter::L: return "L";
    case Letter::Rbar: return "Rbar";
    case Letter::Lbar: return "Lbar";
  }
  return "?";
}

std::string to_string(const SurgeryWord& w) {
  std::string s;
  for (Letter x : w) s += (s.empty() ? "" : ",") + to_string(x);
  return s;
}

BigInt det(const ThetaVector& a, const ThetaVector& b) { return a.theta * b.phi - a.phi * b.theta; }

ThetaState theta_transfer(const ThetaState& s, Letter x) {
  ThetaState t = s;
  switch (x) {
    case Letter::R: t.theta1 = s.theta1 + s.theta2; break;
    case Letter::L: t.theta2 = s.theta1 + s.theta2; break;
    case Letter::Rbar: t.theta1 = s.theta1 - s.theta2; break;
    case Letter::Lbar: t.theta2 = s.theta2 - s.theta1; break;
  }
  return t;
}

ThetaState theta_state(const SurgeryWord& w) {
  ThetaState s;
  for (Letter x : w) s = theta_transfer(s, x);
  return s;
}

ThetaVector meridian_of_word(const SurgeryWord& w) {
  ThetaState s = theta_state(w);
  return s.theta1 + s.theta2;
}

std::vector<std::pair<BigInt, BigInt>> transversality_trace(const SurgeryWord& w, const SeifertSlope& slope) {
  std::vector<std::pair<BigInt, BigInt>> out;
  ThetaState s;
  out.emplace_back(det(s.theta1, slope), det(s.theta2, slope));
  for (Letter x : w) {
    s = theta_transfer(s, x);
    out.emplace_back(det(s.theta1, slope), det(s.theta2, slope));
  }
  return out;
}

bool transversality_check(const SurgeryWord& w, const SeifertSlope& slope) {
  for (const auto& [a, b] : transversality_trace(w, slope))
    if (a <= 0 || b <= 0) return false;
  return true;
}

BigInt surgered_h1_order(const ThetaVector& meridian, const ThetaVector& longitude) {
  if (meridian == ThetaVector{0, 0} || longitude == ThetaVector{0, 0})
    throw Error("surgered_h1_order needs nonzero classes");
  return abs(det(meridian, longitude));
}

std::vector<HexagonArc> hexagon_word(const DsDiagram& d, const Coil& c) {
  detail::DiagramAnalysis a = detail::analyze_valid(d);
  const int n = d.map.dart_count();
  for (Dart x : {c.in_crossing, c.e_crossing, c.out_crossing})
    if (x < 0 || x >= n) return {};
  if (a.label_of[c.in_crossing] != a.label_of[c.e_crossing] ||
      a.label_of[c.out_crossing] != a.label_of[c.e_crossing] || a.copy_of[c.in_crossing] != detail::Copy::inside ||
      a.copy_of[c.e_crossing] != detail::Copy::E || a.copy_of[c.out_crossing] != detail::Copy::outside ||
      !a.forward[c.in_crossing] || !a.forward[c.e_crossing] || !a.forward[c.out_crossing])
    return {};
  const int cap_in = a.right_face(c.in_crossing), strip_in = a.left_face(c.in_crossing);
  const int strip_out = a.right_face(c.e_crossing), cap_out = a.left_face(c.out_crossing);
  if (a.left_face(c.e_crossing) != strip_in || a.right_face(c.out_crossing) != strip_out) return {};
  auto arc = [&](int f) {
    return HexagonArc{a.faces.name(f), d.regions[a.region_of_face[f]].id, a.face_inside[f] != 0};
  };
  return {arc(cap_in), arc(strip_in), arc(strip_out), arc(cap_out), arc(strip_out), arc(strip_in)};
}

bool verify_hexagon(const DsDiagram& d, const Coil& c) {
  auto w = hexagon_word(d, c);
  if (w.size() != 6) return false;
  for (int i = 0; i < 3; ++i)
    if (w[i].region != w[i + 3].region || w[i].inside == w[i + 3].inside) return false;
  return w[0].inside && w[1].inside && !w[2].inside;
}

std::vector<Coil> find_coils(const DsDiagram& d) {
  detail::DiagramAnalysis a = detail::analyze_valid(d);
  std::vector<EdgeLabel> labels = d.edge_labels;
  std::sort(labels.begin(), labels.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  std::vector<Coil> out;
  for (const EdgeLabel& l : labels) {
    if (a.left_face(l.in_copy) != a.left_face(l.e_copy) || a.right_face(l.e_copy) != a.right_face(l.out_copy))
      continue;
    Coil c;
    c.name = "γ" + std::to_string(out.size() + 1);
    c.edge = l.id;
    c.in_crossing = l.in_copy;
    c.e_crossing = l.e_copy;
    c.out_crossing = l.out_copy;
    for (int f : {a.right_face(l.in_copy), a.left_face(l.in_copy), a.right_face(l.e_copy), a.left_face(l.out_copy)})
      c.dual_path.push_back(a.faces.name(f));
    out.push_back(std::move(c));
  }
  return out;
}

const PatchSet& builtin_patches() {
  static const PatchSet set = {
      {Letter::R, {Letter::R, VertexType::l, Side::outside, Side::inside}},
      {Letter::Lbar, {Letter::Lbar, VertexType::l, Side::inside, Side::outside}},
      {Letter::L, {Letter::L, VertexType::r, Side::inside, Side::outside}},
      {Letter::Rbar, {Letter::Rbar, VertexType::r, Side::outside, Side::inside}},
  };
  return set;
}

PatchTemplate parse_patch(const std::string& text) {
  PatchTemplate t;
  bool letter = false, type = false, in = false, out = false;
  detail::LineReader reader(text, "%patch 1");
  detail::Line line;
  auto side = [&](const detail::Line& l) {
    l.expect_args(1);
    if (l.args[0] == "inside") return Side::inside;
    if (l.args[0] == "outside") return Side::outside;
    throw ParseError(l.number, "side must be 'inside' or 'outside'");
  };
  while (reader.next(line)) {
    if (line.key == "letter") {
      line.expect_args(1);
      try {
        t.letter = parse_letter(line.args[0]);
      } catch (const Error& e) {
        throw ParseError(line.number, e.what());
      }
      letter = true;
    } else if (line.key == "vertex-type") {
      line.expect_args(1);
      if (line.args[0] != "l" && line.args[0] != "r") throw ParseError(line.number, "vertex-type must be l or r");
      t.vertex_type = line.args[0] == "l" ? VertexType::l : VertexType::r;
      type = true;
    } else if (line.key == "inbound") {
      t.inbound = side(line);
      in = true;
    } else if (line.key == "outbound") {
      t.outbound = side(line);
      out = true;
    } else {
      throw ParseError(line.number, "unknown key '" + line.key + "'");
    }
  }
  if (!letter || !type || !in || !out) throw ParseError(0, "patch needs letter, vertex-type, inbound and outbound");
  if (t.inbound == t.outbound) throw ParseError(0, "the two passages of a patch vertex must leave to opposite sides");
  return t;
}

std::string write_patch(const PatchTemplate& t) {
  auto side = [](Side s) { return s == Side::inside ? "inside" : "outside"; };
  std::ostringstream os;
  os << "%patch 1\nletter " << to_string(t.letter) << "\nvertex-type " << to_char(t.vertex_type)
     << "\ninbound " << side(t.inbound) << "\noutbound " << side(t.outbound) << "\n";
  return os.str();
}

DsDiagram apply_coil_surgeries(const DsDiagram& d, const std::vector<std::pair<Coil, SurgeryWord>>& jobs,
                               const PatchSet& patches) {
  FlowCode code = flow_code(d);
  std::vector<std::pair<int, const SurgeryWord*>> at;
  for (const auto& [coil, word] : jobs) {
    if (!verify_hexagon(d, coil)) throw Error("hexagon word mismatch for coil " + coil.name);
    for (Letter x : word)
      if (!patches.count(x)) throw Error("missing template for letter " + to_string(x));
    auto it = std::find(d.e_cycle.begin(), d.e_cycle.end(), coil.e_crossing);
    const int pos = static_cast<int>(it - d.e_cycle.begin());
    for (const auto& other : at)
      if (other.first == pos) throw Error("two surgeries on the same coil");
    at.emplace_back(pos, &word);
  }
  // Later positions first so earlier insertion points stay put.
  std::sort(at.begin(), at.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  for (const auto& [pos, word] : at) {
    const int base = code.spine_vertices();
    const int k = static_cast<int>(word->size());
    std::vector<int> letters;
    std::vector<bool> sides;
    for (int i = 0; i < k; ++i) {
      letters.push_back(base + i);
      sides.push_back(patches.at((*word)[i]).inbound == Side::inside);
    }
    for (int i = k - 1; i >= 0; --i) {
      letters.push_back(base + i);
      sides.push_back(patches.at((*word)[i]).outbound == Side::inside);
    }
    code.word.insert(code.word.begin() + pos + 1, letters.begin(), letters.end());
    code.inward.insert(code.inward.begin() + pos + 1, sides.begin(), sides.end());
    for (Letter x : *word) code.types.push_back(patches.at(x).vertex_type);
  }
  try {
    return build_diagram(code);
  } catch (const Error& e) {
    throw Error(std::string("surgery result is not a special spine (the meridian is parallel to the core): ") +
                e.what());
  }
}

DsDiagram apply_coil_surgery(const DsDiagram& d, const Coil& c, const SurgeryWord& w, const PatchSet& patches) {
  return apply_coil_surgeries(d, {{c, w}}, patches);
}

}  // namespace fsp
