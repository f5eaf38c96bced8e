#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsp/ds_diagram.hpp"
#include "fsp/scalar.hpp"

namespace fsp {

enum class Letter { R, L, Rbar, Lbar };
using SurgeryWord = std::vector<Letter>;

// Accepts "R", "L", "Rbar", "Lbar", "R̄", "L̄"; words are comma separated.
Letter parse_letter(const std::string& text);
SurgeryWord parse_word(const std::string& text);
std::string to_string(Letter x);
std::string to_string(const SurgeryWord& w);

// A class p Θ + q Φ on the boundary torus of a coil.
struct ThetaVector {
  BigInt theta = 0;
  BigInt phi = 0;
  ThetaVector operator+(const ThetaVector& o) const { return {theta + o.theta, phi + o.phi}; }
  ThetaVector operator-(const ThetaVector& o) const { return {theta - o.theta, phi - o.phi}; }
  bool operator==(const ThetaVector&) const = default;
};

BigInt det(const ThetaVector& a, const ThetaVector& b);

struct ThetaState {
  ThetaVector theta1{1, 0};
  ThetaVector theta2{1, 1};
  bool operator==(const ThetaState&) const = default;
};

using SeifertSlope = ThetaVector;

ThetaState theta_transfer(const ThetaState& s, Letter x);
ThetaState theta_state(const SurgeryWord& w);
// theta1 + theta2 of the final state.
ThetaVector meridian_of_word(const SurgeryWord& w);
// det[theta1 | slope] and det[theta2 | slope] for the initial state and after
// each letter.
std::vector<std::pair<BigInt, BigInt>> transversality_trace(const SurgeryWord& w, const SeifertSlope& slope);
bool transversality_check(const SurgeryWord& w, const SeifertSlope& slope);
// |det[meridian, longitude]|; 0 means H1 is infinite. Throws on a zero pair.
BigInt surgered_h1_order(const ThetaVector& meridian, const ThetaVector& longitude);

// A coil meets the singular set once, on spine edge `edge`. Its dual path
// runs from the inside copy across the E-copy to the outside copy.
struct Coil {
  std::string name;
  int edge = 0;
  Dart in_crossing = 0;
  Dart e_crossing = 0;
  Dart out_crossing = 0;
  // Faces crossed, by name: cap C+, strip R+, strip R-, cap C-.
  std::vector<Dart> dual_path;
  std::optional<ThetaVector> longitude;
};

// One arc of the hexagon around a coil disk: the face it runs in and its
// spine region.
struct HexagonArc {
  Dart face = 0;
  int region = 0;
  bool inside = true;
};

// Arcs in order a3 a2 a1 a3' a2' a1'; empty when the hexagon cannot be read.
std::vector<HexagonArc> hexagon_word(const DsDiagram& d, const Coil& c);
bool verify_hexagon(const DsDiagram& d, const Coil& c);

// Coils named γ1, γ2, ... in spine-edge id order.
std::vector<Coil> find_coils(const DsDiagram& d);

// Splicing data for one annulus: the vertex it adds and the sides of the two
// passages of the E-cycle through it (first on the way in, then on the way
// back out).
struct PatchTemplate {
  Letter letter = Letter::R;
  VertexType vertex_type = VertexType::l;
  Side inbound = Side::outside;
  Side outbound = Side::inside;
};

using PatchSet = std::map<Letter, PatchTemplate>;

const PatchSet& builtin_patches();
PatchTemplate parse_patch(const std::string& text);
std::string write_patch(const PatchTemplate& t);

// Replaces the coil disk by the annuli of w and the cap. The new E-cycle
// passes the inserted vertices x1..xk on the way in and xk..x1 on the way
// back, inside the E-copy of the coil edge. Labels of the result are fresh.
// Throws Error on a hexagon mismatch, a missing template, or when the
// result is not special (meridian parallel to the coil's core).
DsDiagram apply_coil_surgery(const DsDiagram& d, const Coil& c, const SurgeryWord& w,
                             const PatchSet& patches = builtin_patches());
DsDiagram apply_coil_surgeries(const DsDiagram& d, const std::vector<std::pair<Coil, SurgeryWord>>& jobs,
                               const PatchSet& patches = builtin_patches());

}  // namespace fsp
