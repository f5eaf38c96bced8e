#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fsp/ds_diagram.hpp"

namespace fsp {

// Identifies a valid diagram up to orientation-preserving isomorphism that
// preserves the directed E-cycle, with labels and dart numbers forgotten.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  static CanonicalCode from_hex(const std::string& text);
  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const DsDiagram& d);

// Renumbers darts and vertices by the given permutations and renames label
// ids through `id_shift`; the result is isomorphic to d.
DsDiagram relabel(const DsDiagram& d, const std::vector<Dart>& dart_perm, int id_shift);

}  // namespace fsp
