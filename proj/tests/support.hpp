#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fsp/catalog.hpp"
#include "fsp/dsd_io.hpp"
#include "fsp/enumerate.hpp"
#include "fsp/flow_code.hpp"
#include "fsp/presentation.hpp"

namespace fsp::test {

inline std::string catalog_path(const std::string& file) { return default_catalog_dir() + "/" + file; }

inline DsDiagram abalone() { return read_diagram_file(catalog_path("abalone.dsd")); }

inline SpinePresentation disk_annulus() { return parse_presentation(read_text_file(catalog_path("disk_annulus.spine"))); }

inline const Catalog& catalog() {
  static const Catalog c = load_catalog(default_catalog_dir());
  return c;
}

// Enumerations are shared across test cases of one binary.
inline const std::vector<CensusEntry>& census(int n) {
  static std::vector<std::vector<CensusEntry>> cache(5);
  static std::vector<bool> done(5, false);
  if (!done[n]) {
    cache[n] = enumerate_positive(n);
    done[n] = true;
  }
  return cache[n];
}

inline std::vector<int> abelianize(const BoundaryWord& w, int edges) {
  std::vector<int> v(edges, 0);
  for (const SignedEdge& s : w) v[s.edge - 1] += s.sign;
  return v;
}

inline DsDiagram rotate_e_cycle(DsDiagram d, int k) {
  std::rotate(d.e_cycle.begin(), d.e_cycle.begin() + k, d.e_cycle.end());
  return d;
}

inline DsDiagram random_relabel(const DsDiagram& d, std::mt19937_64& rng) {
  std::vector<Dart> perm(d.map.dart_count());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Dart>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> shift(0, 50), start(0, static_cast<int>(d.e_cycle.size()) - 1);
  return rotate_e_cycle(relabel(d, perm, shift(rng)), start(rng));
}

// Isomorphism oracle independent of canonical codes: the least flow code
// over all starting points of the E-cycle.
inline std::string min_rotated_flow_code(const DsDiagram& d) {
  std::string best;
  for (size_t k = 0; k < d.e_cycle.size(); ++k) {
    std::string s = to_string(flow_code(rotate_e_cycle(d, static_cast<int>(k))));
    if (k == 0 || s < best) best = s;
  }
  return best;
}

}  // namespace fsp::test
