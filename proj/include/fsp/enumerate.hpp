#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsp/admissibility.hpp"
#include "fsp/canonical.hpp"
#include "fsp/ds_diagram.hpp"
#include "fsp/flow_code.hpp"
#include "fsp/homology.hpp"

namespace fsp {

struct CensusEntry {
  CanonicalCode code;
  int vertices = 0;
  HomologyProfile homology;
  AdmissibilityCertificate admissibility;
  bool positive = false;
  std::string name;   // catalog name when matched
  std::string label;  // manifold label when matched
  FlowCode flow;
  DsDiagram diagram;
};

struct EnumerateOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  std::optional<std::uint64_t> shuffle_seed;
};

// Words of length 2n in which each of 0..n-1 occurs twice, letters numbered by
// first occurrence. Each is an Eulerian circuit of the 4-regular multigraph
// whose edges join consecutive letters.
std::vector<std::vector<int>> double_occurrence_words(int n);

// All positive flow-spines with 1..n_max vertices, one per canonical code,
// sorted by (vertices, code). Throws Error unless 1 <= n_max <= 4.
std::vector<CensusEntry> enumerate_positive(int n_max, const EnumerateOptions& options = {});

struct CensusRow {
  std::string h1;
  int min_vertices = 0;
  std::map<int, int> count_by_vertices;
};

struct CensusReport {
  std::vector<CensusRow> rows;  // sorted by (min_vertices, h1)
  std::map<int, std::vector<std::string>> h1_by_vertices;  // sorted multisets
};

CensusReport census_report(const std::vector<CensusEntry>& entries);

struct CatalogMatch {
  std::vector<std::pair<std::string, std::string>> matched;  // (code hex, catalog name)
  std::vector<std::string> unmatched_entries;                // code hex
  std::vector<std::string> unmatched_catalog;                // catalog names
};

CatalogMatch match_catalog(std::vector<CensusEntry>& entries,
                           const std::vector<std::pair<std::string, DsDiagram>>& catalog,
                           const std::map<std::string, std::string>& labels = {});

}  // namespace fsp
