#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsp/ds_diagram.hpp"
#include "fsp/presentation.hpp"
#include "fsp/surgery.hpp"

namespace fsp {

struct CatalogCoil {
  std::string name;
  int edge = 0;
  std::optional<ThetaVector> longitude;
  std::optional<SeifertSlope> fiber;
};

struct CatalogSurgery {
  std::string coil;
  SurgeryWord word;
};

struct CatalogEntry {
  std::string name;
  std::string label;  // manifold label, metadata only
  std::string file;   // relative to the catalog directory; empty for surgery entries
  bool optional = false;
  std::string notes;
  std::optional<std::string> expected_h1;
  std::optional<bool> positive;
  std::optional<bool> admissible;
  std::vector<CatalogCoil> coils;
  std::string from;  // surgery entries: base entry name
  std::vector<CatalogSurgery> surgery;

  std::optional<DsDiagram> diagram;
  std::optional<SpinePresentation> presentation;  // always set once loaded
};

struct Catalog {
  std::string directory;
  std::vector<CatalogEntry> entries;
  PatchSet patches;

  const CatalogEntry* find(const std::string& name) const;
  // Named diagrams, optional entries included.
  std::vector<std::pair<std::string, DsDiagram>> diagrams() const;
};

// FSP_CATALOG when set, else the source tree's catalog directory.
std::string default_catalog_dir();

// Reads catalog.json, every referenced file and patch, and rebuilds surgery
// entries. Throws ParseError or Error when a file is malformed or invalid.
Catalog load_catalog(const std::string& directory);

// Coil `name` of an entry with its catalog longitude, found among find_coils
// by spine edge. Accepts "γ1"-style names from metadata or "e<id>".
Coil resolve_coil(const CatalogEntry& entry, const std::string& name);
Coil resolve_coil(const DsDiagram& d, const std::vector<CatalogCoil>& coils, const std::string& name);

// Type mandated for the vertex an annulus contributes: l for R and Lbar,
// r for L and Rbar.
VertexType mandated_vertex_type(Letter x);

struct CatalogCheck {
  std::vector<std::string> failures;
  std::vector<std::string> passes;
  bool ok() const { return failures.empty(); }
};

// Computed H1, positivity and admissibility against metadata; template checks.
CatalogCheck check_catalog(const Catalog& c);

}  // namespace fsp
