#include "fsp/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>

#include "fsp/admissibility.hpp"
#include "fsp/dsd_io.hpp"
#include "fsp/error.hpp"
#include "fsp/homology.hpp"

namespace fsp {

using nlohmann::json;

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const CatalogEntry& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<std::pair<std::string, DsDiagram>> Catalog::diagrams() const {
  std::vector<std::pair<std::string, DsDiagram>> out;
  for (const CatalogEntry& e : entries)
    if (e.diagram) out.emplace_back(e.name, *e.diagram);
  return out;
}

std::string default_catalog_dir() {
  if (const char* env = std::getenv("FSP_CATALOG"); env && *env) return env;
  return FSP_DEFAULT_CATALOG;
}

namespace {

ThetaVector pair_of(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError(0, "catalog: expected an integer pair");
  return {BigInt(j[0].get<long long>()), BigInt(j[1].get<long long>())};
}

}  // namespace

VertexType mandated_vertex_type(Letter x) {
  return x == Letter::R || x == Letter::Lbar ? VertexType::l : VertexType::r;
}

Coil resolve_coil(const DsDiagram& d, const std::vector<CatalogCoil>& coils, const std::string& name) {
  std::optional<int> edge;
  std::optional<ThetaVector> longitude;
  for (const CatalogCoil& c : coils)
    if (c.name == name) {
      edge = c.edge;
      longitude = c.longitude;
    }
  if (!edge && name.size() > 1 && name[0] == 'e') {
    try {
      edge = std::stoi(name.substr(1));
    } catch (const std::exception&) {
    }
  }
  std::vector<Coil> found = find_coils(d);
  if (!edge) {
    for (const Coil& c : found)
      if (c.name == name) return c;
    throw Error("unknown coil '" + name + "'");
  }
  for (Coil c : found)
    if (c.edge == *edge) {
      c.name = name;
      c.longitude = longitude;
      return c;
    }
  throw Error("spine edge " + std::to_string(*edge) + " carries no coil");
}

Coil resolve_coil(const CatalogEntry& entry, const std::string& name) {
  if (!entry.diagram) throw Error("catalog entry " + entry.name + " has no diagram");
  return resolve_coil(*entry.diagram, entry.coils, name);
}

Catalog load_catalog(const std::string& directory) {
  namespace fs = std::filesystem;
  Catalog cat;
  cat.directory = directory;
  const fs::path root(directory);
  json meta;
  try {
    meta = json::parse(read_text_file((root / "catalog.json").string()));
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("catalog.json: ") + e.what());
  }

  cat.patches = builtin_patches();
  if (meta.contains("patches"))
    for (const auto& [letter, file] : meta["patches"].items()) {
      PatchTemplate t = parse_patch(read_text_file((root / file.get<std::string>()).string()));
      if (to_string(t.letter) != letter) throw ParseError(0, "patch file for " + letter + " declares another letter");
      cat.patches[t.letter] = t;
    }

  try {
    for (const json& j : meta.at("entries")) {
      CatalogEntry e;
      e.name = j.at("name").get<std::string>();
      e.label = j.value("label", "");
      e.file = j.value("file", "");
      e.optional = j.value("optional", false);
      e.notes = j.value("notes", "");
      if (j.contains("h1")) e.expected_h1 = j["h1"].get<std::string>();
      if (j.contains("positive")) e.positive = j["positive"].get<bool>();
      if (j.contains("admissible")) e.admissible = j["admissible"].get<bool>();
      for (const json& c : j.value("coils", json::array())) {
        CatalogCoil cc;
        cc.name = c.at("name").get<std::string>();
        cc.edge = c.at("edge").get<int>();
        if (c.contains("longitude")) cc.longitude = pair_of(c["longitude"]);
        if (c.contains("fiber")) cc.fiber = pair_of(c["fiber"]);
        e.coils.push_back(cc);
      }
      e.from = j.value("from", "");
      for (const json& s : j.value("surgery", json::array()))
        e.surgery.push_back({s.at("coil").get<std::string>(), parse_word(s.at("word").get<std::string>())});

      if (!e.file.empty()) {
        const std::string path = (root / e.file).string();
        if (e.file.ends_with(".dsd")) {
          e.diagram = read_diagram_file(path);
          require_valid(*e.diagram);
          e.presentation = derive_presentation(*e.diagram);
        } else if (e.file.ends_with(".spine")) {
          e.presentation = parse_presentation(read_text_file(path));
        } else {
          throw ParseError(0, "catalog: unknown file kind " + e.file);
        }
      } else if (!e.from.empty()) {
        const CatalogEntry* base = cat.find(e.from);
        if (!base || !base->diagram) throw ParseError(0, "catalog: " + e.name + " builds on unknown " + e.from);
        std::vector<std::pair<Coil, SurgeryWord>> jobs;
        for (const CatalogSurgery& s : e.surgery) jobs.emplace_back(resolve_coil(*base, s.coil), s.word);
        e.diagram = apply_coil_surgeries(*base->diagram, jobs, cat.patches);
        e.presentation = derive_presentation(*e.diagram);
      } else {
        throw ParseError(0, "catalog: entry " + e.name + " has neither file nor surgery");
      }
      cat.entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("catalog.json: ") + e.what());
  } catch (const Error& e) {
    throw Error(std::string("catalog: ") + e.what());
  }
  return cat;
}

CatalogCheck check_catalog(const Catalog& cat) {
  CatalogCheck out;
  auto record = [&](bool ok, const std::string& what) { (ok ? out.passes : out.failures).push_back(what); };
  for (const CatalogEntry& e : cat.entries) {
    const SpinePresentation& p = *e.presentation;
    HomologyProfile h = h1(p);
    if (e.expected_h1) record(h.h1_string() == *e.expected_h1, e.name + ": H1 = " + h.h1_string() + " (expected " + *e.expected_h1 + ")");
    if (e.positive && e.diagram) {
      bool pos = is_positive(*e.diagram);
      record(pos == *e.positive, e.name + ": positive = " + (pos ? "true" : "false"));
    }
    InequalitySystem full = build_system(p, false), reduced = build_system(p, true);
    AdmissibilityCertificate cf = decide(full), cr = decide(reduced);
    record(verify(full, cf) && verify(reduced, cr), e.name + ": certificates verify");
    record(cf.status == cr.status, e.name + ": full and reduced systems agree (" + to_string(cf.status) + ")");
    if (e.admissible)
      record((cf.status == Feasibility::feasible) == *e.admissible, e.name + ": admissible = " + to_string(cf.status));
    if (is_special(p)) {
      BigInt det = det_A_test(p);
      record((det != 0) == h.qhs, e.name + ": det(A) = " + det.str() + " agrees with qhs");
    }
  }
  // Templates: one vertex of the mandated type, hexagons on both ends.
  if (const CatalogEntry* base = cat.find("1_1"); base && base->diagram && !base->coils.empty()) {
    // The second abalone coil: Rbar on the first one closes up a sphere.
    Coil coil = resolve_coil(*base, base->coils.back().name);
    for (const auto& [letter, t] : cat.patches) {
      const std::string what = "template " + to_string(letter);
      try {
        DsDiagram out_d = apply_coil_surgery(*base->diagram, coil, {letter}, cat.patches);
        auto types = classify_vertex_types(out_d);
        const int before = static_cast<int>(base->diagram->vertex_labels.size());
        record(static_cast<int>(types.size()) == before + 1 && types.count(before + 1) &&
                   types.at(before + 1) == mandated_vertex_type(letter),
               what + ": adds one vertex of the mandated type");
        // The cap sits on the E-edge between the two passages of the new vertex.
        auto pos = std::find(base->diagram->e_cycle.begin(), base->diagram->e_cycle.end(), coil.e_crossing) -
                   base->diagram->e_cycle.begin();
        bool cap = false;
        for (const Coil& c : find_coils(out_d))
          if (c.edge == static_cast<int>(pos) + 2) cap = verify_hexagon(out_d, c);
        record(verify_hexagon(*base->diagram, coil) && cap, what + ": hexagon words on both ends");
      } catch (const Error& ex) {
        record(false, what + ": " + ex.what());
      }
    }
  }
  return out;
}

}  // namespace fsp
