#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <limits>

#include "fsp/admissibility.hpp"
#include "fsp/canonical.hpp"
#include "fsp/catalog.hpp"
#include "fsp/dsd_io.hpp"
#include "fsp/enumerate.hpp"
#include "fsp/error.hpp"
#include "fsp/homology.hpp"
#include "fsp/presentation.hpp"
#include "fsp/render.hpp"
#include "fsp/surgery.hpp"

using nlohmann::json;
using namespace fsp;

namespace {

// Exit codes: 0 ok, 1 semantic failure, 2 usage or parse error.
constexpr int kOk = 0, kFail = 1, kUsage = 2;

std::string catalog_dir;

json number(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(v));
  return json(v.str());
}

json rationals(const RationalVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

json pair_json(const ThetaVector& v) { return json::array({number(v.theta), number(v.phi)}); }

void print(const json& j) { std::cout << j.dump() << "\n"; }

// "CAT/x" names a file in the catalog directory.
std::string resolve(const std::string& path) {
  if (path.rfind("CAT/", 0) == 0) return (std::filesystem::path(catalog_dir) / path.substr(4)).string();
  return path;
}

bool is_spine_file(const std::string& path) { return path.size() >= 6 && path.ends_with(".spine"); }

SpinePresentation presentation_of(const std::string& path) {
  const std::string text = read_text_file(resolve(path));
  if (is_spine_file(path)) return parse_presentation(text);
  DsDiagram d = parse_diagram(text);
  return derive_presentation(d);
}

DsDiagram diagram_of(const std::string& path) { return parse_diagram(read_text_file(resolve(path))); }

json homology_json(const HomologyProfile& h) {
  json t = json::array();
  for (const BigInt& x : h.torsion) t.push_back(number(x));
  return {{"b", h.betti}, {"torsion", t}, {"qhs", h.qhs}};
}

json entry_json(const CensusEntry& e) {
  json j = {{"code", e.code.hex()},
            {"vertices", e.vertices},
            {"h1", e.homology.h1_string()},
            {"homology", homology_json(e.homology)},
            {"positive", e.positive},
            {"admissibility", to_string(e.admissibility.status)},
            {"witness", rationals(e.admissibility.witness)},
            {"flow_code", to_string(e.flow)}};
  if (!e.name.empty()) j["name"] = e.name;
  if (!e.label.empty()) j["label"] = e.label;
  return j;
}

// Coil names from the catalog when the diagram is a cataloged one.
std::vector<CatalogCoil> coil_metadata(const DsDiagram& d) {
  try {
    Catalog cat = load_catalog(catalog_dir);
    CanonicalCode code = canonical_code(d);
    for (const CatalogEntry& e : cat.entries)
      if (e.diagram && !e.coils.empty() && canonical_code(*e.diagram) == code) {
        // Map the entry's coils onto this diagram through the flow code.
        std::vector<CatalogCoil> out;
        const auto mine = find_coils(d), theirs = find_coils(*e.diagram);
        for (const CatalogCoil& c : e.coils)
          for (size_t i = 0; i < theirs.size() && i < mine.size(); ++i)
            if (theirs[i].edge == c.edge) out.push_back({c.name, mine[i].edge, c.longitude, c.fiber});
        return out;
      }
  } catch (const std::exception&) {
  }
  return {};
}

int cmd_validate(const std::string& path) {
  if (is_spine_file(path)) {
    SpinePresentation p = presentation_of(path);
    auto v = check_presentation(p);
    print({{"valid", v.empty()}, {"violations", v}});
    return v.empty() ? kOk : kFail;
  }
  DsDiagram d = diagram_of(path);
  ValidationReport r = validate(d);
  print({{"valid", r.valid()},
         {"violations", r.violations},
         {"vertices", r.spine_vertices},
         {"edges", r.spine_edges},
         {"regions", r.regions}});
  return r.valid() ? kOk : kFail;
}

int cmd_info(const std::string& path) {
  DsDiagram d = diagram_of(path);
  ValidationReport r = validate(d);
  if (!r.valid()) {
    print({{"valid", false}, {"violations", r.violations}});
    return kFail;
  }
  json vt = json::object(), et = json::object();
  for (const auto& [id, t] : classify_vertex_types(d)) vt[std::to_string(id)] = std::string(1, to_char(t));
  for (const auto& [id, t] : classify_edge_types(d)) et[std::to_string(id)] = std::string(1, to_char(t));
  print({{"vertices", r.spine_vertices},
         {"edges", r.spine_edges},
         {"regions", r.regions},
         {"positive", is_positive(d)},
         {"vertex_types", vt},
         {"edge_types", et}});
  return kOk;
}

int cmd_admissible(const std::string& path, bool reduced, bool explicit_witness) {
  SpinePresentation p = presentation_of(path);
  InequalitySystem s = build_system(p, reduced);
  if (explicit_witness) {
    if (is_spine_file(path)) throw Error("--witness needs a .dsd diagram");
    DsDiagram d = diagram_of(path);
    RationalVector x = positive_witness(d);
    InequalitySystem full = build_system(p, false);
    bool ok = verify_witness(full, x);
    print({{"status", ok ? "feasible" : "unverified"}, {"witness", rationals(x)}, {"variables", full.variables}});
    return ok ? kOk : kFail;
  }
  AdmissibilityCertificate c = decide(s);
  json j = {{"status", to_string(c.status)}, {"variables", s.variables}};
  if (c.status == Feasibility::feasible)
    j["witness"] = rationals(c.witness);
  else
    j["farkas"] = rationals(c.farkas);
  j["verified"] = verify(s, c);
  print(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flow-spine DS-diagram toolkit"};
  app.require_subcommand(1);
  catalog_dir = default_catalog_dir();
  app.add_option("--catalog", catalog_dir, "Catalog directory (default: $FSP_CATALOG or the bundled one)");

  std::string path, out_path, format = "svg", word_text, slope_text = "1,2", coil_in;
  std::vector<std::string> coils, words;
  bool reduced = false, witness = false;
  int max_vertices = 3;
  unsigned threads = 0;
  std::optional<std::uint64_t> seed;
  std::string dump_dir;

  auto* validate_cmd = app.add_subcommand("validate", "Check every diagram invariant");
  validate_cmd->add_option("file", path)->required();
  auto* info_cmd = app.add_subcommand("info", "Counts, types and positivity");
  info_cmd->add_option("file", path)->required();
  auto* homology_cmd = app.add_subcommand("homology", "Betti numbers and H1 torsion");
  homology_cmd->add_option("file", path)->required();
  auto* admissible_cmd = app.add_subcommand("admissible", "Decide the admissibility system");
  admissible_cmd->add_option("file", path)->required();
  admissible_cmd->add_flag("--reduced", reduced, "Use the reduced system over non-tree edges");
  admissible_cmd->add_flag("--witness", witness, "Use the constructive witness of positive diagrams");
  auto* vtypes_cmd = app.add_subcommand("vertex-types", "l/r type of every spine vertex");
  vtypes_cmd->add_option("file", path)->required();
  auto* etypes_cmd = app.add_subcommand("edge-types", "a/b/c/d type of every spine edge");
  etypes_cmd->add_option("file", path)->required();

  auto* coil_cmd = app.add_subcommand("coil", "Coil surgery");
  coil_cmd->require_subcommand(1);
  auto* coil_apply = coil_cmd->add_subcommand("apply", "Rewrite a diagram by coil surgery");
  coil_apply->add_option("--coil", coils, "Coil name (γ1, e2, ...); repeat for several coils")->required();
  coil_apply->add_option("--word", words, "Comma-separated word over R, L, Rbar, Lbar; one per --coil")->required();
  coil_apply->add_option("--in", coil_in, "Input .dsd")->required();
  coil_apply->add_option("--out", out_path, "Output .dsd");
  auto* coil_meridian = coil_cmd->add_subcommand("meridian", "Meridian after a word of annuli");
  coil_meridian->add_option("--word", word_text)->required();
  auto* coil_trans = coil_cmd->add_subcommand("transversality", "Determinant trace against a fiber slope");
  coil_trans->add_option("--word", word_text)->required();
  coil_trans->add_option("--slope", slope_text, "p,q");
  auto* coil_find = coil_cmd->add_subcommand("find", "List the coils of a diagram");
  coil_find->add_option("file", path)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Positive flow-spines up to isomorphism");
  enumerate_cmd->add_option("--max-vertices", max_vertices)->check(CLI::Range(1, 4));
  enumerate_cmd->add_option("--out", out_path);
  enumerate_cmd->add_option("--threads", threads);
  enumerate_cmd->add_option("--seed", seed, "Shuffle generation order");
  enumerate_cmd->add_option("--dump", dump_dir, "Write each entry as a .dsd file");
  auto* census_cmd = app.add_subcommand("census", "Minimal vertex count per H1");
  census_cmd->add_option("--max-vertices", max_vertices)->check(CLI::Range(1, 4));
  census_cmd->add_option("--threads", threads);

  auto* render_cmd = app.add_subcommand("render", "Draw a diagram");
  render_cmd->add_option("file", path)->required();
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "svg"}));
  render_cmd->add_option("--out", out_path);

  auto* catalog_cmd = app.add_subcommand("catalog", "Bundled diagrams");
  catalog_cmd->require_subcommand(1);
  auto* catalog_list = catalog_cmd->add_subcommand("list", "List entries");
  auto* catalog_check = catalog_cmd->add_subcommand("check", "Run the catalog self-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(path);
    if (*info_cmd) return cmd_info(path);
    if (*homology_cmd) {
      print(homology_json(h1(presentation_of(path))));
      return kOk;
    }
    if (*admissible_cmd) return cmd_admissible(path, reduced, witness);
    if (*vtypes_cmd) {
      json j = json::object();
      for (const auto& [id, t] : classify_vertex_types(diagram_of(path))) j[std::to_string(id)] = std::string(1, to_char(t));
      print(j);
      return kOk;
    }
    if (*etypes_cmd) {
      json j = json::object();
      for (const auto& [id, t] : classify_edge_types(diagram_of(path))) j[std::to_string(id)] = std::string(1, to_char(t));
      print(j);
      return kOk;
    }
    if (*coil_meridian) {
      print(pair_json(meridian_of_word(parse_word(word_text))));
      return kOk;
    }
    if (*coil_trans) {
      auto slope_word = parse_word(word_text);
      auto comma = slope_text.find(',');
      if (comma == std::string::npos) throw CLI::ValidationError("--slope", "expected p,q");
      SeifertSlope slope{BigInt(std::stoll(slope_text.substr(0, comma))), BigInt(std::stoll(slope_text.substr(comma + 1)))};
      json trace = json::array();
      for (const auto& [a, b] : transversality_trace(slope_word, slope)) trace.push_back({number(a), number(b)});
      print({{"transverse", transversality_check(slope_word, slope)}, {"trace", trace}});
      return kOk;
    }
    if (*coil_find) {
      DsDiagram d = diagram_of(path);
      auto meta = coil_metadata(d);
      json a = json::array();
      for (const Coil& c : find_coils(d)) {
        json j = {{"name", c.name}, {"edge", c.edge}, {"dual_path", c.dual_path}, {"hexagon", verify_hexagon(d, c)}};
        for (const CatalogCoil& m : meta)
          if (m.edge == c.edge) {
            j["name"] = m.name;
            if (m.longitude) j["longitude"] = pair_json(*m.longitude);
          }
        a.push_back(j);
      }
      print(a);
      return kOk;
    }
    if (*coil_apply) {
      if (coils.size() != words.size()) throw CLI::ValidationError("--word", "give one --word per --coil");
      DsDiagram d = diagram_of(coil_in);
      auto meta = coil_metadata(d);
      std::vector<std::pair<Coil, SurgeryWord>> jobs;
      for (size_t i = 0; i < coils.size(); ++i) jobs.emplace_back(resolve_coil(d, meta, coils[i]), parse_word(words[i]));
      DsDiagram out = apply_coil_surgeries(d, jobs);
      std::string note = "coil surgery of " + coil_in + ":";
      for (const auto& [c, w] : jobs) note += " (" + c.name + ", " + to_string(w) + ")";
      if (!out_path.empty()) write_text_file(out_path, write_diagram(out, note));
      HomologyProfile h = h1(derive_presentation(out));
      json j = {{"vertices", out.vertex_labels.size()}, {"h1", h.h1_string()}, {"positive", is_positive(out)}};
      if (jobs.size() == 1 && jobs[0].first.longitude)
        j["predicted_h1_order"] = number(surgered_h1_order(meridian_of_word(jobs[0].second), *jobs[0].first.longitude));
      if (out_path.empty()) std::cout << write_diagram(out, note);
      print(j);
      return kOk;
    }
    if (*enumerate_cmd || *census_cmd) {
      EnumerateOptions opt;
      opt.threads = threads;
      opt.shuffle_seed = seed;
      auto entries = enumerate_positive(max_vertices, opt);
      try {
        Catalog cat = load_catalog(catalog_dir);
        std::map<std::string, std::string> labels;
        for (const CatalogEntry& e : cat.entries) labels[e.name] = e.label;
        match_catalog(entries, cat.diagrams(), labels);
      } catch (const std::exception& e) {
        std::cerr << "warning: catalog unavailable: " << e.what() << "\n";
      }
      if (*census_cmd) {
        CensusReport r = census_report(entries);
        json rows = json::array();
        for (const CensusRow& row : r.rows) {
          json counts = json::object();
          for (const auto& [n, c] : row.count_by_vertices) counts[std::to_string(n)] = c;
          rows.push_back({{"h1", row.h1}, {"min_vertices", row.min_vertices}, {"count_by_vertices", counts}});
        }
        json by = json::object();
        for (const auto& [n, hs] : r.h1_by_vertices) by[std::to_string(n)] = hs;
        print({{"rows", rows}, {"h1_by_vertices", by}});
        return kOk;
      }
      json a = json::array();
      for (const CensusEntry& e : entries) a.push_back(entry_json(e));
      if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        int i = 0;
        for (const CensusEntry& e : entries) {
          std::string name = e.name.empty() ? std::to_string(e.vertices) + "v_" + std::to_string(++i) : e.name;
          write_text_file((std::filesystem::path(dump_dir) / (name + ".dsd")).string(),
                          write_diagram(e.diagram, "H1 = " + e.homology.h1_string() + ", flow code " + to_string(e.flow)));
        }
      }
      if (!out_path.empty())
        write_text_file(out_path, a.dump(2) + "\n");
      else
        std::cout << a.dump(2) << "\n";
      return kOk;
    }
    if (*render_cmd) {
      std::string text = render(diagram_of(path), format == "dot" ? RenderFormat::dot : RenderFormat::svg);
      if (out_path.empty())
        std::cout << text;
      else
        write_text_file(out_path, text);
      return kOk;
    }
    if (*catalog_list) {
      Catalog cat = load_catalog(catalog_dir);
      json a = json::array();
      for (const CatalogEntry& e : cat.entries) {
        json j = {{"name", e.name}, {"label", e.label}, {"optional", e.optional}};
        j["source"] = e.file.empty() ? "surgery on " + e.from : e.file;
        if (e.expected_h1) j["h1"] = *e.expected_h1;
        a.push_back(j);
      }
      print(a);
      return kOk;
    }
    if (*catalog_check) {
      CatalogCheck c = check_catalog(load_catalog(catalog_dir));
      print({{"ok", c.ok()}, {"failures", c.failures}, {"passes", c.passes.size()}});
      return c.ok() ? kOk : kFail;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
