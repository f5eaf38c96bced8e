#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>

#include "support.hpp"

using nlohmann::json;
using namespace fsp::test;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run fsp_run(const std::string& args) {
  Run r;
  std::string cmd = std::string(FSP_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

json fsp_json(const std::string& args) {
  Run r = fsp_run(args);
  REQUIRE(r.status == 0);
  return json::parse(r.out);
}

fs::path scratch() {
  fs::path p = fs::temp_directory_path() / ("fsp_cli_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("info on the abalone") {
  json j = fsp_json("info CAT/abalone.dsd");
  CHECK(j["vertices"] == 1);
  CHECK(j["edges"] == 2);
  CHECK(j["regions"] == 2);
  CHECK(j["positive"] == true);
  CHECK(j["vertex_types"]["1"] == "l");
  CHECK(fsp_json("edge-types CAT/abalone.dsd") == json::parse(R"({"1":"d","2":"a"})"));
  CHECK(fsp_json("vertex-types CAT/abalone.dsd") == json::parse(R"({"1":"l"})"));
}

TEST_CASE("exit codes") {
  fs::path dir = scratch();
  fsp::DsDiagram d = abalone();
  d.regions.pop_back();
  fsp::write_text_file((dir / "broken.dsd").string(), fsp::write_diagram(d));
  fsp::write_text_file((dir / "garbage.dsd").string(), "hello\n");
  CHECK(fsp_run("validate " + (dir / "broken.dsd").string()).status == 1);
  CHECK(fsp_run("info " + (dir / "broken.dsd").string()).status == 1);
  CHECK(fsp_run("validate " + (dir / "garbage.dsd").string()).status == 2);
  CHECK(fsp_run("validate " + (dir / "missing.dsd").string()).status != 0);
  CHECK(fsp_run("frobnicate").status == 2);
  CHECK(fsp_run("enumerate --max-vertices 9").status == 2);
  CHECK(fsp_run("coil meridian --word R,Q").status != 0);
  fs::remove_all(dir);
}

TEST_CASE("validate every catalog file") {
  for (const auto& f : fs::recursive_directory_iterator(fsp::default_catalog_dir())) {
    const std::string ext = f.path().extension().string();
    if (ext != ".dsd" && ext != ".spine") continue;
    CAPTURE(f.path().string());
    CHECK(fsp_run("validate " + f.path().string()).status == 0);
  }
  json j = fsp_json("catalog check");
  CHECK(j["ok"] == true);
  CHECK(fsp_json("catalog list").size() == catalog().entries.size());
}

TEST_CASE("homology and admissibility") {
  CHECK(fsp_json("homology CAT/abalone.dsd") == json::parse(R"({"b":[1,0,0,1],"torsion":[],"qhs":true})"));
  CHECK(fsp_json("homology CAT/disk_annulus.spine")["b"] == json::array({1, 1, 1, 1}));
  json a = fsp_json("admissible CAT/abalone.dsd");
  CHECK(a["status"] == "feasible");
  CHECK(a["verified"] == true);
  json r = fsp_json("admissible --reduced CAT/abalone.dsd");
  CHECK(r["status"] == "feasible");
  json w = fsp_json("admissible --witness CAT/abalone.dsd");
  CHECK(w["witness"] == json::array({"4", "-1/2"}));
  json x = fsp_json("admissible CAT/disk_annulus.spine");
  CHECK(x["status"] == "infeasible");
  CHECK(x["farkas"] == json::array({"2", "1"}));
}

TEST_CASE("coil commands") {
  CHECK(fsp_json("coil meridian --word R,R") == json::array({4, 3}));
  json t = fsp_json("coil transversality --word R,R --slope 1,2");
  CHECK(t["transverse"] == true);
  CHECK(t["trace"] == json::parse("[[2,1],[3,1],[4,1]]"));
  json coils = fsp_json("coil find CAT/abalone.dsd");
  REQUIRE(coils.size() == 2);
  CHECK(coils[0]["name"] == "γ1");
  CHECK(coils[1]["longitude"] == json::array({-3, -1}));

  fs::path dir = scratch();
  const std::string out = (dir / "l52.dsd").string();
  json s = fsp_json("coil apply --in CAT/abalone.dsd --coil γ2 --word R,R --out " + out);
  CHECK(s["h1"] == "Z/5");
  CHECK(s["predicted_h1_order"] == 5);
  CHECK(fsp_run("validate " + out).status == 0);
  CHECK(fsp_json("homology " + out)["torsion"] == json::array({5}));
  json m = fsp_json("coil apply --in CAT/abalone.dsd --coil γ1 --word L --coil γ2 --word R --out " + out);
  CHECK(m["h1"] == "Z/4");
  CHECK(m["positive"] == false);
  CHECK(fsp_run("coil apply --in CAT/abalone.dsd --coil γ1 --word Rbar").status == 1);
  fs::remove_all(dir);
}

TEST_CASE("enumerate and census") {
  json two = fsp_json("enumerate --max-vertices 2");
  CHECK(two.size() == 4);
  int with_two = 0;
  for (const json& e : two) with_two += e["vertices"] == 2;
  CHECK(with_two == 3);
  CHECK(json::parse(two.dump()) == two);
  CHECK(fsp_run("enumerate --max-vertices 3 --seed 5").out == fsp_run("enumerate --max-vertices 3").out);

  fs::path dir = scratch();
  fsp_run("enumerate --max-vertices 2 --out " + (dir / "census.json").string());
  CHECK(json::parse(fsp::read_text_file((dir / "census.json").string())) == two);
  fs::remove_all(dir);

  json c = fsp_json("census --max-vertices 3");
  CHECK(c["h1_by_vertices"]["2"] == json::array({"0", "Z/2", "Z/3"}));
}

TEST_CASE("render") {
  Run dot = fsp_run("render --format dot CAT/abalone.dsd");
  CHECK(dot.status == 0);
  CHECK(dot.out.find("digraph dsd") != std::string::npos);
  CHECK(dot.out.find("class=\"E\"") != std::string::npos);
  Run svg = fsp_run("render --format svg CAT/abalone.dsd");
  CHECK(svg.status == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  size_t vertices = 0;
  for (size_t at = svg.out.find("class=\"vertex\""); at != std::string::npos;
       at = svg.out.find("class=\"vertex\"", at + 1))
    ++vertices;
  CHECK(vertices == 4);
  CHECK(fsp_run("render --format png CAT/abalone.dsd").status == 2);
}

TEST_CASE("catalog directory override") {
  CHECK(fsp_run("--catalog /nonexistent/dir catalog list").status != 0);
  std::string cmd = "FSP_CATALOG=" + fsp::default_catalog_dir() + " " + std::string(FSP_BINARY) + " catalog check >/dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
}
