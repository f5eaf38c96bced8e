#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "fsp/canonical.hpp"
#include "fsp/error.hpp"
#include "support.hpp"

using namespace fsp;
using namespace fsp::test;

namespace {

bool mentions(const ValidationReport& r, const std::string& what) {
  for (const std::string& v : r.violations)
    if (v.find(what) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("abalone counts, types and positivity") {
  DsDiagram d = abalone();
  ValidationReport r = validate(d);
  CHECK(r.valid());
  CHECK(r.spine_vertices == 1);
  CHECK(r.spine_edges == 2);
  CHECK(r.regions == 2);
  auto vt = classify_vertex_types(d);
  REQUIRE(vt.size() == 1);
  CHECK(vt.at(1) == VertexType::l);
  auto et = classify_edge_types(d);
  CHECK(et.at(1) == EdgeType::d);
  CHECK(et.at(2) == EdgeType::a);
  CHECK(is_positive(d));
  CHECK(satisfies_path_grammar(d));
}

TEST_CASE("abalone boundary words") {
  SpinePresentation p = derive_presentation(abalone());
  REQUIRE(p.regions.size() == 2);
  REQUIRE(p.regions[0].boundaries.size() == 1);
  CHECK(abelianize(p.regions[0].boundaries[0], 2) == std::vector<int>{1, 2});
  for (const SignedEdge& s : p.regions[0].boundaries[0])
    if (s.edge == 2) CHECK(s.sign == 1);
  CHECK(p.regions[1].boundaries[0] == BoundaryWord{{2, -1}});
  CHECK(check_presentation(p).empty());
  CHECK(is_special(p));
  CHECK(p.euler_characteristic() == 1);
}

TEST_CASE("dsd round trip") {
  DsDiagram d = abalone();
  std::string text = write_diagram(d, "round trip");
  DsDiagram e = parse_diagram(text);
  CHECK(write_diagram(e, "round trip") == text);
  CHECK(canonical_code(e) == canonical_code(d));
}

TEST_CASE("dsd parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_diagram("%dsd 1\ndarts 2\nedge 0 0\n"), doctest::Contains("fixed point"), ParseError);
  CHECK_THROWS_AS(parse_diagram("%dsd 1\ndarts 2\nbogus 1\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("%dsd 1\ndarts 2\nedge 0 1\nedge 0 1\n"), doctest::Contains("line 4"), ParseError);
  CHECK_THROWS_AS(parse_diagram("not a diagram\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("%dsd 1\ndarts 0\n"), ParseError);
}

TEST_CASE("validate reports broken diagrams") {
  DsDiagram good = abalone();
  SUBCASE("sigma not matching vertices") {
    DsDiagram d = good;
    std::swap(d.map.sigma[0], d.map.sigma[1]);
    CHECK_FALSE(validate(d).valid());
  }
  SUBCASE("missing edge label") {
    DsDiagram d = good;
    d.edge_labels.pop_back();
    ValidationReport r = validate(d);
    CHECK_FALSE(r.valid());
    CHECK(mentions(r, "label multiplicity"));
  }
  SUBCASE("missing vertex label") {
    DsDiagram d = good;
    d.vertex_labels.clear();
    CHECK_FALSE(validate(d).valid());
  }
  SUBCASE("region pairing swapped") {
    DsDiagram d = good;
    std::swap(d.regions[0].outside_face, d.regions[1].outside_face);
    CHECK_FALSE(validate(d).valid());
  }
  SUBCASE("E-cycle cut short") {
    DsDiagram d = good;
    d.e_cycle.pop_back();
    CHECK_FALSE(validate(d).valid());
  }
  SUBCASE("require_valid throws") {
    DsDiagram d = good;
    d.regions.pop_back();
    CHECK_THROWS_AS(require_valid(d), Error);
  }
}

TEST_CASE("mirror is an involution that swaps chirality") {
  std::vector<DsDiagram> all{abalone()};
  for (const CensusEntry& e : census(3)) all.push_back(e.diagram);
  for (const DsDiagram& d : all) {
    DsDiagram m = mirror(d);
    REQUIRE(validate(m).valid());
    CHECK(canonical_code(mirror(m)) == canonical_code(d));
    auto a = classify_vertex_types(d), b = classify_vertex_types(m);
    REQUIRE(a.size() == b.size());
    for (const auto& [id, t] : a) CHECK(b.at(id) != t);
    CHECK_FALSE(is_positive(m));
  }
  CHECK(canonical_code(mirror(abalone())) != canonical_code(abalone()));
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937_64 rng(20261019);
  int cases = 0;
  for (int round = 0; round < 80; ++round)
    for (const CensusEntry& e : census(3)) {
      DsDiagram r = random_relabel(e.diagram, rng);
      REQUIRE(validate(r).valid());
      CHECK(canonical_code(r) == e.code);
      ++cases;
    }
  CHECK(cases >= 1000);
}

TEST_CASE("canonical codes agree with an independent isomorphism oracle") {
  std::mt19937_64 rng(7);
  std::vector<DsDiagram> all;
  for (const CensusEntry& e : census(4)) {
    all.push_back(e.diagram);
    all.push_back(random_relabel(e.diagram, rng));
    all.push_back(mirror(e.diagram));
  }
  std::map<std::string, std::string> code_to_oracle, oracle_to_code;
  for (const DsDiagram& d : all) {
    std::string code = canonical_code(d).hex(), oracle = min_rotated_flow_code(d);
    auto [it, fresh] = code_to_oracle.emplace(code, oracle);
    CHECK(it->second == oracle);
    auto [jt, fresh2] = oracle_to_code.emplace(oracle, code);
    CHECK(jt->second == code);
  }
  CHECK(code_to_oracle.size() == 2 * census(4).size());
}

TEST_CASE("hex codes round trip") {
  CanonicalCode c = canonical_code(abalone());
  CHECK(CanonicalCode::from_hex(c.hex()) == c);
}

TEST_CASE("flow codes rebuild their diagram") {
  for (const CensusEntry& e : census(4)) {
    FlowCode f = flow_code(e.diagram);
    CHECK(check_flow_code(f).empty());
    CHECK(canonical_code(build_diagram(f)) == e.code);
  }
  FlowCode ab = flow_code(abalone());
  CHECK(to_string(ab) == "0o 0i | l");
}

TEST_CASE("malformed flow codes are rejected") {
  FlowCode f{{0, 1}, {true, false}, {VertexType::l, VertexType::l}};
  CHECK_FALSE(check_flow_code(f).empty());
  FlowCode g{{0, 0}, {true, true}, {VertexType::l}};
  CHECK_FALSE(check_flow_code(g).empty());
  CHECK_THROWS_AS(build_diagram(g), Error);
}

TEST_CASE("path grammar holds on every positive diagram") {
  for (const CensusEntry& e : census(4)) CHECK(satisfies_path_grammar(e.diagram));
}

TEST_CASE("derived presentations are simple polyhedra") {
  for (const CensusEntry& e : census(4)) {
    SpinePresentation p = derive_presentation(e.diagram);
    CHECK(check_presentation(p).empty());
    CHECK(is_special(p));
    CHECK(p.regions.size() == p.vertices.size() + 1);
    CHECK(p.edges.size() == 2 * p.vertices.size());
  }
}
