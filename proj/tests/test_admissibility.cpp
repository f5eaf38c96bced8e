#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "fsp/admissibility.hpp"
#include "fsp/error.hpp"
#include "fsp/homology.hpp"
#include "support.hpp"

using namespace fsp;
using namespace fsp::test;

namespace {

RationalVector vec(std::initializer_list<Rational> xs) {
  RationalVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rational& x : xs) v(i++) = x;
  return v;
}

InequalitySystem system_of(const std::vector<std::vector<int>>& rows) {
  InequalitySystem s;
  const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  s.coefficients = IntMatrix(static_cast<Eigen::Index>(rows.size()), n);
  for (int j = 0; j < n; ++j) s.variables.push_back(j + 1);
  for (size_t i = 0; i < rows.size(); ++i) {
    s.rows.push_back(static_cast<int>(i) + 1);
    for (int j = 0; j < n; ++j) s.coefficients(i, j) = rows[i][j];
  }
  return s;
}

bool in_unit_box(const RationalVector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) < -1 || x(i) > 1) return false;
  return true;
}

}  // namespace

TEST_CASE("abalone system and the witness (3, -1)") {
  SpinePresentation p = derive_presentation(abalone());
  for (bool reduced : {false, true}) {
    InequalitySystem s = build_system(p, reduced);
    CHECK(s.variables == std::vector<int>{1, 2});
    IntMatrix a(2, 2);
    a << 1, 2, 0, -1;
    CHECK(s.coefficients == a);
    CHECK(verify_witness(s, vec({3, -1})));
    CHECK_FALSE(verify_witness(s, vec({1, 1})));
    AdmissibilityCertificate c = decide(s);
    CHECK(c.status == Feasibility::feasible);
    CHECK(verify(s, c));
    CHECK(in_unit_box(c.witness));
  }
}

TEST_CASE("the disk and annulus spine is not admissible") {
  SpinePresentation p = disk_annulus();
  InequalitySystem s = build_system(p, true);
  CHECK(s.variables.size() == 1);
  AdmissibilityCertificate c = decide(s);
  CHECK(c.status == Feasibility::infeasible);
  CHECK(verify_farkas(s, c.farkas));
  CHECK(c.farkas == vec({2, 1}));
  CHECK(decide(build_system(p, false)).status == Feasibility::infeasible);
}

TEST_CASE("certificate checks reject bad certificates") {
  InequalitySystem s = system_of({{1}, {-2}});
  CHECK_FALSE(verify_farkas(s, vec({1, 1})));
  CHECK_FALSE(verify_farkas(s, vec({0, 0})));
  CHECK_FALSE(verify_farkas(s, vec({-2, -1})));
  CHECK_FALSE(verify_witness(s, vec({1})));
  CHECK_FALSE(verify_witness(s, vec({1, 2})));
}

TEST_CASE("random systems: certificates always verify") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dim(1, 5), entry(-3, 3);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
    for (auto& r : a)
      for (int& x : r) x = entry(rng);
    InequalitySystem s = system_of(a);
    AdmissibilityCertificate c = decide(s);
    REQUIRE(verify(s, c));
    if (c.status == Feasibility::feasible) {
      CHECK(in_unit_box(c.witness));
      ++feasible;
    } else {
      ++infeasible;
    }
  }
  CHECK(feasible > 100);
  CHECK(infeasible > 100);
}

TEST_CASE("systems with a planted solution are feasible") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 5), entry(-4, 4);
  for (int trial = 0; trial < 500; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    std::vector<int> x(cols);
    for (int& v : x) v = entry(rng);
    std::vector<std::vector<int>> a;
    while (static_cast<int>(a.size()) < rows) {
      std::vector<int> r(cols);
      int dot = 0;
      for (int j = 0; j < cols; ++j) dot += (r[j] = entry(rng)) * x[j];
      if (dot > 0) a.push_back(r);
      if (dot < 0) {
        for (int& v : r) v = -v;
        a.push_back(r);
      }
      if (std::all_of(x.begin(), x.end(), [](int v) { return v == 0; })) x[0] = 1;
    }
    CHECK(decide(system_of(a)).status == Feasibility::feasible);
  }
}

TEST_CASE("positive diagrams are admissible through the explicit witness") {
  for (const CensusEntry& e : census(4)) {
    SpinePresentation p = derive_presentation(e.diagram);
    InequalitySystem s = build_system(p, false);
    RationalVector x = positive_witness(e.diagram);
    CHECK(verify_witness(s, x));
    CHECK(e.admissibility.status == Feasibility::feasible);
    auto order = b_edge_partial_order(e.diagram);
    auto types = classify_edge_types(e.diagram);
    for (const auto& [hi, lo] : order) {
      CHECK(types.at(hi) == EdgeType::b);
      CHECK(types.at(lo) == EdgeType::b);
      CHECK(x(p.edge_index(hi)) > x(p.edge_index(lo)));
    }
  }
  CHECK_THROWS_AS(positive_witness(mirror(abalone())), Error);
}

TEST_CASE("abalone explicit witness") {
  RationalVector x = positive_witness(abalone());
  CHECK(x == vec({4, Rational(-1, 2)}));
}

TEST_CASE("full and reduced systems agree") {
  std::vector<SpinePresentation> all{disk_annulus()};
  for (const CatalogEntry& e : catalog().entries) all.push_back(*e.presentation);
  for (const CensusEntry& e : census(4)) {
    all.push_back(derive_presentation(e.diagram));
    all.push_back(derive_presentation(mirror(e.diagram)));
  }
  for (const SpinePresentation& p : all) {
    InequalitySystem f = build_system(p, false), r = build_system(p, true);
    AdmissibilityCertificate cf = decide(f), cr = decide(r);
    CHECK(verify(f, cf));
    CHECK(verify(r, cr));
    CHECK(cf.status == cr.status);
  }
}

TEST_CASE("rational homology spheres are admissible") {
  for (const CensusEntry& e : census(4)) {
    SpinePresentation p = derive_presentation(mirror(e.diagram));
    if (det_A_test(p) != 0) CHECK(decide(build_system(p, true)).status == Feasibility::feasible);
  }
}

TEST_CASE("the reduced system drops tree edges") {
  for (const CensusEntry& e : census(3)) {
    SpinePresentation p = derive_presentation(e.diagram);
    InequalitySystem r = build_system(p, true);
    CHECK(r.variables.size() == p.edges.size() - spanning_tree(p).size());
    CHECK(r.rows.size() == p.regions.size());
  }
}
