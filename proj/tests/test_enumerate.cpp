#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fsp/error.hpp"
#include "support.hpp"

using namespace fsp;
using namespace fsp::test;

namespace {

std::multiset<std::string> h1_multiset(const std::vector<CensusEntry>& entries, int vertices) {
  std::multiset<std::string> out;
  for (const CensusEntry& e : entries)
    if (e.vertices == vertices) out.insert(e.homology.h1_string());
  return out;
}

std::set<CanonicalCode> codes(const std::vector<CensusEntry>& entries) {
  std::set<CanonicalCode> out;
  for (const CensusEntry& e : entries) out.insert(e.code);
  return out;
}

int count(const std::vector<CensusEntry>& entries, int vertices) {
  int n = 0;
  for (const CensusEntry& e : entries) n += e.vertices == vertices;
  return n;
}

}  // namespace

TEST_CASE("double occurrence words") {
  CHECK(double_occurrence_words(1).size() == 1);
  CHECK(double_occurrence_words(2).size() == 3);
  CHECK(double_occurrence_words(3).size() == 15);
  CHECK(double_occurrence_words(4).size() == 105);
}

TEST_CASE("census counts") {
  CHECK(census(1).size() == 1);
  CHECK(count(census(2), 2) == 3);
  CHECK(count(census(3), 3) == 9);
  CHECK(count(census(4), 4) == 35);
  CHECK(h1_multiset(census(2), 2) == std::multiset<std::string>{"0", "Z/2", "Z/3"});
  CHECK(h1_multiset(census(3), 3) ==
        std::multiset<std::string>{"0", "0", "Z/2", "Z/2", "Z/3", "Z/3", "Z/5", "Z/2+Z/2", "Z/4"});
  CHECK(h1_multiset(census(4), 4).count("Z") == 1);
}

TEST_CASE("entries are sorted and unique") {
  const auto& all = census(4);
  for (size_t i = 1; i < all.size(); ++i) {
    CHECK(std::pair(all[i - 1].vertices, all[i - 1].code) < std::pair(all[i].vertices, all[i].code));
  }
  CHECK(codes(all).size() == all.size());
}

TEST_CASE("every entry is valid, positive and admissible") {
  for (const CensusEntry& e : census(4)) {
    CHECK(validate(e.diagram).valid());
    CHECK(is_positive(e.diagram));
    CHECK(e.positive);
    CHECK(e.admissibility.status == Feasibility::feasible);
    CHECK(verify(build_system(derive_presentation(e.diagram), false), e.admissibility));
    CHECK(canonical_code(e.diagram) == e.code);
    CHECK(static_cast<int>(e.diagram.vertex_labels.size()) == e.vertices);
  }
}

TEST_CASE("counts are monotone in n_max") {
  for (int n = 1; n < 4; ++n) {
    auto small = codes(census(n)), big = codes(census(n + 1));
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
}

TEST_CASE("shuffled and single-threaded runs agree") {
  auto reference = codes(census(3));
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    EnumerateOptions o;
    o.shuffle_seed = seed;
    o.threads = static_cast<unsigned>(seed);
    auto run = enumerate_positive(3, o);
    CHECK(codes(run) == reference);
    REQUIRE(run.size() == census(3).size());
    for (size_t i = 0; i < run.size(); ++i) CHECK(run[i].code == census(3)[i].code);
  }
}

TEST_CASE("n_max outside 1..4 is rejected") {
  CHECK_THROWS_AS(enumerate_positive(0), Error);
  CHECK_THROWS_AS(enumerate_positive(5), Error);
}

TEST_CASE("census report") {
  CensusReport r = census_report(census(3));
  std::map<std::string, int> first;
  for (const CensusRow& row : r.rows) first[row.h1] = row.min_vertices;
  CHECK(first.at("0") == 1);
  CHECK(first.at("Z/2") == 2);
  CHECK(first.at("Z/3") == 2);
  CHECK(first.at("Z/5") == 3);
  CHECK(first.at("Z/4") == 3);
  CHECK(first.at("Z/2+Z/2") == 3);
  CHECK(first.size() == 6);
  CHECK(r.h1_by_vertices.at(1) == std::vector<std::string>{"0"});
  CensusReport again = census_report(census(3));
  CHECK(again.h1_by_vertices == r.h1_by_vertices);
  CHECK(census_report({}).rows.empty());
}

TEST_CASE("catalog matching") {
  std::vector<CensusEntry> entries = census(3);
  std::map<std::string, std::string> labels;
  for (const CatalogEntry& e : catalog().entries) labels[e.name] = e.label;
  auto named = catalog().diagrams();
  named.emplace_back("mirror", mirror(abalone()));
  CatalogMatch m = match_catalog(entries, named, labels);
  CHECK(entries[0].name == "1_1");
  CHECK(entries[0].label == "S3");
  CHECK(m.unmatched_entries.empty());
  std::set<std::string> unmatched(m.unmatched_catalog.begin(), m.unmatched_catalog.end());
  CHECK(unmatched == std::set<std::string>{"mirror", "3_9_intermediate", "4_s2xs1"});
  std::map<std::string, std::string> h1_of;
  for (const CensusEntry& e : entries) h1_of[e.name] = e.homology.h1_string();
  CHECK(h1_of.at("2_2") == "Z/2");
  CHECK(h1_of.at("3_6") == "Z/5");
  CHECK(h1_of.at("3_8") == "Z/2+Z/2");
}
