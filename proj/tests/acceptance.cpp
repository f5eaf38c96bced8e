// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "fsp/admissibility.hpp"
#include "fsp/canonical.hpp"
#include "fsp/error.hpp"
#include "fsp/homology.hpp"
#include "fsp/surgery.hpp"
#include "support.hpp"

using namespace fsp;
using namespace fsp::test;

namespace {

struct Checker {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

RationalVector vec2(Rational a, Rational b) {
  RationalVector v(2);
  v << a, b;
  return v;
}

bool is_zero(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

const CatalogEntry& base() { return *catalog().find("1_1"); }

void abalone_suite(Checker& check) {
  DsDiagram d = abalone();
  ValidationReport r = validate(d);
  check(r.valid() && r.spine_vertices == 1 && r.spine_edges == 2 && r.regions == 2, "validate and counts");
  SpinePresentation p = derive_presentation(d);
  check(abelianize(p.regions[0].boundaries[0], 2) == std::vector<int>{1, 2}, "dR1 = e1 + 2 e2");
  check(p.regions[1].boundaries == std::vector<BoundaryWord>{{{2, -1}}}, "dR2 = -e2");
  InequalitySystem s = build_system(p, true);
  AdmissibilityCertificate c = decide(s);
  check(c.status == Feasibility::feasible && verify(s, c), "decide is feasible with a verifying witness");
  check(verify_witness(s, vec2(3, -1)), "witness (3, -1) verifies");
  check(classify_vertex_types(d).at(1) == VertexType::l, "vertex is of l-type");
  check(h1(p).h1_string() == "0", "H1 = 0");
  BigInt det = det_A_test(p);
  check(det == 1 || det == -1, "det(A) = +-1");
}

void meridian_suite(Checker& check) {
  check(meridian_of_word({}) == ThetaVector{2, 1}, "empty word");
  for (int k = 0; k <= 5; ++k) {
    SurgeryWord w(k, Letter::R);
    check(meridian_of_word(w) == ThetaVector{k + 2, k + 1}, "R^" + std::to_string(k));
    ThetaState s = theta_state(w);
    check(s.theta1 == ThetaVector{k + 1, k} && s.theta2 == ThetaVector{1, 1}, "theta state R^" + std::to_string(k));
  }
  check(meridian_of_word({Letter::L}) == ThetaVector{3, 1}, "L");
  ThetaState s = theta_state({Letter::L});
  check(s.theta1 == ThetaVector{1, 0} && s.theta2 == ThetaVector{2, 1}, "theta state L");
}

void transversality_suite(Checker& check) {
  for (const SeifertSlope slope : {SeifertSlope{1, 2}, SeifertSlope{0, 1}})
    for (int k = 0; k <= 5; ++k) {
      SurgeryWord w(k, Letter::R);
      const std::string tag = "R^" + std::to_string(k) + " slope (" + slope.theta.str() + "," + slope.phi.str() + ")";
      check(transversality_check(w, slope), tag);
      auto trace = transversality_trace(w, slope);
      bool pattern = trace.size() == static_cast<size_t>(k) + 1;
      for (int j = 0; pattern && j <= k; ++j)
        pattern = trace[j].first == j * (slope.phi - slope.theta) + slope.phi && trace[j].first > 0 &&
                  trace[j].second > 0;
      check(pattern, tag + " trace k(q-p)+q");
    }
}

void lens_suite(Checker& check) {
  auto run = [&](const std::string& coil_name, int n, int expected) {
    Coil c = resolve_coil(base(), coil_name);
    SurgeryWord w(n - 1, Letter::R);
    BigInt predicted = surgered_h1_order(meridian_of_word(w), *c.longitude);
    DsDiagram out = apply_coil_surgery(*base().diagram, c, w);
    BigInt computed = h1(derive_presentation(out)).h1_order();
    check(predicted == expected && computed == expected && validate(out).valid(),
          coil_name + " n=" + std::to_string(n) + ": predicted " + predicted.str() + ", computed " + computed.str());
  };
  for (int n = 1; n <= 6; ++n) run("γ1", n, n);
  for (int n = 2; n <= 5; ++n) run("γ2", n, 2 * n - 1);
}

void multi_coil_suite(Checker& check) {
  Coil g1 = resolve_coil(base(), "γ1"), g2 = resolve_coil(base(), "γ2");
  struct Case {
    Letter a, b;
    std::string h1;
  };
  for (const Case& x : {Case{Letter::Lbar, Letter::Lbar, "0"}, Case{Letter::Lbar, Letter::R, "Z/2"},
                        Case{Letter::L, Letter::R, "Z/4"}}) {
    DsDiagram out = apply_coil_surgeries(*base().diagram, {{g1, {x.a}}, {g2, {x.b}}});
    std::string got = h1(derive_presentation(out)).h1_string();
    check(validate(out).valid() && got == x.h1, "(γ1," + to_string(x.a) + "),(γ2," + to_string(x.b) + "): H1 = " + got);
    if (x.a == Letter::L) {
      int r = 0;
      for (const auto& [id, t] : classify_vertex_types(out)) r += t == VertexType::r;
      check(r == 1, "exactly one r-type vertex, found " + std::to_string(r));
    }
  }
}

void infeasibility_suite(Checker& check) {
  SpinePresentation p = disk_annulus();
  for (bool reduced : {true, false}) {
    InequalitySystem s = build_system(p, reduced);
    AdmissibilityCertificate c = decide(s);
    check(c.status == Feasibility::infeasible && verify_farkas(s, c.farkas),
          std::string(reduced ? "reduced" : "full") + " system infeasible with Farkas certificate");
  }
}

void census_suite(Checker& check) {
  auto multiset = [](const std::vector<CensusEntry>& es, int n) {
    std::multiset<std::string> out;
    for (const CensusEntry& e : es)
      if (e.vertices == n) out.insert(e.homology.h1_string());
    return out;
  };
  for (int n : {1, 2, 3}) {
    auto es = enumerate_positive(n);
    int top = static_cast<int>(multiset(es, n).size());
    check(top == std::vector<int>{0, 1, 3, 9}[n], "n_max=" + std::to_string(n) + ": " + std::to_string(top) + " new entries");
  }
  const auto& es = census(3);
  check(es.size() == 13, "13 entries up to three vertices");
  check(multiset(es, 2) == std::multiset<std::string>{"0", "Z/2", "Z/3"}, "2-vertex H1 multiset");
  check(multiset(es, 3) == std::multiset<std::string>{"0", "0", "Z/2", "Z/2", "Z/3", "Z/3", "Z/5", "Z/2+Z/2", "Z/4"},
        "3-vertex H1 multiset");
  std::map<std::string, int> first;
  for (const CensusRow& row : census_report(es).rows) first[row.h1] = row.min_vertices;
  const std::map<std::string, int> expected{{"0", 1}, {"Z/2", 2}, {"Z/3", 2}, {"Z/5", 3}, {"Z/4", 3}, {"Z/2+Z/2", 3}};
  check(first == expected, "minimal vertex table");
}

void property_suite(Checker& check) {
  std::mt19937_64 rng(8);
  // Smith normal form against fraction-free elimination: the invariant
  // factors multiply to |det|, a zero determinant drops the rank, and each
  // factor divides the next. The unit tests compare with determinantal
  // divisors directly.
  std::uniform_int_distribution<int> size(1, 6), entry(-5, 5);
  int snf_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    int n = size(rng);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
    SmithForm s = smith_normal_form(m);
    BigInt prod = 1;
    for (const BigInt& f : s.invariant_factors) prod *= f;
    BigInt det = abs(determinant(m));
    bool ok = det == 0 ? s.rank < n : (s.rank == n && prod == det);
    for (size_t k = 1; k < s.invariant_factors.size(); ++k)
      ok = ok && s.invariant_factors[k] % s.invariant_factors[k - 1] == 0;
    snf_bad += !ok;
  }
  check(snf_bad == 0, "Smith normal form on 1000 random matrices");

  std::vector<SpinePresentation> presentations{disk_annulus()};
  for (const CatalogEntry& e : catalog().entries) presentations.push_back(*e.presentation);
  Coil g1 = resolve_coil(base(), "γ1"), g2 = resolve_coil(base(), "γ2");
  for (int k = 0; k <= 5; ++k)
    for (const Coil& c : {g1, g2})
      presentations.push_back(derive_presentation(apply_coil_surgery(*base().diagram, c, SurgeryWord(k, Letter::R))));
  for (const CensusEntry& e : census(3)) presentations.push_back(derive_presentation(e.diagram));
  bool chain = true, det_qhs = true, agree = true;
  for (const SpinePresentation& p : presentations) {
    for (const ChainComplex& c : {build_chain_complex(p), cellular_complex(p)})
      chain = chain && is_zero(multiply(c.d1, c.d2));
    if (is_special(p)) det_qhs = det_qhs && ((det_A_test(p) != 0) == h1(p).qhs);
    AdmissibilityCertificate f = decide(build_system(p, false)), r = decide(build_system(p, true));
    agree = agree && f.status == r.status && verify(build_system(p, false), f) && verify(build_system(p, true), r);
  }
  check(chain, "d1 d2 = 0 on all derived complexes");
  check(det_qhs, "det(A) != 0 iff qhs");
  check(agree, "full and reduced admissibility agree");

  int relabel_bad = 0, cases = 0;
  while (cases < 1000)
    for (const CensusEntry& e : census(3)) {
      relabel_bad += canonical_code(random_relabel(e.diagram, rng)) != e.code;
      ++cases;
    }
  check(relabel_bad == 0, "canonical code invariant under " + std::to_string(cases) + " relabelings");

  bool mirror_ok = true, witness_ok = true;
  for (const CensusEntry& e : census(3)) {
    DsDiagram m = mirror(e.diagram);
    mirror_ok = mirror_ok && validate(m).valid() && canonical_code(mirror(m)) == e.code;
    auto a = classify_vertex_types(e.diagram), b = classify_vertex_types(m);
    for (const auto& [id, t] : a) mirror_ok = mirror_ok && b.at(id) != t;
    InequalitySystem s = build_system(derive_presentation(e.diagram), false);
    witness_ok = witness_ok && e.admissibility.status == Feasibility::feasible && verify(s, e.admissibility) &&
                 verify_witness(s, positive_witness(e.diagram));
  }
  check(mirror_ok, "mirror involution swaps l and r");
  check(witness_ok, "every positive diagram is admissible with a verifying witness");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"1 abalone suite", abalone_suite},
      {"2 meridian arithmetic", meridian_suite},
      {"3 transversality", transversality_suite},
      {"4 lens families, dual oracle", lens_suite},
      {"5 multi-coil words", multi_coil_suite},
      {"6 infeasibility of the disk-annulus spine", infeasibility_suite},
      {"7 census", census_suite},
      {"8 property suites", property_suite},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Checker check;
    auto start = std::chrono::steady_clock::now();
    try {
      run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool ok = check.failures.empty();
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << static_cast<long>(ms) << " ms)\n";
    for (const std::string& f : check.failures) std::cout << "      failed: " << f << "\n";
  }
  return all ? 0 : 1;
}
