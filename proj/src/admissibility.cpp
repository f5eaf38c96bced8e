#include "fsp/admissibility.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "diagram_analysis.hpp"
#include "fsp/error.hpp"
#include "fsp/homology.hpp"

namespace fsp {

InequalitySystem build_system(const SpinePresentation& p, bool reduced) {
  ChainComplex c = build_chain_complex(p);
  std::set<int> tree;
  if (reduced) {
    std::vector<int> t = spanning_tree(p);
    tree.insert(t.begin(), t.end());
  }
  InequalitySystem s;
  std::vector<Eigen::Index> cols;
  for (size_t j = 0; j < p.edges.size(); ++j)
    if (!tree.count(p.edges[j].id)) {
      s.variables.push_back(p.edges[j].id);
      cols.push_back(static_cast<Eigen::Index>(j));
    }
  for (const PresentationRegion& r : p.regions) s.rows.push_back(r.id);
  s.coefficients = IntMatrix::Zero(static_cast<Eigen::Index>(s.rows.size()),
                                   static_cast<Eigen::Index>(cols.size()));
  for (Eigen::Index i = 0; i < s.coefficients.rows(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) s.coefficients(i, static_cast<Eigen::Index>(j)) = c.d2(cols[j], i);
  return s;
}

namespace {

// A derived strict inequality coeff * x > 0 with coeff = mult^T * A, mult >= 0.
struct Row {
  std::vector<Rational> coeff;
  std::vector<Rational> mult;
};

// Scales so the first nonzero coefficient has absolute value 1.
void normalize(Row& r) {
  for (const Rational& c : r.coeff)
    if (c != 0) {
      Rational s = abs(c);
      for (Rational& x : r.coeff) x /= s;
      for (Rational& y : r.mult) y /= s;
      return;
    }
}

bool zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

AdmissibilityCertificate decide(const InequalitySystem& s) {
  const int m = static_cast<int>(s.coefficients.rows());
  const int k = static_cast<int>(s.coefficients.cols());
  std::vector<Row> rows;
  for (int i = 0; i < m; ++i) {
    Row r;
    for (int j = 0; j < k; ++j) r.coeff.push_back(Rational(s.coefficients(i, j)));
    r.mult.assign(m, 0);
    r.mult[i] = 1;
    rows.push_back(std::move(r));
  }

  AdmissibilityCertificate out;
  auto contradiction = [&](const std::vector<Row>& rs) {
    for (const Row& r : rs)
      if (zero(r.coeff)) {
        out.status = Feasibility::infeasible;
        out.farkas = RationalVector(m);
        for (int i = 0; i < m; ++i) out.farkas(i) = r.mult[i];
        return true;
      }
    return false;
  };

  // stages[j] holds the rows in force when variable j is eliminated.
  std::vector<std::vector<Row>> stages;
  if (contradiction(rows)) return out;
  for (int j = 0; j < k; ++j) {
    stages.push_back(rows);
    std::vector<Row> pos, neg, next;
    for (Row& r : rows) {
      if (r.coeff[j] > 0)
        pos.push_back(r);
      else if (r.coeff[j] < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (const Row& p : pos)
      for (const Row& n : neg) {
        const Rational a = -n.coeff[j], b = p.coeff[j];
        Row r;
        for (int c = 0; c < k; ++c) r.coeff.push_back(a * p.coeff[c] + b * n.coeff[c]);
        for (int i = 0; i < m; ++i) r.mult.push_back(a * p.mult[i] + b * n.mult[i]);
        r.coeff[j] = 0;
        next.push_back(std::move(r));
      }
    for (Row& r : next) normalize(r);
    // Identical normalized rows are redundant.
    std::vector<Row> unique;
    for (Row& r : next)
      if (std::none_of(unique.begin(), unique.end(), [&](const Row& u) { return u.coeff == r.coeff; }))
        unique.push_back(std::move(r));
    rows = std::move(unique);
    if (contradiction(rows)) return out;
  }

  // Back substitution: each variable sits strictly between its bounds.
  std::vector<Rational> x(k, 0);
  for (int j = k - 1; j >= 0; --j) {
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
    for (const Row& r : stages[j]) {
      if (r.coeff[j] == 0) continue;
      Rational rest = 0;
      for (int c = j + 1; c < k; ++c) rest += r.coeff[c] * x[c];
      Rational bound = -rest / r.coeff[j];
      if (r.coeff[j] > 0) {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      }
    }
    if (has_lo && has_hi)
      x[j] = (lo + hi) / 2;
    else if (has_lo)
      x[j] = lo + 1;
    else if (has_hi)
      x[j] = hi - 1;
  }
  Rational scale = 0;
  for (const Rational& v : x) scale = std::max(scale, Rational(abs(v)));
  out.status = Feasibility::feasible;
  out.witness = RationalVector(k);
  for (int j = 0; j < k; ++j) out.witness(j) = scale > 0 ? x[j] / scale : x[j];
  if (!verify_witness(s, out.witness)) throw Error("internal: elimination produced a failing witness");
  return out;
}

bool verify_witness(const InequalitySystem& s, const RationalVector& x) {
  if (x.size() != s.coefficients.cols()) return false;
  for (Eigen::Index i = 0; i < s.coefficients.rows(); ++i) {
    Rational sum = 0;
    for (Eigen::Index j = 0; j < s.coefficients.cols(); ++j) sum += Rational(s.coefficients(i, j)) * x(j);
    if (sum <= 0) return false;
  }
  return true;
}

bool verify_farkas(const InequalitySystem& s, const RationalVector& y) {
  if (y.size() != s.coefficients.rows()) return false;
  bool positive = false;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y(i) < 0) return false;
    if (y(i) > 0) positive = true;
  }
  if (!positive) return false;
  for (Eigen::Index j = 0; j < s.coefficients.cols(); ++j) {
    Rational sum = 0;
    for (Eigen::Index i = 0; i < y.size(); ++i) sum += y(i) * Rational(s.coefficients(i, j));
    if (sum != 0) return false;
  }
  return true;
}

bool verify(const InequalitySystem& s, const AdmissibilityCertificate& c) {
  return c.status == Feasibility::feasible ? verify_witness(s, c.witness) : verify_farkas(s, c.farkas);
}

std::vector<std::pair<int, int>> b_edge_partial_order(const DsDiagram& d) {
  if (!is_positive(d)) throw Error("b_edge_partial_order needs a positive diagram");
  detail::DiagramAnalysis a = detail::analyze_valid(d);
  auto types = classify_edge_types(d);
  const std::pair<EdgeType, int> pattern[4] = {
      {EdgeType::b, 1}, {EdgeType::c, 1}, {EdgeType::b, -1}, {EdgeType::c, -1}};
  std::set<std::pair<int, int>> rel;
  for (const RegionPair& r : d.regions) {
    auto w = a.inside_word(a.face_by_name.at(r.inside_face));
    const size_t n = w.size();
    if (n % 4 != 0) continue;
    for (size_t rot = 0; rot < n; ++rot) {
      bool match = true;
      for (size_t i = 0; i < n && match; ++i) {
        const auto& s = w[(rot + i) % n];
        match = types.at(s.edge_id) == pattern[i % 4].first && s.sign == pattern[i % 4].second;
      }
      if (!match) continue;
      for (size_t j = 0; j < n; j += 4) rel.insert({w[(rot + j) % n].edge_id, w[(rot + j + 2) % n].edge_id});
      break;
    }
  }
  return {rel.begin(), rel.end()};
}

RationalVector positive_witness(const DsDiagram& d) {
  if (!is_positive(d)) throw Error("positive_witness needs a positive diagram");
  SpinePresentation p = derive_presentation(d);
  auto types = classify_edge_types(d);
  auto rel = b_edge_partial_order(d);
  const int m = static_cast<int>(p.edges.size());

  std::vector<int> bs;
  for (const auto& [id, t] : types)
    if (t == EdgeType::b) bs.push_back(id);
  // Kahn's algorithm, smallest id first among the current minimal elements.
  std::vector<int> order;
  std::set<int> left(bs.begin(), bs.end());
  while (!left.empty()) {
    int pick = -1;
    for (int e : left) {
      bool minimal = std::none_of(rel.begin(), rel.end(),
                                  [&](const auto& pr) { return pr.first == e && left.count(pr.second); });
      if (minimal) {
        pick = e;
        break;
      }
    }
    if (pick < 0) throw Error("the b-edge relation is cyclic");
    order.push_back(pick);
    left.erase(pick);
  }
  std::map<int, Rational> delta;
  const int nb = static_cast<int>(bs.size());
  for (int i = 0; i < nb; ++i) delta[order[i]] = Rational(i + 1, 8 * m * (nb + 1));

  RationalVector x(m);
  for (int j = 0; j < m; ++j) {
    const int id = p.edges[j].id;
    switch (types.at(id)) {
      case EdgeType::a: x(j) = Rational(-1, 2); break;
      case EdgeType::b: x(j) = 2 + delta.at(id); break;
      case EdgeType::c: x(j) = 3; break;
      case EdgeType::d: x(j) = 4; break;
    }
  }
  return x;
}

std::string to_string(Feasibility f) { return f == Feasibility::feasible ? "feasible" : "infeasible"; }

}  // namespace fsp
