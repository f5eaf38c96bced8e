#include "fsp/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fsp/error.hpp"

namespace fsp {

namespace {

int boundary_base(const SpinePresentation& p, const BoundaryWord& w, const std::vector<int>& circle_vertex) {
  const SignedEdge& s = w.front();
  const int e = p.edge_index(s.edge);
  const PresentationEdge& edge = p.edges[e];
  if (edge.circle) return circle_vertex[e];
  return p.vertex_index(s.sign > 0 ? edge.from : edge.to);
}

}  // namespace

ChainComplex build_chain_complex(const SpinePresentation& p) {
  check_structure(p);
  const int V = static_cast<int>(p.vertices.size());
  const int E = static_cast<int>(p.edges.size());
  const int R = static_cast<int>(p.regions.size());
  ChainComplex c;
  c.d1 = IntMatrix::Zero(V, E);
  for (int j = 0; j < E; ++j) {
    const PresentationEdge& e = p.edges[j];
    if (e.circle) continue;
    c.d1(p.vertex_index(e.to), j) += 1;
    c.d1(p.vertex_index(e.from), j) -= 1;
  }
  c.d2 = IntMatrix::Zero(E, R);
  for (int i = 0; i < R; ++i)
    for (const BoundaryWord& w : p.regions[i].boundaries)
      for (const SignedEdge& s : w) c.d2(p.edge_index(s.edge), i) += s.sign;
  c.d3 = IntMatrix::Zero(R, 1);
  return c;
}

ChainComplex cellular_complex(const SpinePresentation& p) {
  ChainComplex plain = build_chain_complex(p);
  const int V = static_cast<int>(p.vertices.size());
  const int E = static_cast<int>(p.edges.size());
  const int R = static_cast<int>(p.regions.size());
  std::vector<int> circle_vertex(E, -1);
  int extra_vertices = 0;
  for (int j = 0; j < E; ++j)
    if (p.edges[j].circle) circle_vertex[j] = V + extra_vertices++;
  int cuts = 0;
  for (const PresentationRegion& r : p.regions) cuts += static_cast<int>(r.boundaries.size()) - 1;

  ChainComplex c;
  c.d1 = IntMatrix::Zero(V + extra_vertices, E + cuts);
  c.d1.topLeftCorner(V, E) = plain.d1;
  c.d2 = IntMatrix::Zero(E + cuts, R);
  c.d2.topRows(E) = plain.d2;
  int cut = E;
  for (const PresentationRegion& r : p.regions) {
    const int base = boundary_base(p, r.boundaries.front(), circle_vertex);
    for (size_t k = 1; k < r.boundaries.size(); ++k, ++cut) {
      // Cut arcs cancel in the abelianized boundary of the cut-open disk.
      c.d1(boundary_base(p, r.boundaries[k], circle_vertex), cut) += 1;
      c.d1(base, cut) -= 1;
    }
  }
  c.d3 = IntMatrix::Zero(R, 1);
  return c;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  SmithForm out;
  bool exhausted = false;
  for (Eigen::Index t = 0; t < std::min(rows, cols) && !exhausted; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        exhausted = true;
        break;
      }
      a.row(t).swap(a.row(pi));
      a.col(t).swap(a.col(pj));
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / a(t, t);
        for (Eigen::Index j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / a(t, t);
        for (Eigen::Index i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (Eigen::Index j = t; j < cols; ++j) a(t, j) += a(bad, j);
    }
    if (exhausted) break;
    out.invariant_factors.push_back(abs(a(t, t)));
    ++out.rank;
  }
  return out;
}

BigInt HomologyProfile::h1_order() const {
  if (betti[1] > 0) return 0;
  BigInt n = 1;
  for (const BigInt& t : torsion) n *= t;
  return n;
}

std::string HomologyProfile::h1_string() const {
  std::vector<std::string> parts;
  if (betti[1] == 1) parts.push_back("Z");
  if (betti[1] > 1) parts.push_back("Z^" + std::to_string(betti[1]));
  for (const BigInt& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string s;
  for (const auto& x : parts) s += (s.empty() ? "" : "+") + x;
  return s;
}

HomologyProfile h1(const SpinePresentation& p) {
  ChainComplex c = cellular_complex(p);
  SmithForm s1 = smith_normal_form(c.d1);
  SmithForm s2 = smith_normal_form(c.d2);
  HomologyProfile h;
  const int V = static_cast<int>(c.d1.rows());
  const int E = static_cast<int>(c.d1.cols());
  const int R = static_cast<int>(c.d2.cols());
  h.betti = {V - s1.rank, E - s1.rank - s2.rank, R - s2.rank, 1};
  for (const BigInt& f : s2.invariant_factors)
    if (f > 1) h.torsion.push_back(f);
  h.qhs = h.betti == std::array<int, 4>{1, 0, 0, 1};
  return h;
}

BigInt determinant(IntMatrix m) {
  // Fraction-free Bareiss elimination.
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error("determinant of a non-square matrix");
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.row(k).swap(m.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix reduced_matrix(const SpinePresentation& p) {
  ChainComplex c = build_chain_complex(p);
  std::vector<int> tree = spanning_tree(p);
  std::set<int> in_tree(tree.begin(), tree.end());
  std::vector<Eigen::Index> rows;
  for (size_t j = 0; j < p.edges.size(); ++j)
    if (!in_tree.count(p.edges[j].id)) rows.push_back(static_cast<Eigen::Index>(j));
  IntMatrix out(static_cast<Eigen::Index>(rows.size()), c.d2.cols());
  for (size_t r = 0; r < rows.size(); ++r) out.row(static_cast<Eigen::Index>(r)) = c.d2.row(rows[r]);
  return out;
}

BigInt det_A_test(const SpinePresentation& p) {
  if (!is_special(p)) throw Error("not special / A not square: presentation is not special");
  IntMatrix a = reduced_matrix(p);
  if (a.rows() != a.cols())
    throw Error("not special / A not square: reduced matrix is " + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()));
  return determinant(a);
}

}  // namespace fsp
