#pragma once

#include <array>
#include <string>
#include <vector>

#include "fsp/presentation.hpp"
#include "fsp/scalar.hpp"

namespace fsp {

struct ChainComplex {
  IntMatrix d1;  // vertices x edges
  IntMatrix d2;  // edges x regions (the matrix A)
  IntMatrix d3;  // regions x 1, zero
};

// The complex read directly off the presentation: circle edges give zero
// columns of d1 and column i of d2 is the abelianized boundary of region i.
ChainComplex build_chain_complex(const SpinePresentation& p);

// A genuine cell structure for the same polyhedron: each circle edge gets a
// vertex and each region with k boundary words gets k - 1 cut arcs joining
// the base points of its words. Rows and columns of the plain complex come
// first. Equal to build_chain_complex for special presentations.
ChainComplex cellular_complex(const SpinePresentation& p);

struct SmithForm {
  std::vector<BigInt> invariant_factors;  // nonzero diagonal, each dividing the next
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

struct HomologyProfile {
  std::array<int, 4> betti{};
  std::vector<BigInt> torsion;  // invariant factors > 1 of H1
  bool qhs = false;

  // |H1|, or 0 when H1 is infinite.
  BigInt h1_order() const;
  // "0", "Z/2", "Z/2+Z/2", "Z", "Z^2+Z/3", ...
  std::string h1_string() const;
  bool operator==(const HomologyProfile&) const = default;
};

HomologyProfile h1(const SpinePresentation& p);

BigInt determinant(IntMatrix m);

// Coefficients of the non-tree edges (rows, in id order) in the region
// boundaries (columns, in id order).
IntMatrix reduced_matrix(const SpinePresentation& p);

// Determinant of the square reduced matrix of a special presentation.
// Throws Error otherwise.
BigInt det_A_test(const SpinePresentation& p);

}  // namespace fsp
