#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fsp/ds_diagram.hpp"
#include "fsp/presentation.hpp"
#include "fsp/scalar.hpp"

namespace fsp {

// Strict homogeneous system: coefficients * x > 0 row by row. One variable
// per spine edge (full) or per non-tree edge (reduced); one row per region.
struct InequalitySystem {
  std::vector<int> variables;  // edge ids
  std::vector<int> rows;       // region ids
  IntMatrix coefficients;      // rows x variables
};

InequalitySystem build_system(const SpinePresentation& p, bool reduced);

enum class Feasibility { feasible, infeasible };

struct AdmissibilityCertificate {
  Feasibility status = Feasibility::infeasible;
  RationalVector witness;  // feasible: coefficients * witness > 0, entries in [-1, 1]
  RationalVector farkas;   // infeasible: farkas >= 0, nonzero, farkas^T * coefficients = 0
};

// Exact decision by Fourier-Motzkin elimination with multiplier tracking.
AdmissibilityCertificate decide(const InequalitySystem& s);

// Substitution checks for either kind of certificate.
bool verify_witness(const InequalitySystem& s, const RationalVector& x);
bool verify_farkas(const InequalitySystem& s, const RationalVector& y);
bool verify(const InequalitySystem& s, const AdmissibilityCertificate& c);

// Pairs (greater, lesser) of type-b spine-edge ids read from inside regions
// whose word is exactly (b c b^-1 c^-1)^k up to rotation. Sorted, unique.
std::vector<std::pair<int, int>> b_edge_partial_order(const DsDiagram& d);

// Values -1/2, 2 + delta, 3, 4 on edges of type a, b, c, d. The type-b edges
// are sorted topologically along the partial order, least first, and the i-th
// (from 1) gets delta = i / (8 m (n_b + 1)). Aligned with the edges of
// derive_presentation(d). Throws Error on non-positive input or a cycle.
RationalVector positive_witness(const DsDiagram& d);

std::string to_string(Feasibility f);

}  // namespace fsp
