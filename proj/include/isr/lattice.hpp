#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isr/eigen_support.hpp"

namespace isr {

// Lattice B·ℤ^r with the basis vectors as columns. B may be tall (n×r,
// full column rank): realified algebraic matrices put rank-m lattices in
// ℝ^{2m}. `source` records which columns of the sensing matrix built it.
struct LatticeBasis {
  Eigen::MatrixXd basis;
  IndexSet source;
};

struct CvpResult {
  Eigen::VectorXd point;  // the lattice point, basis · coeffs
  IntVec coeffs;          // exact integer coefficients from the enumeration
  double distance = 0.0;  // ‖point − y‖, recomputed from the point itself
};

// Closest lattice point to y within `radius` (inclusive, with a hair of
// slack so exact-boundary points survive rounding), or nullopt if the
// ball is empty. Depth-first coefficient enumeration with Fincke–Pohst
// interval bounds from a QR factorization; distance ties are broken to
// the lexicographically smallest coefficient vector. Counts every partial
// coefficient assignment as a node; exceeding node_cap is an error rather
// than a silent truncation.
//
// max_nonzero ≥ 0 restricts the search to coefficient vectors with at
// most that many nonzero entries — "closest admissible point", not a
// post-filter on the unconstrained winner, which matters: the nearest
// point of a sublattice is usually dense, and a decoder that discards it
// would never see the sparse point sitting slightly farther away.
std::optional<CvpResult> cvp_enumerate(const LatticeBasis& lattice, const Eigen::VectorXd& y,
                                       double radius, std::uint64_t node_cap = 100'000'000,
                                       Eigen::Index max_nonzero = -1);

// All C(d, r) column-subset lattices of a sensing matrix in lexicographic
// index order, r defaulting to the row count (square bases). A rank-
// deficient subset is a certificate violation — the sweep's uniqueness
// argument rests on every subset being a genuine rank-r lattice.
std::vector<LatticeBasis> submatrix_lattices(const Eigen::MatrixXd& a,
                                             Eigen::Index subset_size = -1,
                                             std::uint64_t max_count = 1'000'000);

}  // namespace isr
