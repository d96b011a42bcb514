#pragma once

#include <optional>
#include <string>

#include "isr/decode.hpp"
#include "isr/exact.hpp"

namespace isr {

// Short-vector bounds for the column lattice of a full-row-rank matrix:
// the determinantal bound √m·|det(A′ᵀA′)|^{−1/2m} through the minimum-
// norm right inverse A′, and the entry bound √m·|A|. The determinantal
// bound is genuinely attainable by an m-sparse integer point: A′ᵀA′ =
// (AAᵀ)⁻¹, so by Cauchy–Binet the bound dominates √m·|det A_J|^{1/m} for
// every column subset J, and the classical lattice bound on the best A_J
// produces the witness.
struct BoundReport {
  std::string matrix_id;
  double minkowski_bound = 0.0;
  double naive_bound = 0.0;
  Rational gram_det;     // det(A′ᵀA′), exact
  IndexSet index_set;    // right-inverse convention: the leading m indices
};

BoundReport sparse_minkowski_bound(const RatMat& a, const std::string& matrix_id = "");

// √m · max|a_ij|.
double naive_bound(const RatMat& a);

// Box {x : |L_i(x)| ≤ c_i} for the linear forms given by the rows of a
// nonsingular B, with the feasibility inequality of the chosen index set:
// ∏_{i∈I} c_i ≥ |det((B⁻¹)_Iᵀ(B⁻¹)_I)|^{−1/2}, evaluated exactly as
// (∏c)²·|det| ≥ 1.
struct LinearFormsBox {
  RatMat b;
  std::vector<Rational> c;
  IndexSet index_set;
};

bool linear_forms_feasible(const LinearFormsBox& box);

// First (support-lexicographic, then value-lexicographic) nonzero x with
// ‖x‖₀ ≤ rows(A), |x_i| ≤ max_coeff and ‖Ax‖ ≤ bound·(1 + 1e−9).
std::optional<SparseIntSignal> find_sparse_witness(const Eigen::MatrixXd& a, double bound,
                                                   long long max_coeff,
                                                   std::uint64_t enumeration_cap = 100'000'000);

// Default witness box: ceil(bound · max column norm of A′) + 5.
long long default_witness_box(const RatMat& a, double bound);

// Exact test of the cube-image condition √|det(A_Iᵀ A_I)| ≥ 2^m (columns
// I of a nonsingular d×d matrix), i.e. det ≥ 4^m in rational arithmetic.
bool proposition_volume_check(const RatMat& a, const IndexSet& index_set);

// x ∈ A·[−1/2,1/2]^d (the image of the side-1 cube), decided exactly:
// solve Au = x and test ‖u‖∞ ≤ 1/2.
bool parallelepiped_contains(const RatMat& a, const IntVec& x);

// Smallest-support search for a nonzero integer point of that image with
// ‖x‖₀ ≤ s and |x_i| ≤ box; enumeration order as in find_sparse_witness.
std::optional<IntVec> find_parallelepiped_point(const RatMat& a, Eigen::Index s, long long box,
                                                std::uint64_t enumeration_cap = 100'000'000);

}  // namespace isr
