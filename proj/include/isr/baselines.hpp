#pragma once

#include "isr/eigen_support.hpp"

namespace isr {

// Minimum-norm solution of the underdetermined least-squares problem
// min ‖Az − b‖ for full-row-rank A; the residual is re-checked to be
// orthogonal to the column space. Rank deficiency is an error, not a
// silent pseudo-solve.
Eigen::VectorXd least_squares_min_norm(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

// Orthogonal matching pursuit: s rounds of picking the column with the
// largest normalized residual correlation |⟨a_j, r⟩|/‖a_j‖ (ties to the
// smallest index, already-selected columns skipped), then least squares
// on the accumulated support. Stops early once the residual is
// numerically zero. Returns a dense vector with at most s nonzeros.
Eigen::VectorXd omp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, Eigen::Index s);

// Support = indices of the s largest |Aᵀb| (ties to the smaller index),
// then least squares on that submatrix. A rank-deficient submatrix falls
// back to the minimum-norm pseudo-solution and reports it through
// *rank_fallback when the caller asks.
Eigen::VectorXd hard_threshold(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                               Eigen::Index s, bool* rank_fallback = nullptr);

// Coordinatewise nearest integer, halves away from zero: (0.4,−0.6,2.5)
// becomes (0,−1,3).
IntVec round_to_integer(const Eigen::VectorXd& x);

struct BaselineConfig {
  enum class Method { omp, hard_threshold, least_squares };
  Method method = Method::omp;
  Eigen::Index s = 1;
  bool round_to_integer = false;
};

// Dispatch helper for the experiment harness: run the configured method
// and optionally round, returning the estimate as a real vector either
// way (rounded estimates hold exact integer values).
Eigen::VectorXd run_baseline(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                             const BaselineConfig& config);

}  // namespace isr
