#pragma once

#include <optional>

#include "isr/lattice.hpp"

namespace isr {

// Integer signal stored sparsely: values are the nonzero entries, aligned
// with the (sorted, 0-based) support indices.
struct SparseIntSignal {
  Eigen::Index dim = 0;
  IndexSet support;
  std::vector<long long> values;

  IntVec dense() const;
  Eigen::Index sparsity() const { return static_cast<Eigen::Index>(support.size()); }
  static SparseIntSignal from_dense(const IntVec& x);
};

enum class DecodeStatus { unique_within_radius, best_effort, no_candidate };

struct DecodeResult {
  SparseIntSignal estimate;
  double residual_norm = 0.0;  // ‖y − A·estimate‖, recomputed from the estimate
  std::optional<IndexSet> lattice_used;
  DecodeStatus status = DecodeStatus::no_candidate;
};

const char* to_string(DecodeStatus s);

// Sublattice-sweep reconstruction: one CVP call per column subset at
// radius alpha/2, acceptance of candidates strictly inside that radius
// (coefficient sparsity capped at s), and exactly one accepted signal
// expected — two distinct ones contradict the norm certificate behind
// alpha and raise CertificateError. When the guarantee ball is empty the
// sweep re-runs with doubled radius until some candidate appears and
// reports it as best_effort (the global nearest, sparsity filter still
// applied); no_candidate is reserved for total enumeration failure.
//
// subset_size is the lattice rank r: the row count for integer matrices,
// m for realified 2m-row matrices. s defaults to r; alpha comes from the
// caller's certificate (1 for integer matrices, √m for algebraic ones).
DecodeResult reconstruct_cvp(const Eigen::MatrixXd& a, const Eigen::VectorXd& y, double alpha,
                             Eigen::Index s = -1, Eigen::Index subset_size = -1,
                             std::uint64_t node_cap = 100'000'000);

// Exhaustive argmin of ‖b − Ax‖ over x with ‖x‖₀ ≤ s, |x_i| ≤ box;
// distance ties go to the lexicographically smallest dense vector. The
// reference oracle for reconstruct_cvp; always reports best_effort since
// it certifies no uniqueness radius.
DecodeResult brute_force_decode(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                Eigen::Index s, long long box,
                                std::uint64_t enumeration_cap = 100'000'000);

// Noise norms strictly below alpha/2 guarantee exact recovery when
// ‖Az‖ ≥ alpha holds for all nonzero z with ‖z‖₀ ≤ 2s.
double recovery_guarantee_radius(double certificate_alpha);

}  // namespace isr
