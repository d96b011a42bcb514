#include "isr/baselines.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "isr/errors.hpp"

namespace isr {

Eigen::VectorXd least_squares_min_norm(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side must match the rows of A");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < a.rows()) {
    throw RankError("least_squares_min_norm needs a full-row-rank matrix");
  }
  // Min-norm solution Aᵀ(AAᵀ)⁻¹b; AAᵀ is positive definite at full row rank.
  const Eigen::MatrixXd gram = a * a.transpose();
  const Eigen::VectorXd z = a.transpose() * gram.ldlt().solve(b);
  const double ortho = (a.transpose() * (a * z - b)).norm();
  if (ortho > 1e-8 * (1.0 + b.norm()) * (1.0 + a.norm())) {
    throw Error("least-squares residual lost orthogonality to the column space");
  }
  return z;
}

namespace {

// Least squares on a column subset, minimum-norm when rank-deficient;
// scatters the coefficients back into a dense d-vector.
Eigen::VectorXd solve_on_support(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                 const std::vector<Eigen::Index>& support,
                                 bool* rank_deficient = nullptr) {
  Eigen::MatrixXd sub(a.rows(), static_cast<Eigen::Index>(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i) sub.col(static_cast<Eigen::Index>(i)) = a.col(support[i]);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(sub);
  if (rank_deficient) *rank_deficient = cod.rank() < sub.cols();
  const Eigen::VectorXd coeffs = cod.solve(b);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(a.cols());
  for (std::size_t i = 0; i < support.size(); ++i) x(support[i]) = coeffs(static_cast<Eigen::Index>(i));
  return x;
}

}  // namespace

Eigen::VectorXd omp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, Eigen::Index s) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side must match the rows of A");
  if (s < 1 || s > a.rows()) throw PreconditionError("omp sparsity must satisfy 1 <= s <= m");

  std::vector<Eigen::Index> support;
  std::vector<bool> used(static_cast<std::size_t>(a.cols()), false);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(a.cols());
  Eigen::VectorXd residual = b;
  for (Eigen::Index round = 0; round < s; ++round) {
    if (residual.norm() <= 1e-12 * (1.0 + b.norm())) break;
    Eigen::Index pick = -1;
    double best = -1.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double nj = a.col(j).norm();
      if (nj < 1e-12) continue;
      const double score = std::abs(a.col(j).dot(residual)) / nj;
      if (score > best) {  // strict: ties stay with the smallest index
        best = score;
        pick = j;
      }
    }
    if (pick < 0) break;
    used[static_cast<std::size_t>(pick)] = true;
    support.push_back(pick);
    x = solve_on_support(a, b, support);
    residual = b - a * x;
  }
  return x;
}

Eigen::VectorXd hard_threshold(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                               Eigen::Index s, bool* rank_fallback) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side must match the rows of A");
  if (s < 1 || s > a.cols()) throw PreconditionError("threshold sparsity must satisfy 1 <= s <= d");

  const Eigen::VectorXd scores = (a.transpose() * b).cwiseAbs();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(a.cols()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return scores(i) > scores(j); });
  std::vector<Eigen::Index> support(order.begin(), order.begin() + s);
  std::sort(support.begin(), support.end());

  bool deficient = false;
  Eigen::VectorXd x = solve_on_support(a, b, support, &deficient);
  if (rank_fallback) *rank_fallback = deficient;
  return x;
}

IntVec round_to_integer(const Eigen::VectorXd& x) {
  IntVec out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out(i) = std::llround(x(i));
  return out;
}

Eigen::VectorXd run_baseline(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                             const BaselineConfig& config) {
  Eigen::VectorXd estimate;
  switch (config.method) {
    case BaselineConfig::Method::omp:
      estimate = omp(a, b, config.s);
      break;
    case BaselineConfig::Method::hard_threshold:
      estimate = hard_threshold(a, b, config.s);
      break;
    case BaselineConfig::Method::least_squares:
      estimate = least_squares_min_norm(a, b);
      break;
  }
  if (config.round_to_integer) {
    estimate = round_to_integer(estimate).cast<double>();
  }
  return estimate;
}

}  // namespace isr
