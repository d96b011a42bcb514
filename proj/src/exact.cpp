#include "isr/exact.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace isr {

Rational det_exact(const RatMat& m) { return det_bareiss<Rational>(m); }

BigInt det_exact_int(const Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>& m) {
  return det_bareiss<BigInt>(m);
}

void validate_index_set(const IndexSet& cols, Eigen::Index d) {
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] < 0 || cols[i] >= d) throw DimensionError("index set out of range");
    if (i > 0 && cols[i] <= cols[i - 1]) throw DimensionError("index set not strictly increasing");
  }
}

bool for_each_index_set(Eigen::Index d, Eigen::Index m,
                        const std::function<bool(const IndexSet&)>& fn) {
  if (m < 0 || m > d) throw DimensionError("index set size out of range");
  IndexSet idx(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (!fn(idx)) return false;
    // next lexicographic combination
    Eigen::Index i = m - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == d - m + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < m; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

BigInt binomial(Eigen::Index n, Eigen::Index k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (Eigen::Index i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r is C(n, i+1)·(i+1)!/(i+1)! at each step
  }
  return r;
}

Rational minor_det(const RatMat& m, const IndexSet& cols) {
  validate_index_set(cols, m.cols());
  if (static_cast<Eigen::Index>(cols.size()) != m.rows())
    throw DimensionError("minor: need exactly rows-many columns");
  return det_exact(select_columns(m, cols));
}

BigInt minor_det_int(const IntMat& m, const IndexSet& cols) {
  validate_index_set(cols, m.cols());
  if (static_cast<Eigen::Index>(cols.size()) != m.rows())
    throw DimensionError("minor: need exactly rows-many columns");
  Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic> sub(m.rows(), m.rows());
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(cols.size()); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      sub(i, j) = BigInt(m(i, cols[static_cast<std::size_t>(j)]));
  return det_exact_int(sub);
}

RatMat solve_exact(const RatMat& a, const RatMat& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw DimensionError("solve: matrix not square");
  if (b.rows() != n) throw DimensionError("solve: rhs row mismatch");

  RatMat m(n, n + b.cols());
  m.leftCols(n) = a;
  m.rightCols(b.cols()) = b;

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = k; i < n; ++i) {
      if (m(i, k) != Rational(0)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw RankError("solve: singular matrix");
    if (pivot != k) m.row(k).swap(m.row(pivot));
    const Rational inv_pivot = Rational(1) / m(k, k);
    m.row(k) *= inv_pivot;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || m(i, k) == Rational(0)) continue;
      const Rational factor = m(i, k);
      // row(i) -= factor * row(k), skipping the already-cleared block
      for (Eigen::Index j = k; j < m.cols(); ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return m.rightCols(b.cols());
}

Eigen::Index rank_exact(const RatMat& m) {
  RatMat w = m;
  const Eigen::Index rows = w.rows(), cols = w.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (w(i, c) != Rational(0)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) w.row(rank).swap(w.row(pivot));
    const Rational inv = Rational(1) / w(rank, c);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      if (w(i, c) == Rational(0)) continue;
      const Rational f = w(i, c) * inv;
      for (Eigen::Index j = c; j < cols; ++j) w(i, j) -= f * w(rank, j);
    }
    ++rank;
  }
  return rank;
}

RatMat right_inverse(const RatMat& a) {
  const Eigen::Index m = a.rows(), d = a.cols();
  if (d < m) throw DimensionError("right inverse: need at least rows-many columns");
  const RatMat gram = a * a.transpose();
  if (det_exact(gram) == Rational(0))
    throw RankError("right inverse: matrix is not of full row rank");
  RatMat identity = RatMat::Identity(m, m);
  return a.transpose() * solve_exact(gram, identity);
}

Rational gram_det(const RatMat& m) {
  if (m.rows() < m.cols()) throw DimensionError("gram det: matrix must be tall");
  return det_exact(RatMat(m.transpose() * m));
}

CauchyBinetResult cauchy_binet_check(const RatMat& a, const RatMat& aprime) {
  const Eigen::Index m = a.rows(), d = a.cols();
  if (aprime.rows() != d || aprime.cols() != m)
    throw DimensionError("cauchy-binet: shape mismatch");
  RatMat prod = a * aprime;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      if (prod(i, j) != Rational(i == j ? 1 : 0))
        throw PreconditionError("cauchy-binet: AA' is not the identity");

  Rational sum_cross(0), sum_sq(0);
  for_each_index_set(d, m, [&](const IndexSet& idx) {
    const Rational da = minor_det(a, idx);
    const Rational dp = det_exact(select_rows(aprime, idx));
    sum_cross += da * dp;
    sum_sq += dp * dp;
    return true;
  });
  const Rational gd = gram_det(aprime);
  CauchyBinetResult r;
  r.residual = abs(Rational(1) - sum_cross) + abs(gd - sum_sq);
  r.ok = r.residual == Rational(0);
  return r;
}

double min_singular_value(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  // Eigenvalues of the smaller Gram side; σ_min = √λ_min.
  Eigen::MatrixXd gram;
  if (m.rows() <= m.cols())
    gram = m * m.transpose();
  else
    gram = m.transpose() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  const double lambda_min = es.eigenvalues().minCoeff();
  return std::sqrt(std::max(0.0, lambda_min));
}

Eigen::VectorXd row_norms(const Eigen::MatrixXd& m) { return m.rowwise().norm(); }

}  // namespace isr
