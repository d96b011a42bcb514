#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "isr/eigen_support.hpp"
#include "isr/errors.hpp"

namespace isr {

// Fraction-free (Bareiss) determinant. Works over any exact integral
// domain scalar — BigInt and Rational here; every division is exact by
// construction of the algorithm. Pivoting picks the first nonzero entry,
// which keeps the routine deterministic over exact scalars.
template <typename Scalar>
Scalar det_bareiss(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DimensionError("det: matrix not square");
  if (n == 0) return Scalar(1);

  int sign = 1;
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index pivot = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (m(i, k) != Scalar(0)) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

Rational det_exact(const RatMat& m);
BigInt det_exact_int(const Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>& m);

// Checked index-set helper: sorted, distinct, within [0, d).
void validate_index_set(const IndexSet& cols, Eigen::Index d);

// All size-m subsets of {0,…,d−1} in lexicographic order, streamed through
// a callback; returns false if the callback stopped the enumeration.
bool for_each_index_set(Eigen::Index d, Eigen::Index m,
                        const std::function<bool(const IndexSet&)>& fn);

BigInt binomial(Eigen::Index n, Eigen::Index k);

template <typename Mat>
Mat select_columns(const Mat& m, const IndexSet& cols) {
  Mat out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = m.col(cols[j]);
  return out;
}

template <typename Mat>
Mat select_rows(const Mat& m, const IndexSet& rows) {
  Mat out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(rows[i]);
  return out;
}

// Plücker coordinate: determinant of the column-selected square submatrix.
Rational minor_det(const RatMat& m, const IndexSet& cols);
BigInt minor_det_int(const IntMat& m, const IndexSet& cols);

// Solve A·X = B exactly for square nonsingular A (Gauss–Jordan over ℚ).
RatMat solve_exact(const RatMat& a, const RatMat& b);

Eigen::Index rank_exact(const RatMat& m);

// Minimum-norm right inverse Aᵀ(AAᵀ)⁻¹ of a full-row-rank m×d matrix.
// A·right_inverse(A) = I_m exactly.
RatMat right_inverse(const RatMat& a);

// det(MᵀM): the squared m-volume of the parallelepiped spanned by the
// columns of the tall d×m matrix M. Nonnegative; zero iff rank(M) < cols.
Rational gram_det(const RatMat& m);

struct CauchyBinetResult {
  bool ok = false;
  Rational residual;  // |1 − Σ_J det(A_J)·det(A′_J)| + |det(A′ᵀA′) − Σ_J det(A′_J)²|
};

// Verifies both identities of the expansion of 1 = det(AA′) and of
// det(A′ᵀA′) as sums over maximal minors. Exact; requires AA′ = I.
CauchyBinetResult cauchy_binet_check(const RatMat& a, const RatMat& aprime);

// Smallest singular value via the eigenvalues of the smaller Gram matrix,
// double precision. Reporting only — never used for guarantees.
double min_singular_value(const Eigen::MatrixXd& m);

Eigen::VectorXd row_norms(const Eigen::MatrixXd& m);

}  // namespace isr
