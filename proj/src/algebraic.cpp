#include "isr/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "isr/errors.hpp"
#include "isr/exact.hpp"

namespace isr {

using RealHP = boost::multiprecision::cpp_bin_float_50;

AlgebraicSensingMatrix build_algebraic_matrix(const SensingMatrix& bt,
                                              const NumberFieldSpec& field,
                                              double root_precision) {
  if (!bt.certificate || !bt.certificate->all_nonzero) {
    throw PreconditionError(
        "B needs a passing minor certificate before the field construction");
  }
  if (field.degree() != bt.m) {
    throw DimensionError("field degree must match the number of rows of B^T");
  }
  const Eigen::Index m = bt.m;
  const Eigen::Index d = bt.d;

  AlgebraicSensingMatrix a;
  a.m = m;
  a.d = d;
  a.b = bt.entries.transpose();
  a.field = field;
  a.roots = conjugate_roots(field, root_precision);

  // Row i is (σ_i(α_1), …, σ_i(α_d)) with α_j = Σ_l B(j,l) θ^l; evaluate
  // with the high-precision roots, narrow once at the end.
  a.entries.resize(m, d);
  double max_mod = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const ComplexHP& theta = a.roots.roots[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < d; ++j) {
      ComplexHP acc(0);
      ComplexHP power(1);
      for (Eigen::Index l = 0; l < m; ++l) {
        acc += ComplexHP(RealHP(bt.entries(l, j)), RealHP(0)) * power;
        power *= theta;
      }
      const std::complex<double> e(acc.real().convert_to<double>(),
                                   acc.imag().convert_to<double>());
      a.entries(i, j) = e;
      max_mod = std::max(max_mod, std::abs(e));
    }
  }
  a.entry_bound = max_mod;

  // Provable ceiling: each entry is a sum of m terms bounded by |B|·|θ|^{m−1}.
  long long b_max = 0;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      b_max = std::max(b_max, std::llabs(bt.entries(i, j)));
  double theta_max = 0.0;
  for (const std::complex<double>& t : a.roots.roots_double()) {
    theta_max = std::max(theta_max, std::abs(t));
  }
  const double ceiling = static_cast<double>(m) * static_cast<double>(b_max) *
                         std::pow(std::max(theta_max, 1.0), static_cast<double>(m - 1));
  if (a.entry_bound > ceiling + 1e-9) {
    throw CertificateError("entry modulus " + std::to_string(a.entry_bound) +
                           " exceeds the provable ceiling " + std::to_string(ceiling));
  }
  return a;
}

BigInt norm_form_value(const NumberFieldSpec& field, const IntMat& bt, const IntVec& x) {
  if (bt.cols() != x.size()) throw DimensionError("B^T columns must match the vector length");
  if (static_cast<Eigen::Index>(field.minpoly.size()) != bt.rows() + 1) {
    throw DimensionError("field degree must match the number of rows of B^T");
  }
  // g(t) = Σ_j (B^T x)_j t^{j-1}; its coefficient list lowest-first IS B^T x.
  Poly g(static_cast<std::size_t>(bt.rows()), BigInt(0));
  for (Eigen::Index r = 0; r < bt.rows(); ++r) {
    BigInt acc = 0;
    for (Eigen::Index c = 0; c < bt.cols(); ++c) {
      acc += BigInt(bt(r, c)) * BigInt(x(c));
    }
    g[static_cast<std::size_t>(r)] = acc;
  }
  if (poly_degree(g) < 0) return 0;  // L₁(x) = 0, norm 0
  return resultant(field.ascending(), g);
}

BigInt norm_form_value(const AlgebraicSensingMatrix& a, const IntVec& x) {
  const IntMat bt = a.b.transpose();
  return norm_form_value(a.field, bt, x);
}

std::complex<double> norm_product_float(const AlgebraicSensingMatrix& a, const IntVec& x) {
  if (x.size() != a.d) throw DimensionError("vector length must match d");
  std::complex<double> prod(1.0, 0.0);
  const Eigen::VectorXcd image = a.entries * x.cast<std::complex<double>>();
  for (Eigen::Index i = 0; i < a.m; ++i) prod *= image(i);
  return prod;
}

namespace {

// Count Σ_{j=1..s} C(d,j)·(2L)^j without overflow drama.
BigInt box_point_count(Eigen::Index d, Eigen::Index s, long long box) {
  BigInt total = 0;
  for (Eigen::Index j = 1; j <= s; ++j) {
    total += binomial(d, j) * pow(BigInt(2 * box), static_cast<unsigned>(j));
  }
  return total;
}

// Odometer over the nonzero values {−L,…,−1,1,…,L} at a fixed support.
bool advance_values(std::vector<long long>& vals, long long box) {
  for (std::size_t i = 0; i < vals.size(); ++i) {
    long long& v = vals[i];
    ++v;
    if (v == 0) v = 1;  // skip zero: supports enumerate exact sparsity
    if (v <= box) return true;
    v = -box;
  }
  return false;
}

}  // namespace

NormBoundReport verify_norm_lower_bound(const AlgebraicSensingMatrix& a, Eigen::Index s,
                                        long long box, std::uint64_t enumeration_cap,
                                        double tol) {
  if (s < 1 || s > a.m) throw PreconditionError("sparsity level must satisfy 1 <= s <= m");
  if (box < 1) throw PreconditionError("box radius must be >= 1");
  const BigInt count = box_point_count(a.d, s, box);
  if (count > BigInt(enumeration_cap)) {
    throw ResourceError("box holds " + to_string(count) +
                        " vectors, over the enumeration cap of " +
                        std::to_string(enumeration_cap));
  }

  NormBoundReport report;
  report.min_norm = std::numeric_limits<double>::infinity();
  report.witness = IntVec::Zero(a.d);

  for (Eigen::Index j = 1; j <= s; ++j) {
    for_each_index_set(a.d, j, [&](const IndexSet& support) {
      std::vector<long long> vals(static_cast<std::size_t>(j), -box);
      do {
        Eigen::VectorXcd image = Eigen::VectorXcd::Zero(a.m);
        for (Eigen::Index p = 0; p < j; ++p) {
          image += static_cast<double>(vals[static_cast<std::size_t>(p)]) *
                   a.entries.col(support[static_cast<std::size_t>(p)]);
        }
        ++report.points;
        const double n = image.norm();
        if (n < report.min_norm) {
          report.min_norm = n;
          report.witness.setZero();
          for (Eigen::Index p = 0; p < j; ++p) {
            report.witness(support[static_cast<std::size_t>(p)]) =
                vals[static_cast<std::size_t>(p)];
          }
        }
      } while (advance_values(vals, box));
      return true;
    });
  }

  const double required = std::sqrt(static_cast<double>(a.m)) - tol;
  if (report.min_norm < required) {
    throw CertificateError("norm guarantee violated: min ‖Ax‖ = " +
                           std::to_string(report.min_norm) + " < " + std::to_string(required));
  }
  return report;
}

bool nonzero_coordinates_check(const AlgebraicSensingMatrix& a, const IntVec& x, double tol) {
  if (x.size() != a.d) throw DimensionError("vector length must match d");
  Eigen::Index support = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) != 0) ++support;
  }
  if (support == 0) return false;  // the guarantee is about nonzero vectors
  if (support > a.m) {
    throw PreconditionError("coordinate guarantee only covers ‖x‖₀ <= m");
  }
  const Eigen::VectorXcd image = a.entries * x.cast<std::complex<double>>();
  for (Eigen::Index i = 0; i < a.m; ++i) {
    if (std::abs(image(i)) <= tol) return false;
  }
  return true;
}

Eigen::MatrixXd realify(const Eigen::MatrixXcd& a) {
  Eigen::MatrixXd out(2 * a.rows(), a.cols());
  out.topRows(a.rows()) = a.real();
  out.bottomRows(a.rows()) = a.imag();
  return out;
}

Eigen::MatrixXd realify(const AlgebraicSensingMatrix& a) { return realify(a.entries); }

}  // namespace isr
