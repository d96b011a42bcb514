#include "isr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "isr/errors.hpp"

namespace isr {

BoundReport sparse_minkowski_bound(const RatMat& a, const std::string& matrix_id) {
  const Eigen::Index m = a.rows();
  const RatMat aprime = right_inverse(a);  // throws RankError when rank < m
  BoundReport report;
  report.matrix_id = matrix_id;
  report.gram_det = gram_det(aprime);
  for (Eigen::Index i = 0; i < m; ++i) report.index_set.push_back(i);
  // 2m-th root in log space; the gram determinant spans hundreds of bits
  // for entry magnitudes like 5·10⁴.
  const double log2_g = log2_abs(report.gram_det);
  report.minkowski_bound =
      std::exp2(0.5 * std::log2(static_cast<double>(m)) - log2_g / (2.0 * static_cast<double>(m)));
  report.naive_bound = naive_bound(a);
  return report;
}

double naive_bound(const RatMat& a) {
  Rational mx(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Rational v = abs(a(i, j));
      if (v > mx) mx = v;
    }
  }
  return std::sqrt(static_cast<double>(a.rows())) * mx.to_double();
}

bool linear_forms_feasible(const LinearFormsBox& box) {
  const Eigen::Index d = box.b.rows();
  if (box.b.cols() != d) throw DimensionError("linear-forms matrix must be square");
  if (static_cast<Eigen::Index>(box.c.size()) != d) {
    throw DimensionError("need one box constant per linear form");
  }
  for (const Rational& ci : box.c) {
    if (!(ci > Rational(0))) throw PreconditionError("box constants must be positive");
  }
  validate_index_set(box.index_set, d);
  if (box.index_set.empty()) throw PreconditionError("index set must be nonempty");
  if (det_exact(box.b) == Rational(0)) throw RankError("linear-forms matrix is singular");

  RatMat identity = RatMat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) identity(i, i) = Rational(1);
  const RatMat binv = solve_exact(box.b, identity);
  const Rational g = gram_det(select_columns(binv, box.index_set));

  Rational prod(1);
  for (Eigen::Index i : box.index_set) prod *= box.c[static_cast<std::size_t>(i)];
  // prod ≥ |g|^{−1/2}  ⟺  prod²·|g| ≥ 1  (all quantities positive).
  return prod * prod * abs(g) >= Rational(1);
}

namespace {

BigInt sparse_box_count(Eigen::Index d, Eigen::Index s, long long box) {
  BigInt total = 0;
  for (Eigen::Index j = 1; j <= s; ++j) {
    total += binomial(d, j) * pow(BigInt(2 * box), static_cast<unsigned>(j));
  }
  return total;
}

// Value odometer in lexicographic order: the last coordinate moves
// fastest, each coordinate running −box,…,−1,1,…,box.
bool advance_lex(std::vector<long long>& vals, long long box) {
  for (std::size_t i = vals.size(); i-- > 0;) {
    long long& v = vals[i];
    ++v;
    if (v == 0) v = 1;
    if (v <= box) return true;
    v = -box;
  }
  return false;
}

// Shared sweep: supports lexicographic (sizes 1..s), values lexicographic
// within each support; returns the first x the predicate accepts.
template <typename Pred>
std::optional<IntVec> first_sparse_point(Eigen::Index d, Eigen::Index s, long long box,
                                         std::uint64_t cap, Pred&& accept) {
  const BigInt total = sparse_box_count(d, s, box);
  if (total > BigInt(cap)) {
    throw ResourceError("witness box holds " + to_string(total) +
                        " points, over the cap of " + std::to_string(cap));
  }
  std::optional<IntVec> found;
  for (Eigen::Index j = 1; j <= s && !found; ++j) {
    for_each_index_set(d, j, [&](const IndexSet& support) {
      std::vector<long long> vals(static_cast<std::size_t>(j), -box);
      do {
        IntVec x = IntVec::Zero(d);
        for (Eigen::Index p = 0; p < j; ++p) {
          x(support[static_cast<std::size_t>(p)]) = vals[static_cast<std::size_t>(p)];
        }
        if (accept(x)) {
          found = std::move(x);
          return false;  // stop the support enumeration
        }
      } while (advance_lex(vals, box));
      return true;
    });
  }
  return found;
}

}  // namespace

std::optional<SparseIntSignal> find_sparse_witness(const Eigen::MatrixXd& a, double bound,
                                                   long long max_coeff,
                                                   std::uint64_t enumeration_cap) {
  if (!(bound > 0)) throw PreconditionError("witness bound must be positive");
  if (max_coeff < 1) throw PreconditionError("witness box must be >= 1");
  const double limit = bound * (1.0 + 1e-9);
  const double limit2 = limit * limit;
  const Eigen::Index d = a.cols();
  const Eigen::Index s = a.rows();

  /* Supports in lexicographic order, prefix values in lexicographic
     order, and the innermost coordinate solved instead of scanned:
     ‖w + v·c‖ ≤ limit is a quadratic in v, so the qualifying v form an
     integer interval. Visiting that interval in ascending order keeps
     the result identical to the plain lexicographic sweep while cutting
     a factor ~2·max_coeff from the work. The cap counts candidates
     actually visited (prefixes plus interval points). */
  std::uint64_t visited = 0;
  const auto charge = [&](std::uint64_t n) {
    visited += n;
    if (visited > enumeration_cap) {
      throw ResourceError("witness enumeration passed the cap of " +
                          std::to_string(enumeration_cap) + " candidates");
    }
  };

  std::optional<IntVec> found;
  for (Eigen::Index j = 1; j <= s && !found; ++j) {
    for_each_index_set(d, j, [&](const IndexSet& support) {
      const std::size_t prefix_len = static_cast<std::size_t>(j) - 1;
      std::vector<long long> vals(prefix_len, -max_coeff);
      const Eigen::VectorXd last_col = a.col(support[prefix_len]);
      const double a2 = last_col.squaredNorm();
      do {
        charge(1);
        Eigen::VectorXd w = Eigen::VectorXd::Zero(a.rows());
        for (std::size_t p = 0; p < prefix_len; ++p) {
          w += static_cast<double>(vals[p]) * a.col(support[p]);
        }
        long long lo = -max_coeff;
        long long hi = max_coeff;
        if (a2 > 0) {
          const double b2 = w.dot(last_col);
          const double c2 = w.squaredNorm() - limit2;
          const double disc = b2 * b2 - a2 * c2;
          if (disc < 0) continue;
          const double root = std::sqrt(disc);
          lo = std::max(lo, static_cast<long long>(std::ceil((-b2 - root) / a2 - 1e-9)));
          hi = std::min(hi, static_cast<long long>(std::floor((-b2 + root) / a2 + 1e-9)));
        } else if (w.norm() > limit) {
          continue;
        }
        for (long long v = lo; v <= hi && !found; ++v) {
          if (v == 0) continue;
          charge(1);
          IntVec x = IntVec::Zero(d);
          for (std::size_t p = 0; p < prefix_len; ++p) x(support[p]) = vals[p];
          x(support[prefix_len]) = v;
          if ((a * x.cast<double>()).norm() <= limit) found = x;
        }
        if (found) return false;  // stop the support enumeration
      } while (advance_lex(vals, max_coeff));
      return true;
    });
  }
  if (!found) return std::nullopt;
  return SparseIntSignal::from_dense(*found);
}

long long default_witness_box(const RatMat& a, double bound) {
  const RatMat aprime = right_inverse(a);
  double max_col = 0.0;
  for (Eigen::Index j = 0; j < aprime.cols(); ++j) {
    Rational sq(0);
    for (Eigen::Index i = 0; i < aprime.rows(); ++i) sq += aprime(i, j) * aprime(i, j);
    max_col = std::max(max_col, std::sqrt(sq.to_double()));
  }
  return static_cast<long long>(std::ceil(bound * max_col)) + 5;
}

bool proposition_volume_check(const RatMat& a, const IndexSet& index_set) {
  if (a.rows() != a.cols()) throw DimensionError("volume check expects a square matrix");
  validate_index_set(index_set, a.cols());
  if (index_set.empty()) throw PreconditionError("index set must be nonempty");
  if (det_exact(a) == Rational(0)) throw PreconditionError("matrix must be nonsingular");
  const Rational g = gram_det(select_columns(a, index_set));
  return abs(g) >= pow(Rational(4), static_cast<unsigned>(index_set.size()));
}

bool parallelepiped_contains(const RatMat& a, const IntVec& x) {
  if (a.rows() != a.cols() || a.rows() != x.size()) {
    throw DimensionError("containment test expects a square matrix matching x");
  }
  RatMat rhs(x.size(), 1);
  for (Eigen::Index i = 0; i < x.size(); ++i) rhs(i, 0) = Rational(x(i));
  // The parallelepiped is the image of the side-1 cube centered at the
  // origin, so membership is ‖A⁻¹x‖_∞ ≤ 1/2, decided exactly.
  const RatMat u = solve_exact(a, rhs);
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    if (abs(u(i, 0)) > Rational(1, 2)) return false;
  }
  return true;
}

std::optional<IntVec> find_parallelepiped_point(const RatMat& a, Eigen::Index s, long long box,
                                                std::uint64_t enumeration_cap) {
  if (s < 1 || s > a.cols()) throw PreconditionError("sparsity must satisfy 1 <= s <= d");
  if (box < 1) throw PreconditionError("search box must be >= 1");
  if (det_exact(a) == Rational(0)) throw PreconditionError("matrix must be nonsingular");
  return first_sparse_point(a.cols(), s, box, enumeration_cap,
                            [&](const IntVec& x) { return parallelepiped_contains(a, x); });
}

}  // namespace isr
