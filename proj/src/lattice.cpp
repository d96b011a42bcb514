#include "isr/lattice.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "isr/errors.hpp"
#include "isr/exact.hpp"

namespace isr {

namespace {

constexpr double kSingularTol = 1e-9;
constexpr double kTieEps = 1e-12;

struct Enumerator {
  const Eigen::MatrixXd& r;        // r×r upper triangular, positive diagonal
  const Eigen::VectorXd& w;        // target in R-coordinates
  double budget2;                  // in-plane squared radius (fuzz included)
  std::uint64_t node_cap;
  Eigen::Index max_nonzero;        // admissible coefficient sparsity (rank = no limit)
  std::uint64_t nodes = 0;

  std::vector<long long> c;
  std::vector<long long> best_c;
  double best2 = std::numeric_limits<double>::infinity();
  bool found = false;

  explicit Enumerator(const Eigen::MatrixXd& r_, const Eigen::VectorXd& w_, double budget2_,
                      std::uint64_t cap, Eigen::Index max_nz)
      : r(r_),
        w(w_),
        budget2(budget2_),
        node_cap(cap),
        max_nonzero(max_nz),
        c(static_cast<std::size_t>(r_.cols())) {}

  void try_leaf(double total) {
    if (total < best2 - kTieEps) {
      best2 = total;
      best_c = c;
      found = true;
    } else if (total <= best2 + kTieEps && found &&
               std::lexicographical_compare(c.begin(), c.end(), best_c.begin(),
                                            best_c.end())) {
      best_c = c;
    }
  }

  // Depth-first over levels rank−1 … 0; used2 carries the squared
  // contribution of the already-fixed deeper levels, used_nz their
  // nonzero count. Once the sparsity budget is spent only v = 0 remains
  // admissible, so the interval loop collapses to a single probe.
  void descend(Eigen::Index level, double used2, Eigen::Index used_nz) {
    const double allowance = std::min(budget2, best2 + kTieEps) - used2;
    if (allowance < 0) return;
    const double diag = r(level, level);
    double offset = w(level);
    for (Eigen::Index j = level + 1; j < r.cols(); ++j) {
      offset -= r(level, j) * static_cast<double>(c[static_cast<std::size_t>(j)]);
    }
    const double halfwidth = std::sqrt(allowance);
    long long lo = static_cast<long long>(std::ceil((offset - halfwidth) / diag - 1e-12));
    long long hi = static_cast<long long>(std::floor((offset + halfwidth) / diag + 1e-12));
    if (used_nz >= max_nonzero) {
      if (lo > 0 || hi < 0) return;
      lo = 0;
      hi = 0;
    }
    for (long long v = lo; v <= hi; ++v) {
      if (++nodes > node_cap) {
        throw ResourceError("CVP enumeration exceeded the node cap of " +
                            std::to_string(node_cap));
      }
      const double gap = diag * static_cast<double>(v) - offset;
      const double total = used2 + gap * gap;
      if (total > std::min(budget2, best2 + kTieEps)) continue;
      const Eigen::Index nz = used_nz + (v != 0 ? 1 : 0);
      if (nz > max_nonzero) continue;
      c[static_cast<std::size_t>(level)] = v;
      if (level == 0) {
        try_leaf(total);
      } else {
        descend(level - 1, total, nz);
      }
    }
  }
};

}  // namespace

std::optional<CvpResult> cvp_enumerate(const LatticeBasis& lattice, const Eigen::VectorXd& y,
                                       double radius, std::uint64_t node_cap,
                                       Eigen::Index max_nonzero) {
  const Eigen::Index n = lattice.basis.rows();
  const Eigen::Index rank = lattice.basis.cols();
  if (rank < 1 || n < rank) throw DimensionError("lattice basis must be n×r with n >= r >= 1");
  if (y.size() != n) throw DimensionError("target vector length must match the basis rows");
  if (!(radius > 0)) throw PreconditionError("CVP radius must be positive");
  if (max_nonzero < 0) max_nonzero = rank;

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(lattice.basis);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, rank);
  Eigen::MatrixXd r = qr.matrixQR().topRows(rank).triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < rank; ++i) {
    if (std::abs(r(i, i)) < kSingularTol) {
      throw PreconditionError("lattice basis is numerically singular");
    }
    if (r(i, i) < 0) {  // normalize so the interval arithmetic can assume diag > 0
      r.row(i) *= -1.0;
      q.col(i) *= -1.0;
    }
  }

  const Eigen::VectorXd w = q.transpose() * y;
  // Squared distance splits into the in-plane part ‖Rc − w‖² plus the
  // fixed offset from the lattice's column span.
  const double rho2 = std::max(0.0, y.squaredNorm() - w.squaredNorm());
  const double rad2 = radius * radius * (1.0 + 1e-12);
  if (rho2 > rad2) return std::nullopt;

  Enumerator e(r, w, rad2 - rho2, node_cap, max_nonzero);
  e.descend(rank - 1, 0.0, 0);
  if (!e.found) return std::nullopt;

  CvpResult out;
  out.coeffs.resize(rank);
  for (Eigen::Index i = 0; i < rank; ++i) out.coeffs(i) = e.best_c[static_cast<std::size_t>(i)];
  out.point = lattice.basis * out.coeffs.cast<double>();
  out.distance = (y - out.point).norm();
  return out;
}

std::vector<LatticeBasis> submatrix_lattices(const Eigen::MatrixXd& a, Eigen::Index subset_size,
                                             std::uint64_t max_count) {
  const Eigen::Index d = a.cols();
  const Eigen::Index r = subset_size < 0 ? a.rows() : subset_size;
  if (r < 1 || r > d || r > a.rows()) {
    throw DimensionError("subset size must satisfy 1 <= r <= min(rows, cols)");
  }
  const BigInt count = binomial(d, r);
  if (count > BigInt(max_count)) {
    throw ResourceError("C(" + std::to_string(d) + "," + std::to_string(r) + ") = " +
                        to_string(count) + " sublattices exceed the cap of " +
                        std::to_string(max_count));
  }
  std::vector<LatticeBasis> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_index_set(d, r, [&](const IndexSet& cols) {
    LatticeBasis lb{select_columns(a, cols), cols};
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(lb.basis);
    for (Eigen::Index i = 0; i < r; ++i) {
      if (std::abs(qr.matrixQR()(i, i)) < kSingularTol) {
        std::string cols_text;
        for (Eigen::Index cidx : cols) cols_text += " " + std::to_string(cidx + 1);
        throw CertificateError("rank-deficient column subset{" + cols_text +
                               " }: the minor certificate does not hold");
      }
    }
    out.push_back(std::move(lb));
    return true;
  });
  return out;
}

}  // namespace isr
