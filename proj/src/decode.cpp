#include "isr/decode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "isr/errors.hpp"
#include "isr/exact.hpp"

namespace isr {

IntVec SparseIntSignal::dense() const {
  IntVec x = IntVec::Zero(dim);
  for (std::size_t i = 0; i < support.size(); ++i) x(support[i]) = values[i];
  return x;
}

SparseIntSignal SparseIntSignal::from_dense(const IntVec& x) {
  SparseIntSignal s;
  s.dim = x.size();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) != 0) {
      s.support.push_back(i);
      s.values.push_back(x(i));
    }
  }
  return s;
}

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::unique_within_radius:
      return "unique_within_radius";
    case DecodeStatus::best_effort:
      return "best_effort";
    case DecodeStatus::no_candidate:
      return "no_candidate";
  }
  return "?";
}

namespace {

constexpr double kTieEps = 1e-12;

bool lex_less(const IntVec& a, const IntVec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

DecodeResult finish(const Eigen::MatrixXd& a, const Eigen::VectorXd& y, const IntVec& x,
                    std::optional<IndexSet> lattice, DecodeStatus status) {
  DecodeResult out;
  out.estimate = SparseIntSignal::from_dense(x);
  out.residual_norm = (y - a * x.cast<double>()).norm();
  out.lattice_used = std::move(lattice);
  out.status = status;
  return out;
}

// Signal from a CVP hit: coefficients land on the lattice's source columns.
IntVec signal_of(const CvpResult& hit, const IndexSet& source, Eigen::Index d) {
  IntVec x = IntVec::Zero(d);
  for (std::size_t i = 0; i < source.size(); ++i) x(source[i]) = hit.coeffs(i);
  return x;
}

}  // namespace

DecodeResult reconstruct_cvp(const Eigen::MatrixXd& a, const Eigen::VectorXd& y, double alpha,
                             Eigen::Index s, Eigen::Index subset_size,
                             std::uint64_t node_cap) {
  if (y.size() != a.rows()) throw DimensionError("measurement length must match the rows of A");
  if (!(alpha > 0)) throw PreconditionError("alpha must be positive");
  const Eigen::Index d = a.cols();
  const Eigen::Index r = subset_size < 0 ? a.rows() : subset_size;
  const Eigen::Index s_eff = s < 0 ? r : s;
  if (s_eff < 1 || s_eff > r) throw PreconditionError("sparsity must satisfy 1 <= s <= subset size");

  const std::vector<LatticeBasis> lattices = submatrix_lattices(a, r);

  // Guarantee pass: radius alpha/2, strict acceptance, uniqueness
  // expected. The sparsity constraint rides inside the enumeration — the
  // nearest unconstrained point of a sublattice is usually dense, so a
  // post-filter would throw away exactly the candidates wanted here.
  const double guard = alpha / 2.0;
  std::optional<IntVec> accepted;
  std::optional<IndexSet> accepted_from;
  for (const LatticeBasis& lb : lattices) {
    const auto hit = cvp_enumerate(lb, y, guard, node_cap, s_eff);
    if (!hit || hit->distance >= guard) continue;
    IntVec x = signal_of(*hit, lb.source, d);
    if (!accepted) {
      accepted = std::move(x);
      accepted_from = lb.source;
    } else if ((accepted->array() != x.array()).any()) {
      throw CertificateError(
          "two distinct signals decode within alpha/2 = " + std::to_string(guard) +
          "; the norm certificate (or the supplied alpha) must be wrong");
    }
  }
  if (accepted) {
    return finish(a, y, *accepted, accepted_from, DecodeStatus::unique_within_radius);
  }

  // Noise beyond the guarantee: widen until any lattice produces a point,
  // then return the global nearest (distance ties to the lex-smaller
  // signal, matching the brute-force oracle).
  double radius = alpha;
  for (int round = 0; round < 40; ++round, radius *= 2) {
    double best_dist2 = std::numeric_limits<double>::infinity();
    std::optional<IntVec> best;
    std::optional<IndexSet> best_from;
    for (const LatticeBasis& lb : lattices) {
      const auto hit = cvp_enumerate(lb, y, radius, node_cap, s_eff);
      if (!hit) continue;
      IntVec x = signal_of(*hit, lb.source, d);
      const double d2 = hit->distance * hit->distance;
      if (d2 < best_dist2 - kTieEps) {
        best_dist2 = d2;
        best = std::move(x);
        best_from = lb.source;
      } else if (best && d2 <= best_dist2 + kTieEps && lex_less(x, *best)) {
        best = std::move(x);
        best_from = lb.source;
      }
    }
    if (best) return finish(a, y, *best, best_from, DecodeStatus::best_effort);
  }
  return finish(a, y, IntVec::Zero(d), std::nullopt, DecodeStatus::no_candidate);
}

DecodeResult brute_force_decode(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                Eigen::Index s, long long box,
                                std::uint64_t enumeration_cap) {
  if (b.size() != a.rows()) throw DimensionError("measurement length must match the rows of A");
  const Eigen::Index d = a.cols();
  if (s < 1 || s > d) throw PreconditionError("sparsity must satisfy 1 <= s <= d");
  if (box < 1) throw PreconditionError("box radius must be >= 1");

  BigInt total = 0;
  for (Eigen::Index j = 1; j <= s; ++j) {
    total += binomial(d, j) * pow(BigInt(2 * box), static_cast<unsigned>(j));
  }
  if (total > BigInt(enumeration_cap)) {
    throw ResourceError("search space holds " + to_string(total) +
                        " signals, over the cap of " + std::to_string(enumeration_cap));
  }

  // The zero signal is in the search space (empty support).
  IntVec best = IntVec::Zero(d);
  double best2 = b.squaredNorm();

  for (Eigen::Index j = 1; j <= s; ++j) {
    for_each_index_set(d, j, [&](const IndexSet& support) {
      std::vector<long long> vals(static_cast<std::size_t>(j), -box);
      do {
        Eigen::VectorXd image = Eigen::VectorXd::Zero(a.rows());
        for (Eigen::Index p = 0; p < j; ++p) {
          image += static_cast<double>(vals[static_cast<std::size_t>(p)]) *
                   a.col(support[static_cast<std::size_t>(p)]);
        }
        const double d2 = (b - image).squaredNorm();
        if (d2 <= best2 + kTieEps) {
          IntVec x = IntVec::Zero(d);
          for (Eigen::Index p = 0; p < j; ++p) {
            x(support[static_cast<std::size_t>(p)]) = vals[static_cast<std::size_t>(p)];
          }
          if (d2 < best2 - kTieEps || lex_less(x, best)) {
            best2 = std::min(best2, d2);
            best = std::move(x);
          }
        }
        // Odometer over nonzero values in {−box,…,−1,1,…,box}.
        std::size_t pos = 0;
        for (; pos < vals.size(); ++pos) {
          long long& v = vals[pos];
          ++v;
          if (v == 0) v = 1;
          if (v <= box) break;
          v = -box;
        }
        if (pos == vals.size()) return true;  // next support
      } while (true);
    });
  }
  return finish(a, b, best, std::nullopt, DecodeStatus::best_effort);
}

double recovery_guarantee_radius(double certificate_alpha) {
  if (!(certificate_alpha > 0)) throw PreconditionError("alpha must be positive");
  return certificate_alpha / 2.0;
}

}  // namespace isr
