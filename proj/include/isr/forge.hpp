#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isr/exact.hpp"

namespace isr {

struct PluckerCertificate {
  bool all_nonzero = false;
  std::vector<IndexSet> singular_sets;  // every size-m column set with zero minor
};

// Integer sensing matrix with entry bound k = max|a_ij| and an optional
// exact certificate that every m×m column minor is nonzero.
struct SensingMatrix {
  Eigen::Index m = 0;
  Eigen::Index d = 0;
  IntMat entries;
  long long k = 0;
  std::optional<PluckerCertificate> certificate;

  RatMat rational() const { return to_rational(entries); }
  Eigen::MatrixXd real() const { return to_real(entries); }
};

enum class GenModel { ternary, uniform_k, trivial };

struct GenSpec {
  Eigen::Index m = 0;
  Eigen::Index d = 0;
  long long k = 1;
  GenModel model = GenModel::ternary;
  std::uint64_t seed = 0;
};

// Entries i.i.d. from {−1, 0, 1} with probabilities (1/4, 1/2, 1/4).
// The all-zero draw (which would break the k = 1 field) is redrawn; any
// other degenerate draw is a legal output and simply fails verification.
SensingMatrix gen_ternary(Eigen::Index m, Eigen::Index d, std::uint64_t seed);

// Entries i.i.d. uniform on {−k,…,k}. The stored k is the realized
// max|entry| so the type invariant holds; the requested k parameterizes
// the distribution and the generation-time dimension check.
SensingMatrix gen_uniform_k(Eigen::Index m, Eigen::Index d, long long k, std::uint64_t seed);

// [I_m | 1]: the explicit construction with every Plücker coordinate
// nonzero at d = m + 1.
SensingMatrix trivial_construction(Eigen::Index m);

// Exact verification of all C(d,m) maximal minors; refuses to run past
// the enumeration cap rather than silently truncating.
PluckerCertificate verify_plucker(const SensingMatrix& a, std::uint64_t minor_cap = 10'000'000);

// ‖Ax‖ ≥ 1 for every nonzero x with ‖x‖₀ ≤ s ⟺ the Plücker certificate
// holds (a nonzero integer vector has norm ≥ 1).
bool norm_guarantee_holds(SensingMatrix& a, Eigen::Index s, std::uint64_t minor_cap = 10'000'000);

// Dimension ceiling (2k²+2)(m−1)+1 under which the random constructions
// are guaranteed to succeed with positive probability; requires m ≥ 3.
long long kbound_max_d(Eigen::Index m, long long k);

// ½·C(d−1, m−1): the entry bound below which a nonzero multilinear minor
// polynomial cannot vanish on the whole grid.
Rational schwartz_zippel_entry_bound(Eigen::Index m, Eigen::Index d);

// C(d,m)·p^m with p = 1/2 (ternary, k = 1) or 1/√(2k); the main term of
// the union-bound existence argument, computed in log space. Values < 1
// certify the probabilistic construction at those parameters.
double union_bound_feasibility(Eigen::Index m, Eigen::Index d, long long k);

SensingMatrix scale_matrix(const SensingMatrix& a, long long ell);

struct GenVerifiedResult {
  SensingMatrix matrix;
  int attempts = 0;  // draws consumed, including the certified one
};

// Rejection-sampling wrapper: redraw until a certified matrix appears or
// max_attempts runs out (then PreconditionError).
GenVerifiedResult gen_verified(const GenSpec& spec, int max_attempts = 100,
                               std::uint64_t minor_cap = 10'000'000);

}  // namespace isr
