#include "isr/forge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>

#include "isr/errors.hpp"
#include "isr/rng.hpp"

namespace isr {

namespace {

void validate_shape(Eigen::Index m, Eigen::Index d) {
  if (m < 1) throw PreconditionError("sensing matrix needs at least one row");
  if (d < m) throw DimensionError("sensing matrix must be wide: d >= m");
}

// The random models are only backed by an existence argument up to the
// dimension ceiling, so the generators refuse to run past it.
void check_dimension_ceiling(Eigen::Index m, Eigen::Index d, long long k) {
  if (m < 3) return;  // the ceiling formula is only defined for m >= 3
  const long long cap = kbound_max_d(m, k);
  if (d > cap) {
    throw PreconditionError("d = " + std::to_string(d) + " exceeds the k = " +
                            std::to_string(k) + " dimension ceiling " +
                            std::to_string(cap) + " for m = " + std::to_string(m));
  }
}

}  // namespace

SensingMatrix gen_ternary(Eigen::Index m, Eigen::Index d, std::uint64_t seed) {
  validate_shape(m, d);
  check_dimension_ceiling(m, d, 1);
  Rng rng(seed);
  SensingMatrix a;
  a.m = m;
  a.d = d;
  a.k = 1;
  a.entries.resize(m, d);
  bool all_zero = true;
  do {
    all_zero = true;
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        // {0,1,2,3} -> {-1, 0, 0, +1}: probabilities (1/4, 1/2, 1/4).
        const std::uint64_t u = rng.below(4);
        const long long v = (u == 0) ? -1 : (u == 3) ? 1 : 0;
        a.entries(i, j) = v;
        if (v != 0) all_zero = false;
      }
    }
    // The all-zero matrix is excluded from the model; redraw it entirely.
  } while (all_zero);
  return a;
}

SensingMatrix gen_uniform_k(Eigen::Index m, Eigen::Index d, long long k, std::uint64_t seed) {
  validate_shape(m, d);
  if (k < 1) throw PreconditionError("uniform model needs k >= 1");
  check_dimension_ceiling(m, d, k);
  Rng rng(seed);
  SensingMatrix a;
  a.m = m;
  a.d = d;
  a.entries.resize(m, d);
  long long realized = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const long long v = rng.uniform_int(-k, k);
      a.entries(i, j) = v;
      realized = std::max(realized, std::llabs(v));
    }
  }
  // Store the realized entry bound so the invariant k = max|a_ij| holds
  // even when the draw never hits ±k.
  a.k = realized;
  return a;
}

SensingMatrix trivial_construction(Eigen::Index m) {
  if (m < 1) throw PreconditionError("sensing matrix needs at least one row");
  SensingMatrix a;
  a.m = m;
  a.d = m + 1;
  a.k = 1;
  a.entries = IntMat::Zero(m, m + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    a.entries(i, i) = 1;
    a.entries(i, m) = 1;
  }
  // Every maximal minor is 1: a column set either is the identity block or
  // swaps one e_i for the all-ones column, and expanding 1 = sum_j e_j by
  // multilinearity kills every duplicate-column term except det(I).
  a.certificate = PluckerCertificate{true, {}};
  return a;
}

PluckerCertificate verify_plucker(const SensingMatrix& a, std::uint64_t minor_cap) {
  validate_shape(a.m, a.d);
  const BigInt count = binomial(a.d, a.m);
  if (count > BigInt(minor_cap)) {
    throw ResourceError("C(" + std::to_string(a.d) + "," + std::to_string(a.m) +
                        ") = " + to_string(count) + " maximal minors exceed the cap of " +
                        std::to_string(minor_cap));
  }
  using BigIntMat = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
  BigIntMat wide(a.m, a.d);
  for (Eigen::Index i = 0; i < a.m; ++i)
    for (Eigen::Index j = 0; j < a.d; ++j) wide(i, j) = BigInt(a.entries(i, j));

  PluckerCertificate cert;
  for_each_index_set(a.d, a.m, [&](const IndexSet& cols) {
    if (det_bareiss<BigInt>(select_columns(wide, cols)) == 0) {
      cert.singular_sets.push_back(cols);
    }
    return true;
  });
  cert.all_nonzero = cert.singular_sets.empty();
  return cert;
}

bool norm_guarantee_holds(SensingMatrix& a, Eigen::Index s, std::uint64_t minor_cap) {
  if (s < 1 || s > a.m) {
    throw PreconditionError("sparsity level must satisfy 1 <= s <= m");
  }
  if (!a.certificate) a.certificate = verify_plucker(a, minor_cap);
  // Nonzero maximal minors make every s-sparse integer kernel vector
  // impossible, and a surviving nonzero integer image has norm >= 1.
  return a.certificate->all_nonzero;
}

long long kbound_max_d(Eigen::Index m, long long k) {
  if (m < 3) throw PreconditionError("dimension ceiling needs m >= 3");
  if (k < 1) throw PreconditionError("dimension ceiling needs k >= 1");
  const BigInt cap = (BigInt(2) * k * k + 2) * (m - 1) + 1;
  if (cap > BigInt(std::numeric_limits<long long>::max())) {
    throw PreconditionError("dimension ceiling overflows long long");
  }
  return static_cast<long long>(cap);
}

Rational schwartz_zippel_entry_bound(Eigen::Index m, Eigen::Index d) {
  validate_shape(m, d);
  return Rational(binomial(d - 1, m - 1)) / Rational(2);
}

double union_bound_feasibility(Eigen::Index m, Eigen::Index d, long long k) {
  validate_shape(m, d);
  if (k < 1) throw PreconditionError("union bound needs k >= 1");
  // log C(d,m) + m log p, evaluated in log space so d in the hundreds works.
  const double log_choose = std::lgamma(static_cast<double>(d) + 1.0) -
                            std::lgamma(static_cast<double>(m) + 1.0) -
                            std::lgamma(static_cast<double>(d - m) + 1.0);
  const double log_p =
      (k == 1) ? std::log(0.5) : -0.5 * std::log(2.0 * static_cast<double>(k));
  return std::exp(log_choose + static_cast<double>(m) * log_p);
}

SensingMatrix scale_matrix(const SensingMatrix& a, long long ell) {
  if (ell == 0) throw PreconditionError("scaling by zero destroys the minor certificate");
  SensingMatrix out = a;
  out.entries *= ell;
  out.k = a.k * std::llabs(ell);
  // Maximal minors scale by ell^m != 0, so the certificate carries over.
  return out;
}

GenVerifiedResult gen_verified(const GenSpec& spec, int max_attempts, std::uint64_t minor_cap) {
  if (max_attempts < 1) throw PreconditionError("need at least one generation attempt");
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    const std::uint64_t seed = derive_seed(spec.seed, static_cast<std::uint64_t>(attempt - 1));
    SensingMatrix a;
    switch (spec.model) {
      case GenModel::ternary:
        a = gen_ternary(spec.m, spec.d, seed);
        break;
      case GenModel::uniform_k:
        a = gen_uniform_k(spec.m, spec.d, spec.k, seed);
        break;
      case GenModel::trivial:
        return {trivial_construction(spec.m), attempt};
    }
    PluckerCertificate cert = verify_plucker(a, minor_cap);
    if (cert.all_nonzero) {
      a.certificate = std::move(cert);
      return {std::move(a), attempt};
    }
  }
  throw PreconditionError("no draw passed minor verification in " +
                          std::to_string(max_attempts) + " attempts");
}

}  // namespace isr
