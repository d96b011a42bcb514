#pragma once

#include <string>
#include <variant>
#include <vector>

#include "isr/algebraic.hpp"
#include "isr/decode.hpp"
#include "isr/forge.hpp"

namespace isr {

struct SignalModel {
  enum class Kind { gaussian_rounded, uniform_int };
  Kind kind = Kind::uniform_int;
  double sigma = 5.0;      // gaussian_rounded: N(0, σ²) then rounded
  long long lo = -5;       // uniform_int: {lo,…,hi}
  long long hi = 5;
};

// Random s-sparse integer signal: support uniform over the C(d,s) subsets,
// values drawn per model with zeros resampled so ‖x‖₀ = s exactly.
SparseIntSignal gen_signal(const SignalModel& model, Eigen::Index d, Eigen::Index s,
                           std::uint64_t seed);

struct NoisyMeasurement {
  Eigen::VectorXd vector;
  double noise_norm = 0.0;
};

// b + e with e i.i.d. N(0, σ²) per coordinate; the realized ‖e‖ comes
// back so guarantees can be checked against actual noise rather than σ.
NoisyMeasurement add_noise(const Eigen::VectorXd& b, double sigma, std::uint64_t seed);

// Methods: "cvp" decodes by the sublattice sweep; "omp", "ht", "ls" are
// the baselines (suffix "_round" adds integer rounding). "l1" is reserved
// in the schema but rejected: it needs an LP solver and diverges under
// noise on these matrices.
struct ExperimentConfig {
  std::variant<SensingMatrix, AlgebraicSensingMatrix> matrix;
  std::string matrix_id = "matrix";
  SignalModel signal;
  Eigen::Index s = 1;
  std::vector<double> sigmas = {0.0};
  std::vector<std::string> methods = {"cvp"};
  int trials = 100;
  std::uint64_t master_seed = 0;
  int threads = 1;
};

struct TrialRecord {
  int trial = 0;
  std::string method;
  double sigma = 0.0;
  IntVec true_signal;
  Eigen::VectorXd estimate;
  double noise_norm = 0.0;
  double l2_error = 0.0;
  bool exact_recovery = false;
  double ms = 0.0;
};

struct AggregateRow {
  std::string method;
  double sigma = 0.0;
  int trials = 0;
  double mean_l2_error = 0.0;
  double recovery_rate = 0.0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  std::vector<AggregateRow> aggregates;
};

// Full factorial sweep σ × trial × method. The signal and the Gaussian
// noise direction are drawn per trial (seeds derived from the master
// seed), shared across σ values and methods, so curves are coupled and
// the whole run is reproducible. The matrix certificate is verified
// before any trial; a trial where the noise landed strictly inside
// alpha/2 and "cvp" failed to recover exactly aborts the run — that
// combination contradicts the recovery theorem, so it is an error, never
// a data point.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Header "trial,method,sigma,noise_norm,l2_error,exact,ms", one row per
// record, newline-terminated. Everything except ms is deterministic for
// a fixed config and master seed.
void emit_csv(const std::vector<TrialRecord>& records, const std::string& path);

// Plot data: "method,sigma,trials,mean_l2_error,recovery_rate".
void emit_aggregate_csv(const std::vector<AggregateRow>& rows, const std::string& path);

}  // namespace isr
