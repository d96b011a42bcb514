#include "isr/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <thread>
#include <utility>

#include "isr/baselines.hpp"
#include "isr/errors.hpp"
#include "isr/rng.hpp"

namespace isr {
namespace {

long long draw_value(const SignalModel& model, Rng& rng) {
  if (model.kind == SignalModel::Kind::gaussian_rounded) {
    return std::llround(model.sigma * rng.gaussian());
  }
  const auto range = static_cast<std::uint64_t>(model.hi - model.lo);
  return model.lo + static_cast<long long>(rng.below(range + 1));
}

void validate_model(const SignalModel& model) {
  if (model.kind == SignalModel::Kind::gaussian_rounded) {
    if (!(model.sigma > 0.0)) {
      throw PreconditionError("gaussian_rounded signal model needs sigma > 0");
    }
    return;
  }
  if (model.hi < model.lo) {
    throw PreconditionError("uniform_int signal model needs lo <= hi");
  }
  if (model.lo == 0 && model.hi == 0) {
    throw PreconditionError("uniform_int signal model {0,...,0} has no nonzero values");
  }
}

struct MethodSpec {
  bool is_cvp = false;
  BaselineConfig baseline;
};

MethodSpec parse_method(const std::string& name) {
  MethodSpec spec;
  if (name == "cvp") {
    spec.is_cvp = true;
    return spec;
  }
  if (name == "l1") {
    throw PreconditionError(
        "method \"l1\" is reserved in the schema but not implemented");
  }
  std::string base = name;
  const std::string suffix = "_round";
  if (base.size() > suffix.size() &&
      base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
    base.resize(base.size() - suffix.size());
    spec.baseline.round_to_integer = true;
  }
  if (base == "omp") {
    spec.baseline.method = BaselineConfig::Method::omp;
  } else if (base == "ht") {
    spec.baseline.method = BaselineConfig::Method::hard_threshold;
  } else if (base == "ls") {
    spec.baseline.method = BaselineConfig::Method::least_squares;
  } else {
    throw PreconditionError("unknown method \"" + name + "\"");
  }
  return spec;
}

/* The decode matrix, certificate level alpha, and sublattice rank for a
   config's matrix, integer or algebraic.  Verifying the certificate here
   is what makes run_experiment abort before the first trial instead of
   producing curves for an uncertified matrix. */
struct ResolvedMatrix {
  Eigen::MatrixXd decode;
  double alpha = 0.0;
  Eigen::Index subset_size = 0;
  Eigen::Index d = 0;
};

ResolvedMatrix resolve_matrix(const ExperimentConfig& config) {
  ResolvedMatrix out;
  if (const auto* integer = std::get_if<SensingMatrix>(&config.matrix)) {
    SensingMatrix copy = *integer;
    if (!copy.certificate) {
      copy.certificate = verify_plucker(copy);
    }
    if (!copy.certificate->all_nonzero) {
      throw CertificateError("matrix \"" + config.matrix_id +
                             "\" failed certification; refusing to run trials");
    }
    out.decode = copy.real();
    out.alpha = 1.0;
    out.subset_size = copy.m;
    out.d = copy.d;
    return out;
  }
  const auto& algebraic = std::get<AlgebraicSensingMatrix>(config.matrix);
  /* Construction already required a certified B; the realified system
     inherits ‖Ax‖ ≥ √m for every nonzero x with ≤ m nonzero entries. */
  out.decode = realify(algebraic);
  out.alpha = std::sqrt(static_cast<double>(algebraic.m));
  out.subset_size = algebraic.m;
  out.d = algebraic.d;
  return out;
}

double format_safe(double v) { return std::isfinite(v) ? v : 0.0; }

}  // namespace

SparseIntSignal gen_signal(const SignalModel& model, Eigen::Index d, Eigen::Index s,
                           std::uint64_t seed) {
  if (d < 1) throw DimensionError("gen_signal: dimension must be positive");
  if (s < 1 || s > d) {
    throw PreconditionError("gen_signal: sparsity must satisfy 1 <= s <= d");
  }
  validate_model(model);
  Rng rng(seed);

  /* Partial Fisher–Yates: after s swaps the prefix is a uniform s-subset. */
  std::vector<Eigen::Index> pool(static_cast<std::size_t>(d));
  std::iota(pool.begin(), pool.end(), Eigen::Index{0});
  for (Eigen::Index i = 0; i < s; ++i) {
    const auto j = i + static_cast<Eigen::Index>(
                           rng.below(static_cast<std::uint64_t>(d - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  SparseIntSignal x;
  x.dim = d;
  x.support.assign(pool.begin(), pool.begin() + s);
  std::sort(x.support.begin(), x.support.end());

  x.values.reserve(static_cast<std::size_t>(s));
  for (Eigen::Index i = 0; i < s; ++i) {
    long long v = 0;
    do {
      v = draw_value(model, rng);
    } while (v == 0);
    x.values.push_back(v);
  }
  return x;
}

NoisyMeasurement add_noise(const Eigen::VectorXd& b, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw PreconditionError("add_noise: sigma must be nonnegative");
  Rng rng(seed);
  Eigen::VectorXd e(b.size());
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    e(i) = sigma * rng.gaussian();
  }
  return {b + e, e.norm()};
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.trials < 1) throw PreconditionError("run_experiment: trials must be >= 1");
  if (config.sigmas.empty()) throw PreconditionError("run_experiment: no sigma values");
  for (const double sigma : config.sigmas) {
    if (!(sigma >= 0.0)) throw PreconditionError("run_experiment: sigma must be >= 0");
  }
  if (config.methods.empty()) throw PreconditionError("run_experiment: no methods");
  std::vector<MethodSpec> specs;
  specs.reserve(config.methods.size());
  for (const auto& name : config.methods) {
    MethodSpec spec = parse_method(name);
    spec.baseline.s = config.s;
    specs.push_back(spec);
  }

  const ResolvedMatrix mat = resolve_matrix(config);
  validate_model(config.signal);
  if (config.s < 1 || config.s > mat.d) {
    throw PreconditionError("run_experiment: sparsity out of range for the matrix");
  }

  const std::size_t n_sigma = config.sigmas.size();
  const std::size_t n_methods = config.methods.size();
  const std::size_t n_trials = static_cast<std::size_t>(config.trials);
  ExperimentResult result;
  result.records.resize(n_sigma * n_trials * n_methods);

  /* One work item per (sigma, trial) cell; records land in preassigned
     slots so thread scheduling cannot reorder the output. */
  const std::size_t n_cells = n_sigma * n_trials;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  const auto worker = [&]() {
    try {
      for (;;) {
        const std::size_t cell = next.fetch_add(1);
        if (cell >= n_cells || failed.load()) return;
        const std::size_t sigma_idx = cell / n_trials;
        const std::size_t trial = cell % n_trials;
        const double sigma = config.sigmas[sigma_idx];

        const std::uint64_t signal_seed =
            derive_seed(config.master_seed, 2 * static_cast<std::uint64_t>(trial));
        const std::uint64_t noise_seed =
            derive_seed(config.master_seed, 2 * static_cast<std::uint64_t>(trial) + 1);
        const SparseIntSignal x = gen_signal(config.signal, mat.d, config.s, signal_seed);
        const IntVec x_dense = x.dense();
        const Eigen::VectorXd clean = mat.decode * x_dense.cast<double>();
        const NoisyMeasurement noisy = add_noise(clean, sigma, noise_seed);

        for (std::size_t mi = 0; mi < n_methods; ++mi) {
          TrialRecord rec;
          rec.trial = static_cast<int>(trial);
          rec.method = config.methods[mi];
          rec.sigma = sigma;
          rec.true_signal = x_dense;
          rec.noise_norm = noisy.noise_norm;

          const auto t0 = std::chrono::steady_clock::now();
          bool integer_estimate = false;
          IntVec integer_value;
          if (specs[mi].is_cvp) {
            const DecodeResult decoded = reconstruct_cvp(
                mat.decode, noisy.vector, mat.alpha, config.s, mat.subset_size);
            integer_value = decoded.estimate.dense();
            integer_estimate = true;
            rec.estimate = integer_value.cast<double>();
          } else {
            rec.estimate = run_baseline(mat.decode, noisy.vector, specs[mi].baseline);
            if (specs[mi].baseline.round_to_integer) {
              integer_value = round_to_integer(rec.estimate);
              integer_estimate = true;
            }
          }
          const auto t1 = std::chrono::steady_clock::now();
          rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

          rec.l2_error = (rec.estimate - x_dense.cast<double>()).norm();
          if (integer_estimate) {
            rec.exact_recovery = !(integer_value.array() != x_dense.array()).any();
          } else {
            rec.exact_recovery =
                (rec.estimate - x_dense.cast<double>()).lpNorm<Eigen::Infinity>() <= 1e-9;
          }

          if (specs[mi].is_cvp && noisy.noise_norm < mat.alpha / 2 &&
              !rec.exact_recovery) {
            throw CertificateError(
                "recovery guarantee violated: noise below alpha/2 but the "
                "lattice decoder missed the true signal (trial " +
                std::to_string(trial) + ", sigma " + std::to_string(sigma) + ")");
          }

          result.records[(sigma_idx * n_trials + trial) * n_methods + mi] =
              std::move(rec);
        }
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };

  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) std::rethrow_exception(failure);

  /* Aggregate in method-major order so curve files group naturally. */
  for (std::size_t mi = 0; mi < n_methods; ++mi) {
    for (std::size_t si = 0; si < n_sigma; ++si) {
      AggregateRow row;
      row.method = config.methods[mi];
      row.sigma = config.sigmas[si];
      row.trials = config.trials;
      double sum_l2 = 0.0;
      int exact = 0;
      for (std::size_t trial = 0; trial < n_trials; ++trial) {
        const TrialRecord& rec =
            result.records[(si * n_trials + trial) * n_methods + mi];
        sum_l2 += rec.l2_error;
        exact += rec.exact_recovery ? 1 : 0;
      }
      row.mean_l2_error = sum_l2 / static_cast<double>(n_trials);
      row.recovery_rate = static_cast<double>(exact) / static_cast<double>(n_trials);
      result.aggregates.push_back(std::move(row));
    }
  }
  return result;
}

void emit_csv(const std::vector<TrialRecord>& records, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) throw IoError("cannot open \"" + path + "\" for writing");
  std::fprintf(f, "trial,method,sigma,noise_norm,l2_error,exact,ms\n");
  for (const TrialRecord& rec : records) {
    std::fprintf(f, "%d,%s,%.10g,%.10g,%.10g,%d,%.3f\n", rec.trial,
                 rec.method.c_str(), rec.sigma, format_safe(rec.noise_norm),
                 format_safe(rec.l2_error), rec.exact_recovery ? 1 : 0, rec.ms);
  }
  const bool bad = std::ferror(f) != 0;
  std::fclose(f);
  if (bad) throw IoError("write failure on \"" + path + "\"");
}

void emit_aggregate_csv(const std::vector<AggregateRow>& rows, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) throw IoError("cannot open \"" + path + "\" for writing");
  std::fprintf(f, "method,sigma,trials,mean_l2_error,recovery_rate\n");
  for (const AggregateRow& row : rows) {
    std::fprintf(f, "%s,%.10g,%d,%.10g,%.10g\n", row.method.c_str(), row.sigma,
                 row.trials, format_safe(row.mean_l2_error), row.recovery_rate);
  }
  const bool bad = std::ferror(f) != 0;
  std::fclose(f);
  if (bad) throw IoError("write failure on \"" + path + "\"");
}

}  // namespace isr
