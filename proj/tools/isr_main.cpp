/*
 * isr — command-line front end for the integer sparse-recovery toolkit.
 *
 * Subcommand groups mirror the library modules:
 *
 *   forge gen|verify|bounds    integer sensing matrices and their exact
 *                              minor certificates
 *   algmat build|verify        number-field lift of a certified matrix
 *   decode cvp|brute|baseline  reconstruction from a measurement file
 *   bounds report|witness      determinantal short-vector bounds
 *   bench run                  seeded experiment sweeps with CSV output
 *
 * Matrices, fields, and experiment configs travel as JSON files;
 * measurements are plain decimal files, one entry per line. Exit codes:
 * 0 success, 2 certificate violation, 3 enumeration cap exceeded,
 * 1 anything else (bad usage, malformed files, ...).
 */

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "isr/algebraic.hpp"
#include "isr/baselines.hpp"
#include "isr/bench.hpp"
#include "isr/bounds.hpp"
#include "isr/decode.hpp"
#include "isr/errors.hpp"
#include "isr/forge.hpp"
#include "isr/io.hpp"

namespace {

void print_real_vector(const char* label, const Eigen::VectorXd& v) {
  std::printf("%s [", label);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::printf(i == 0 ? "%.10g" : ", %.10g", v(i));
  }
  std::printf("]\n");
}

void print_int_vector(const char* label, const isr::IntVec& v) {
  std::printf("%s [", label);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::printf(i == 0 ? "%lld" : ", %lld", v(i));
  }
  std::printf("]\n");
}

void print_index_set(const char* label, const isr::IndexSet& set) {
  std::printf("%s {", label);
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::printf(i == 0 ? "%lld" : ", %lld", static_cast<long long>(set[i]) + 1);
  }
  std::printf("}\n");
}

/* Shared view of a matrix file for the decode subcommands. Algebraic
   files are realified (2m real rows, norm-preserving for real signals),
   so their measurement files must hold 2m entries: real parts of all m
   coordinates first, then the imaginary parts. */
struct DecoderMatrix {
  Eigen::MatrixXd real;
  Eigen::Index m = 0;
  Eigen::Index d = 0;
  bool algebraic = false;
  double default_alpha = 1.0;
};

DecoderMatrix load_decoder_matrix(const std::string& path, bool require_certificate,
                                  std::uint64_t minor_cap) {
  DecoderMatrix out;
  if (isr::is_algebraic_matrix_file(path)) {
    const isr::AlgebraicSensingMatrix a = isr::load_algebraic_matrix(path);
    out.real = isr::realify(a);
    out.m = a.m;
    out.d = a.d;
    out.algebraic = true;
    out.default_alpha = std::sqrt(static_cast<double>(a.m));
    return out;
  }
  isr::SensingMatrix a = isr::load_sensing_matrix(path);
  if (require_certificate) {
    if (!a.certificate) a.certificate = isr::verify_plucker(a, minor_cap);
    if (!a.certificate->all_nonzero) {
      throw isr::CertificateError(
          "\"" + path + "\" fails minor verification; the lattice decoder needs "
          "every m-column submatrix invertible");
    }
  }
  out.real = a.real();
  out.m = a.m;
  out.d = a.d;
  out.default_alpha = 1.0;
  return out;
}

Eigen::VectorXd load_measurement_for(const DecoderMatrix& a, const std::string& path) {
  const Eigen::VectorXd y = isr::load_measurement(path);
  if (y.size() != a.real.rows()) {
    std::string expect = std::to_string(static_cast<long long>(a.real.rows()));
    if (a.algebraic) {
      expect += " (an algebraic matrix measures in realified form: m real parts, "
                "then m imaginary parts)";
    }
    throw isr::DimensionError("\"" + path + "\" holds " +
                              std::to_string(static_cast<long long>(y.size())) +
                              " entries; this matrix expects " + expect);
  }
  return y;
}

void report_decode(const isr::DecodeResult& r) {
  std::printf("status: %s\n", isr::to_string(r.status));
  print_int_vector("estimate:", r.estimate.dense());
  std::printf("sparsity: %lld\n", static_cast<long long>(r.estimate.sparsity()));
  std::printf("residual_norm: %.10g\n", r.residual_norm);
  if (r.lattice_used) print_index_set("columns_used:", *r.lattice_used);
}

isr::RatMat load_exact_matrix(const std::string& path) {
  if (isr::is_algebraic_matrix_file(path)) {
    throw isr::PreconditionError(
        "\"" + path + "\" is an algebraic matrix; determinantal bounds work on the "
        "integer or rational matrix it was built from");
  }
  return isr::load_rational_matrix(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integer sparse-recovery toolkit"};
  app.require_subcommand(1);

  /* ---- forge: integer sensing matrices ---------------------------- */

  CLI::App* forge = app.add_subcommand("forge", "generate and certify sensing matrices");
  forge->require_subcommand(1);

  struct {
    std::string model = "ternary";
    long long m = 0, d = -1, k = 1;
    std::uint64_t seed = 0;
    int attempts = 100;
    std::uint64_t minor_cap = 10'000'000;
    std::string out;
  } fg;
  CLI::App* forge_gen =
      forge->add_subcommand("gen", "draw matrices until one passes minor verification");
  forge_gen->add_option("--model", fg.model, "entry distribution")
      ->check(CLI::IsMember({"ternary", "uniform", "trivial"}));
  forge_gen->add_option("--m", fg.m, "rows")->required();
  forge_gen->add_option("--d", fg.d, "columns (trivial model defaults to m+1)");
  forge_gen->add_option("--k", fg.k, "entry bound for the uniform model");
  forge_gen->add_option("--seed", fg.seed, "generator seed");
  forge_gen->add_option("--attempts", fg.attempts, "max draws before giving up");
  forge_gen->add_option("--minor-cap", fg.minor_cap, "max minors per verification");
  forge_gen->add_option("--out", fg.out, "output matrix file")->required();
  forge_gen->callback([&] {
    isr::GenSpec spec;
    spec.m = fg.m;
    spec.k = fg.k;
    spec.seed = fg.seed;
    if (fg.model == "ternary") spec.model = isr::GenModel::ternary;
    if (fg.model == "uniform") spec.model = isr::GenModel::uniform_k;
    if (fg.model == "trivial") spec.model = isr::GenModel::trivial;
    if (fg.d < 0 && fg.model != "trivial") {
      throw isr::PreconditionError("--d is required for the " + fg.model + " model");
    }
    spec.d = fg.d < 0 ? fg.m + 1 : fg.d;
    const isr::GenVerifiedResult res = isr::gen_verified(spec, fg.attempts, fg.minor_cap);
    isr::save_sensing_matrix(res.matrix, fg.out);
    std::printf("certified %lldx%lld matrix (model %s, k = %lld) after %d draw%s -> %s\n",
                static_cast<long long>(res.matrix.m), static_cast<long long>(res.matrix.d),
                fg.model.c_str(), res.matrix.k, res.attempts, res.attempts == 1 ? "" : "s",
                fg.out.c_str());
  });

  struct {
    std::string file;
    std::uint64_t minor_cap = 10'000'000;
  } fv;
  CLI::App* forge_verify =
      forge->add_subcommand("verify", "recompute the minor certificate of a matrix file");
  forge_verify->add_option("matrix-file", fv.file, "matrix to verify")->required();
  forge_verify->add_option("--minor-cap", fv.minor_cap, "max minors to enumerate");
  forge_verify->callback([&] {
    const isr::SensingMatrix a = isr::load_sensing_matrix(fv.file);
    std::printf("matrix: %lldx%lld, k = %lld, %s maximal minors\n",
                static_cast<long long>(a.m), static_cast<long long>(a.d), a.k,
                isr::to_string(isr::binomial(a.d, a.m)).c_str());
    const Eigen::MatrixXd ar = a.real();
    std::printf("min_singular_value: %.10g\n", isr::min_singular_value(ar));
    std::printf("max_row_norm: %.10g\n", isr::row_norms(ar).maxCoeff());
    const isr::PluckerCertificate cert = isr::verify_plucker(a, fv.minor_cap);
    if (!cert.all_nonzero) {
      std::printf("certificate: FAIL, %zu singular column set%s\n",
                  cert.singular_sets.size(), cert.singular_sets.size() == 1 ? "" : "s");
      const std::size_t shown = std::min<std::size_t>(cert.singular_sets.size(), 5);
      for (std::size_t i = 0; i < shown; ++i) {
        print_index_set("  singular:", cert.singular_sets[i]);
      }
      throw isr::CertificateError("\"" + fv.file + "\" has vanishing maximal minors");
    }
    std::printf("certificate: PASS, every maximal minor nonzero\n");
  });

  struct {
    long long m = 0, k = 1, d = -1;
  } fb;
  CLI::App* forge_bounds =
      forge->add_subcommand("bounds", "dimension and feasibility bounds for (m, k)");
  forge_bounds->add_option("--m", fb.m, "rows")->required();
  forge_bounds->add_option("--k", fb.k, "entry bound");
  forge_bounds->add_option("--d", fb.d, "columns (adds the d-specific bounds)");
  forge_bounds->callback([&] {
    std::printf("kbound_max_d: %lld\n", isr::kbound_max_d(fb.m, fb.k));
    if (fb.d >= 0) {
      std::printf("schwartz_zippel_entry_bound: %s\n",
                  isr::to_string(isr::schwartz_zippel_entry_bound(fb.m, fb.d)).c_str());
      const double ub = isr::union_bound_feasibility(fb.m, fb.d, fb.k);
      std::printf("union_bound_feasibility: %.10g (%s)\n", ub,
                  ub < 1.0 ? "< 1, certified draws exist" : ">= 1, no guarantee");
    }
  });

  /* ---- algmat: number-field lift ---------------------------------- */

  CLI::App* algmat = app.add_subcommand("algmat", "algebraic sensing matrices");
  algmat->require_subcommand(1);

  struct {
    std::string b_file, minpoly, out;
    double precision = 1e-30;
    std::uint64_t minor_cap = 10'000'000;
  } ab;
  CLI::App* algmat_build =
      algmat->add_subcommand("build", "lift a certified integer matrix into a number field");
  algmat_build->add_option("--B", ab.b_file, "certified wide integer matrix file")->required();
  algmat_build->add_option("--minpoly", ab.minpoly, "monic field polynomial, e.g. \"1,0,0,-2\"")
      ->required();
  algmat_build->add_option("--precision", ab.precision, "root refinement target");
  algmat_build->add_option("--minor-cap", ab.minor_cap, "max minors if verification is needed");
  algmat_build->add_option("--out", ab.out, "output algebraic matrix file")->required();
  algmat_build->callback([&] {
    isr::SensingMatrix bt = isr::load_sensing_matrix(ab.b_file);
    if (!bt.certificate) bt.certificate = isr::verify_plucker(bt, ab.minor_cap);
    const isr::NumberFieldSpec field = isr::make_field(isr::parse_int_list(ab.minpoly));
    const isr::AlgebraicSensingMatrix a =
        isr::build_algebraic_matrix(bt, field, ab.precision);
    isr::save_algebraic_matrix(a, ab.out);
    std::printf("algebraic %lldx%lld matrix over a degree-%lld field, "
                "max entry modulus %.10g -> %s\n",
                static_cast<long long>(a.m), static_cast<long long>(a.d),
                static_cast<long long>(a.field.degree()), a.entry_bound, ab.out.c_str());
  });

  struct {
    std::string file;
    long long s = 0, box = 0;
    std::uint64_t cap = 100'000'000;
  } av;
  CLI::App* algmat_verify =
      algmat->add_subcommand("verify", "exhaustively check the norm floor over a box");
  algmat_verify->add_option("matrix-file", av.file, "algebraic matrix file")->required();
  algmat_verify->add_option("--s", av.s, "max sparsity of the test vectors")->required();
  algmat_verify->add_option("--box", av.box, "coordinate bound |x_i| <= box")->required();
  algmat_verify->add_option("--cap", av.cap, "enumeration cap");
  algmat_verify->callback([&] {
    const isr::AlgebraicSensingMatrix a = isr::load_algebraic_matrix(av.file);
    const isr::NormBoundReport rep = isr::verify_norm_lower_bound(a, av.s, av.box, av.cap);
    std::printf("norm floor: sqrt(m) = %.10g\n", std::sqrt(static_cast<double>(a.m)));
    std::printf("min ||Ax|| over the box: %.10g\n", rep.min_norm);
    print_int_vector("argmin:", rep.witness);
    std::printf("%llu vectors enumerated; floor holds\n",
                static_cast<unsigned long long>(rep.points));
  });

  /* ---- decode: reconstruction ------------------------------------- */

  CLI::App* decode = app.add_subcommand("decode", "reconstruct signals from measurements");
  decode->require_subcommand(1);

  struct {
    std::string matrix, measurement;
    double alpha = std::nan("");
    long long s = -1;
    std::uint64_t node_cap = 100'000'000;
    std::uint64_t minor_cap = 10'000'000;
  } dc;
  CLI::App* decode_cvp =
      decode->add_subcommand("cvp", "sublattice-sweep decoder with recovery guarantee");
  decode_cvp->add_option("--matrix", dc.matrix, "matrix file (integer or algebraic)")
      ->required();
  decode_cvp->add_option("--measurement", dc.measurement, "decimal vector, one entry per line")
      ->required();
  decode_cvp->add_option("--alpha", dc.alpha,
                         "certified norm floor (default 1 for integer matrices, "
                         "sqrt(m) for algebraic)");
  decode_cvp->add_option("--s", dc.s, "max sparsity (default m)");
  decode_cvp->add_option("--node-cap", dc.node_cap, "CVP enumeration cap");
  decode_cvp->add_option("--minor-cap", dc.minor_cap, "max minors if verification is needed");
  decode_cvp->callback([&] {
    const DecoderMatrix a = load_decoder_matrix(dc.matrix, true, dc.minor_cap);
    const Eigen::VectorXd y = load_measurement_for(a, dc.measurement);
    const double alpha = std::isnan(dc.alpha) ? a.default_alpha : dc.alpha;
    std::printf("alpha: %.10g (guaranteed radius %.10g)\n", alpha,
                isr::recovery_guarantee_radius(alpha));
    const isr::DecodeResult r =
        isr::reconstruct_cvp(a.real, y, alpha, dc.s, a.m, dc.node_cap);
    report_decode(r);
  });

  struct {
    std::string matrix, measurement;
    long long s = 0, box = 0;
    std::uint64_t cap = 100'000'000;
  } db;
  CLI::App* decode_brute =
      decode->add_subcommand("brute", "exhaustive minimum-residual search over a box");
  decode_brute->add_option("--matrix", db.matrix, "matrix file")->required();
  decode_brute->add_option("--measurement", db.measurement, "decimal vector file")->required();
  decode_brute->add_option("--s", db.s, "max sparsity")->required();
  decode_brute->add_option("--box", db.box, "coordinate bound |x_i| <= box")->required();
  decode_brute->add_option("--cap", db.cap, "enumeration cap");
  decode_brute->callback([&] {
    const DecoderMatrix a = load_decoder_matrix(db.matrix, false, 0);
    const Eigen::VectorXd y = load_measurement_for(a, db.measurement);
    report_decode(isr::brute_force_decode(a.real, y, db.s, db.box, db.cap));
  });

  struct {
    std::string matrix, measurement, method;
    long long s = 1;
    bool round = false;
  } dl;
  CLI::App* decode_baseline =
      decode->add_subcommand("baseline", "classical decoders for comparison");
  decode_baseline->add_option("--matrix", dl.matrix, "matrix file")->required();
  decode_baseline->add_option("--measurement", dl.measurement, "decimal vector file")
      ->required();
  decode_baseline->add_option("--method", dl.method, "omp, ht, or ls")
      ->required()
      ->check(CLI::IsMember({"omp", "ht", "ls"}));
  decode_baseline->add_option("--s", dl.s, "sparsity budget (omp, ht)");
  decode_baseline->add_flag("--round", dl.round, "round the estimate to integers");
  decode_baseline->callback([&] {
    const DecoderMatrix a = load_decoder_matrix(dl.matrix, false, 0);
    const Eigen::VectorXd y = load_measurement_for(a, dl.measurement);
    isr::BaselineConfig config;
    if (dl.method == "omp") config.method = isr::BaselineConfig::Method::omp;
    if (dl.method == "ht") config.method = isr::BaselineConfig::Method::hard_threshold;
    if (dl.method == "ls") config.method = isr::BaselineConfig::Method::least_squares;
    config.s = dl.s;
    config.round_to_integer = dl.round;
    const Eigen::VectorXd x = isr::run_baseline(a.real, y, config);
    print_real_vector("estimate:", x);
    std::printf("residual_norm: %.10g\n", (y - a.real * x).norm());
  });

  /* ---- bounds: short-vector bounds -------------------------------- */

  CLI::App* bounds = app.add_subcommand("bounds", "determinantal short-vector bounds");
  bounds->require_subcommand(1);

  struct {
    std::string matrix;
  } br;
  CLI::App* bounds_report =
      bounds->add_subcommand("report", "minimum-norm determinantal bound vs the entry bound");
  bounds_report->add_option("--matrix", br.matrix, "integer or rational matrix file")
      ->required();
  bounds_report->callback([&] {
    const isr::RatMat a = load_exact_matrix(br.matrix);
    const isr::BoundReport rep = isr::sparse_minkowski_bound(a, br.matrix);
    std::printf("matrix_id: %s\n", rep.matrix_id.c_str());
    std::printf("minkowski_bound: %.10g\n", rep.minkowski_bound);
    std::printf("naive_bound: %.10g\n", rep.naive_bound);
    std::printf("gram_det: %s\n", isr::to_string(rep.gram_det).c_str());
    print_index_set("index_set:", rep.index_set);
  });

  struct {
    std::string matrix;
    long long box = -1;
    double bound = std::nan("");
    std::uint64_t cap = 100'000'000;
  } bw;
  CLI::App* bounds_witness =
      bounds->add_subcommand("witness", "search for a sparse integer point below the bound");
  bounds_witness->add_option("--matrix", bw.matrix, "integer or rational matrix file")
      ->required();
  bounds_witness->add_option("--box", bw.box,
                             "coordinate bound |x_i| <= box (default derived from the bound)");
  bounds_witness->add_option("--bound", bw.bound,
                             "norm threshold (default: the determinantal bound)");
  bounds_witness->add_option("--cap", bw.cap, "enumeration cap");
  bounds_witness->callback([&] {
    const isr::RatMat a = load_exact_matrix(bw.matrix);
    const double bound = std::isnan(bw.bound)
                             ? isr::sparse_minkowski_bound(a, bw.matrix).minkowski_bound
                             : bw.bound;
    const long long box = bw.box < 0 ? isr::default_witness_box(a, bound) : bw.box;
    std::printf("bound: %.10g, box: %lld\n", bound, box);
    const auto witness = isr::find_sparse_witness(isr::to_real(a), bound, box, bw.cap);
    if (!witness) {
      std::printf("no witness: every nonzero x with ||x||_0 <= %lld, |x_i| <= %lld "
                  "has ||Ax|| above the bound\n",
                  static_cast<long long>(a.rows()), box);
      return;
    }
    print_int_vector("witness:", witness->dense());
    const Eigen::VectorXd ax = isr::to_real(a) * witness->dense().cast<double>();
    std::printf("norm: %.10g, sparsity: %lld\n", ax.norm(),
                static_cast<long long>(witness->sparsity()));
  });

  /* ---- bench: experiment harness ----------------------------------- */

  CLI::App* bench = app.add_subcommand("bench", "seeded decode experiments");
  bench->require_subcommand(1);

  struct {
    std::string config, out, curves;
    int threads = 0;
  } bn;
  CLI::App* bench_run = bench->add_subcommand("run", "run a config and emit CSVs");
  bench_run->add_option("--config", bn.config, "experiment config file")->required();
  bench_run->add_option("--out", bn.out, "per-trial CSV output path")->required();
  bench_run->add_option("--curves", bn.curves, "aggregate CSV output path");
  bench_run->add_option("--threads", bn.threads,
                        "worker threads (overrides config and ISR_THREADS)");
  bench_run->callback([&] {
    isr::ExperimentConfig config = isr::load_experiment_config(bn.config);
    if (bn.threads > 0) config.threads = bn.threads;
    const isr::ExperimentResult result = isr::run_experiment(config);
    isr::emit_csv(result.records, bn.out);
    std::printf("%-10s %10s %8s %16s %15s\n", "method", "sigma", "trials", "mean_l2_error",
                "recovery_rate");
    for (const isr::AggregateRow& row : result.aggregates) {
      std::printf("%-10s %10.4g %8d %16.10g %15.4g\n", row.method.c_str(), row.sigma,
                  row.trials, row.mean_l2_error, row.recovery_rate);
    }
    std::printf("%zu records -> %s\n", result.records.size(), bn.out.c_str());
    if (!bn.curves.empty()) {
      isr::emit_aggregate_csv(result.aggregates, bn.curves);
      std::printf("%zu aggregate rows -> %s\n", result.aggregates.size(), bn.curves.c_str());
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return isr::exit_code_for(e);
  }
  return 0;
}
