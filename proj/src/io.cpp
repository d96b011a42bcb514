#include "isr/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "isr/errors.hpp"

namespace isr {
namespace {

using nlohmann::json;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\" for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on \"" + path + "\"");
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open \"" + path + "\" for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failure on \"" + path + "\"");
}

json parse_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw IoError("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

const json& field_of(const json& j, const char* key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw IoError("\"" + path + "\" is missing the \"" + key + "\" field");
  }
  return *it;
}

BigInt bigint_of(const json& j, const std::string& path) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw IoError("\"" + path + "\" holds a malformed integer \"" +
                    j.get<std::string>() + "\"");
    }
  }
  throw IoError("\"" + path + "\" holds a non-integer where an integer is required");
}

Rational rational_of(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    const std::size_t slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(text));
      return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const IoError&) {
      throw;
    } catch (const std::exception&) {
      throw IoError("\"" + path + "\" holds a malformed rational \"" + text + "\"");
    }
  }
  throw IoError("\"" + path + "\" holds an entry that is neither integer nor \"p/q\"");
}

json bigint_to_json(const BigInt& v) {
  static const BigInt lo(std::numeric_limits<long long>::min());
  static const BigInt hi(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return json(v.convert_to<long long>());
  return json(to_string(v));
}

std::pair<Eigen::Index, Eigen::Index> shape_of(const json& j, const std::string& path) {
  const auto m = field_of(j, "m", path).get<long long>();
  const auto d = field_of(j, "d", path).get<long long>();
  if (m < 1 || d < 1) throw IoError("\"" + path + "\" has a non-positive shape");
  return {static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(d)};
}

const json& entries_of(const json& j, Eigen::Index m, Eigen::Index d,
                       const std::string& path) {
  const json& entries = field_of(j, "entries", path);
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(d)) {
    throw IoError("\"" + path + "\" entries must be a row-major array of m*d values");
  }
  return entries;
}

json certificate_to_json(const PluckerCertificate& cert) {
  json sets = json::array();
  for (const IndexSet& set : cert.singular_sets) {
    json one = json::array();
    for (const Eigen::Index i : set) one.push_back(static_cast<long long>(i) + 1);
    sets.push_back(std::move(one));
  }
  return json{{"all_nonzero", cert.all_nonzero}, {"singular_sets", std::move(sets)}};
}

PluckerCertificate certificate_from_json(const json& j, const std::string& path) {
  PluckerCertificate cert;
  cert.all_nonzero = field_of(j, "all_nonzero", path).get<bool>();
  const json& sets = field_of(j, "singular_sets", path);
  if (!sets.is_array()) throw IoError("\"" + path + "\" certificate is malformed");
  for (const json& one : sets) {
    IndexSet set;
    for (const json& idx : one) {
      const auto v = idx.get<long long>();
      if (v < 1) throw IoError("\"" + path + "\" certificate uses non-positive indices");
      set.push_back(static_cast<Eigen::Index>(v - 1));
    }
    cert.singular_sets.push_back(std::move(set));
  }
  return cert;
}

json sensing_to_json(const SensingMatrix& a) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < a.m; ++i) {
    for (Eigen::Index j = 0; j < a.d; ++j) entries.push_back(a.entries(i, j));
  }
  json out{{"m", static_cast<long long>(a.m)},
           {"d", static_cast<long long>(a.d)},
           {"k", a.k},
           {"entries", std::move(entries)}};
  if (a.certificate) out["certificate"] = certificate_to_json(*a.certificate);
  return out;
}

SensingMatrix sensing_from_json(const json& j, const std::string& path) {
  SensingMatrix a;
  const auto [m, d] = shape_of(j, path);
  a.m = m;
  a.d = d;
  const json& entries = entries_of(j, m, d, path);
  a.entries.resize(m, d);
  long long max_abs = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const json& cell = entries[static_cast<std::size_t>(i * d + c)];
      if (!cell.is_number_integer()) {
        throw IoError("\"" + path + "\" holds non-integer entries; "
                      "an integer sensing matrix is required here");
      }
      const long long v = cell.get<long long>();
      a.entries(i, c) = v;
      max_abs = std::max(max_abs, std::llabs(v));
    }
  }
  a.k = j.contains("k") ? field_of(j, "k", path).get<long long>() : max_abs;
  if (j.contains("certificate")) {
    a.certificate = certificate_from_json(j["certificate"], path);
  }
  return a;
}

json field_to_json(const NumberFieldSpec& field) {
  json coeffs = json::array();
  for (const BigInt& c : field.minpoly) coeffs.push_back(bigint_to_json(c));
  return json{{"minpoly", std::move(coeffs)},
              {"degree", static_cast<long long>(field.degree())}};
}

NumberFieldSpec field_from_json(const json& j, const std::string& path) {
  const json& coeffs = field_of(j, "minpoly", path);
  if (!coeffs.is_array() || coeffs.size() < 2) {
    throw IoError("\"" + path + "\" minpoly must list at least two coefficients");
  }
  std::vector<BigInt> desc;
  desc.reserve(coeffs.size());
  for (const json& c : coeffs) desc.push_back(bigint_of(c, path));
  if (j.contains("degree")) {
    const auto stated = field_of(j, "degree", path).get<long long>();
    if (stated != static_cast<long long>(desc.size()) - 1) {
      throw IoError("\"" + path + "\" degree disagrees with the coefficient count");
    }
  }
  return make_field(desc);
}

SignalModel signal_from_json(const json& j, const std::string& path) {
  SignalModel model;
  const std::string kind = field_of(j, "model", path).get<std::string>();
  if (kind == "gaussian_rounded") {
    model.kind = SignalModel::Kind::gaussian_rounded;
    model.sigma = field_of(j, "sigma", path).get<double>();
  } else if (kind == "uniform_int") {
    model.kind = SignalModel::Kind::uniform_int;
    model.lo = field_of(j, "lo", path).get<long long>();
    model.hi = field_of(j, "hi", path).get<long long>();
  } else {
    throw IoError("\"" + path + "\" names an unknown signal model \"" + kind + "\"");
  }
  return model;
}

GenSpec genspec_from_json(const json& j, const std::string& path) {
  GenSpec spec;
  const std::string model = field_of(j, "model", path).get<std::string>();
  if (model == "ternary") {
    spec.model = GenModel::ternary;
  } else if (model == "uniform") {
    spec.model = GenModel::uniform_k;
  } else if (model == "trivial") {
    spec.model = GenModel::trivial;
  } else {
    throw IoError("\"" + path + "\" names an unknown generator model \"" + model + "\"");
  }
  spec.m = static_cast<Eigen::Index>(field_of(j, "m", path).get<long long>());
  if (j.contains("d")) {
    spec.d = static_cast<Eigen::Index>(j["d"].get<long long>());
  } else if (spec.model == GenModel::trivial) {
    spec.d = spec.m + 1;
  } else {
    throw IoError("\"" + path + "\" generator spec is missing \"d\"");
  }
  if (j.contains("k")) spec.k = j["k"].get<long long>();
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  return spec;
}

std::string basename_of(const std::string& path) {
  const std::size_t cut = path.find_last_of("/\\");
  return cut == std::string::npos ? path : path.substr(cut + 1);
}

}  // namespace

void save_sensing_matrix(const SensingMatrix& a, const std::string& path) {
  write_text(path, sensing_to_json(a).dump(2) + "\n");
}

SensingMatrix load_sensing_matrix(const std::string& path) {
  return sensing_from_json(parse_json(path), path);
}

void save_rational_matrix(const RatMat& a, const std::string& path) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Rational& v = a(i, j);
      if (v.den() == 1) {
        entries.push_back(bigint_to_json(v.num()));
      } else {
        entries.push_back(to_string(v));
      }
    }
  }
  const json out{{"m", static_cast<long long>(a.rows())},
                 {"d", static_cast<long long>(a.cols())},
                 {"entries", std::move(entries)}};
  write_text(path, out.dump(2) + "\n");
}

RatMat load_rational_matrix(const std::string& path) {
  const json j = parse_json(path);
  const auto [m, d] = shape_of(j, path);
  const json& entries = entries_of(j, m, d, path);
  RatMat a(m, d);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index c = 0; c < d; ++c) {
      a(i, c) = rational_of(entries[static_cast<std::size_t>(i * d + c)], path);
    }
  }
  return a;
}

void save_field(const NumberFieldSpec& field, const std::string& path) {
  write_text(path, field_to_json(field).dump(2) + "\n");
}

NumberFieldSpec load_field(const std::string& path) {
  return field_from_json(parse_json(path), path);
}

void save_algebraic_matrix(const AlgebraicSensingMatrix& a, const std::string& path) {
  SensingMatrix bt;
  bt.m = a.m;
  bt.d = a.d;
  bt.entries = a.b.transpose();
  long long max_abs = 0;
  for (Eigen::Index i = 0; i < bt.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < bt.entries.cols(); ++j) {
      max_abs = std::max(max_abs, std::llabs(bt.entries(i, j)));
    }
  }
  bt.k = max_abs;

  json cached = json::array();
  for (Eigen::Index i = 0; i < a.m; ++i) {
    for (Eigen::Index j = 0; j < a.d; ++j) {
      cached.push_back(json::array({a.entries(i, j).real(), a.entries(i, j).imag()}));
    }
  }
  json coeffs = json::array();
  for (const BigInt& c : a.field.minpoly) coeffs.push_back(bigint_to_json(c));
  const json out{{"kind", "algebraic"},
                 {"b_transpose", sensing_to_json(bt)},
                 {"minpoly", std::move(coeffs)},
                 {"root_precision", a.roots.precision},
                 {"entries", std::move(cached)}};
  write_text(path, out.dump(2) + "\n");
}

AlgebraicSensingMatrix load_algebraic_matrix(const std::string& path) {
  const json j = parse_json(path);
  SensingMatrix bt = sensing_from_json(field_of(j, "b_transpose", path), path);
  /* Cached certificates are not trusted across a round trip: the minors
     are re-verified before the rebuild, so a hand-edited file cannot
     smuggle in an uncertified matrix. */
  bt.certificate = verify_plucker(bt);
  const NumberFieldSpec field = field_from_json(j, path);
  const double precision =
      j.contains("root_precision") ? j["root_precision"].get<double>() : 1e-30;
  AlgebraicSensingMatrix a = build_algebraic_matrix(bt, field, precision);

  if (j.contains("entries")) {
    const json& cached = field_of(j, "entries", path);
    if (!cached.is_array() ||
        cached.size() != static_cast<std::size_t>(a.m) * static_cast<std::size_t>(a.d)) {
      throw IoError("\"" + path + "\" cached entries have the wrong shape");
    }
    for (Eigen::Index i = 0; i < a.m; ++i) {
      for (Eigen::Index c = 0; c < a.d; ++c) {
        const json& cell = cached[static_cast<std::size_t>(i * a.d + c)];
        if (!cell.is_array() || cell.size() != 2) {
          throw IoError("\"" + path + "\" cached entries must be (re, im) pairs");
        }
        const std::complex<double> stored(cell[0].get<double>(), cell[1].get<double>());
        const double err = std::abs(stored - a.entries(i, c));
        if (!(err <= 1e-9 * (1.0 + std::abs(stored)))) {
          throw IoError("\"" + path + "\" cached entries disagree with the rebuild; "
                        "the file is stale or corrupted");
        }
      }
    }
  }
  return a;
}

bool is_algebraic_matrix_file(const std::string& path) {
  const json j = parse_json(path);
  return j.contains("minpoly") ||
         (j.contains("kind") && j["kind"].is_string() &&
          j["kind"].get<std::string>() == "algebraic");
}

void save_measurement(const Eigen::VectorXd& v, const std::string& path) {
  std::string text;
  char line[64];
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g\n", v(i));
    text += line;
  }
  write_text(path, text);
}

Eigen::VectorXd load_measurement(const std::string& path) {
  std::istringstream in(read_text(path));
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const std::size_t end = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(begin, end - begin + 1);
    char* tail = nullptr;
    const double v = std::strtod(token.c_str(), &tail);
    if (tail == nullptr || *tail != '\0' || !std::isfinite(v)) {
      throw IoError("\"" + path + "\" holds a malformed measurement line \"" + token +
                    "\"");
    }
    values.push_back(v);
  }
  if (values.empty()) throw IoError("\"" + path + "\" holds no measurement entries");
  Eigen::VectorXd out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = values[i];
  }
  return out;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  const json j = parse_json(path);
  ExperimentConfig config;

  const json& matrix = field_of(j, "matrix", path);
  if (matrix.is_string()) {
    const std::string file = matrix.get<std::string>();
    if (is_algebraic_matrix_file(file)) {
      config.matrix = load_algebraic_matrix(file);
    } else {
      config.matrix = load_sensing_matrix(file);
    }
    config.matrix_id = basename_of(file);
  } else if (matrix.is_object()) {
    const GenSpec spec = genspec_from_json(matrix, path);
    config.matrix = gen_verified(spec).matrix;
    config.matrix_id = "generated";
  } else {
    throw IoError("\"" + path + "\" matrix must be a file path or a generator spec");
  }
  if (j.contains("matrix_id")) config.matrix_id = j["matrix_id"].get<std::string>();

  config.signal = signal_from_json(field_of(j, "signal", path), path);
  config.s = static_cast<Eigen::Index>(field_of(j, "s", path).get<long long>());
  config.sigmas.clear();
  for (const json& sigma : field_of(j, "sigmas", path)) {
    config.sigmas.push_back(sigma.get<double>());
  }
  config.methods.clear();
  for (const json& method : field_of(j, "methods", path)) {
    config.methods.push_back(method.get<std::string>());
  }
  config.trials = static_cast<int>(field_of(j, "trials", path).get<long long>());
  config.master_seed = field_of(j, "master_seed", path).get<std::uint64_t>();
  if (j.contains("threads")) {
    config.threads = j["threads"].get<int>();
  } else if (const char* env = std::getenv("ISR_THREADS")) {
    char* tail = nullptr;
    const long v = std::strtol(env, &tail, 10);
    if (tail == env || *tail != '\0' || v < 1) {
      throw PreconditionError("ISR_THREADS must be a positive integer, got \"" +
                              std::string(env) + "\"");
    }
    config.threads = static_cast<int>(v);
  }
  return config;
}

}  // namespace isr
