#include "isr/number_field.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cctype>
#include <utility>

#include "isr/eigen_support.hpp"
#include "isr/errors.hpp"

namespace isr {

using RealHP = boost::multiprecision::cpp_bin_float_50;

std::vector<BigInt> parse_int_list(const std::string& text) {
  std::vector<BigInt> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw IoError("empty entry in integer list: \"" + text + "\"");
    try {
      out.emplace_back(token);
    } catch (const std::exception&) {
      throw IoError("bad integer \"" + token + "\" in list");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      token.push_back(ch);
    }
  }
  flush();
  return out;
}

NumberFieldSpec make_field(const std::vector<BigInt>& coeffs_desc) {
  if (coeffs_desc.size() < 2) {
    throw PreconditionError("field polynomial must have degree >= 1");
  }
  if (coeffs_desc.front() != 1) {
    throw PreconditionError("field polynomial must be monic");
  }
  NumberFieldSpec field{coeffs_desc};
  if (field.degree() <= 6 && !desk_scale_irreducible(field.ascending())) {
    throw PreconditionError("field polynomial is reducible over the rationals");
  }
  return field;
}

namespace {

struct PolishedRoot {
  ComplexHP z;
  bool real = false;
};

// Newton refinement from a double-precision seed; f and f' by Horner.
PolishedRoot polish(const std::vector<ComplexHP>& asc, std::complex<double> seed,
                    double precision) {
  const std::size_t n = asc.size() - 1;
  const RealHP tol(precision);
  ComplexHP z(seed.real(), seed.imag());
  bool converged = false;
  for (int it = 0; it < 500; ++it) {
    ComplexHP f = asc[n];
    ComplexHP fp = 0;
    for (std::size_t i = n; i-- > 0;) {
      fp = fp * z + f;
      f = f * z + asc[i];
    }
    if (converged) break;  // the post-convergence extra step just ran
    if (abs(f) <= tol) {
      converged = true;
      // One more iteration drives the error well below the snapping
      // threshold so real roots do not keep stray imaginary dust.
    }
    if (fp == ComplexHP(0)) break;
    z -= f / fp;
  }
  PolishedRoot out;
  out.z = z;
  if (abs(z.imag()) < tol) {
    out.z = ComplexHP(z.real(), RealHP(0));
    out.real = true;
  }
  return out;
}

}  // namespace

ConjugateSystem conjugate_roots(const NumberFieldSpec& field, double precision) {
  if (precision <= 0) throw PreconditionError("root precision must be positive");
  if (field.minpoly.empty() || field.minpoly.front() != 1) {
    throw PreconditionError("field polynomial must be monic");
  }
  const Poly asc = field.ascending();
  if (!is_squarefree(asc)) {
    throw PreconditionError("field polynomial has repeated roots (not squarefree)");
  }
  const Eigen::Index m = field.degree();

  // Companion-matrix eigenvalues give double-precision seeds.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    comp(i, m - 1) = -asc[static_cast<std::size_t>(i)].convert_to<double>();
    if (i + 1 < m) comp(i + 1, i) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw Error("companion-matrix eigenvalue iteration failed");
  }

  std::vector<ComplexHP> hp_coeffs;
  hp_coeffs.reserve(asc.size());
  for (const BigInt& c : asc) hp_coeffs.emplace_back(RealHP(c), RealHP(0));

  std::vector<PolishedRoot> polished;
  polished.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    polished.push_back(polish(hp_coeffs, es.eigenvalues()(i), precision));
  }

  // Distinctness guard: squarefreeness promises distinct true roots, so a
  // collapsed pair means two seeds fell into one Newton basin.
  for (std::size_t i = 0; i < polished.size(); ++i) {
    for (std::size_t j = i + 1; j < polished.size(); ++j) {
      if (abs(polished[i].z - polished[j].z) < RealHP(1e-25)) {
        throw Error("root refinement collapsed two conjugates");
      }
    }
  }

  // Verify the residuals really meet the requested precision.
  const RealHP tol(precision);
  for (const PolishedRoot& r : polished) {
    ComplexHP f = hp_coeffs.back();
    for (std::size_t i = hp_coeffs.size() - 1; i-- > 0;) f = f * r.z + hp_coeffs[i];
    if (abs(f) > tol) {
      throw Error("root refinement did not reach the requested precision");
    }
  }

  std::sort(polished.begin(), polished.end(), [](const PolishedRoot& a, const PolishedRoot& b) {
    if (a.real != b.real) return a.real;
    if (a.z.real() != b.z.real()) return a.z.real() > b.z.real();
    return a.z.imag() > b.z.imag();
  });

  ConjugateSystem sys;
  sys.precision = precision;
  sys.roots.reserve(polished.size());
  for (PolishedRoot& r : polished) sys.roots.push_back(std::move(r.z));
  return sys;
}

std::vector<std::complex<double>> ConjugateSystem::roots_double() const {
  std::vector<std::complex<double>> out;
  out.reserve(roots.size());
  for (const ComplexHP& z : roots) {
    out.emplace_back(z.real().convert_to<double>(), z.imag().convert_to<double>());
  }
  return out;
}

}  // namespace isr
