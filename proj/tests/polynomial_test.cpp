#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <complex>

#include "isr/polynomial.hpp"

using isr::BigInt;
using isr::Poly;

namespace {

/* Coefficients as written on paper (highest degree first). */
Poly desc(std::initializer_list<long long> cs) {
  Poly p;
  for (auto it = std::rbegin(cs); it != std::rend(cs); ++it) p.push_back(BigInt(*it));
  return p;
}

/* Independent resultant oracle for monic f: find the roots of f as
   companion-matrix eigenvalues and multiply g over them. Floating point,
   so comparisons are relative. */
double resultant_by_roots(const Poly& f, const Poly& g) {
  const long long n = isr::poly_degree(f);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (long long i = 0; i + 1 < n; ++i) companion(i + 1, i) = 1.0;
  for (long long i = 0; i < n; ++i) {
    companion(i, n - 1) = -static_cast<double>(f[static_cast<std::size_t>(i)]);
  }
  const Eigen::VectorXcd roots = Eigen::EigenSolver<Eigen::MatrixXd>(companion, false).eigenvalues();
  std::complex<double> prod(1.0, 0.0);
  for (Eigen::Index r = 0; r < roots.size(); ++r) {
    std::complex<double> value(0.0, 0.0);
    for (std::size_t i = g.size(); i-- > 0;) {
      value = value * roots(r) + static_cast<double>(g[i]);
    }
    prod *= value;
  }
  return prod.real();
}

}  // namespace

TEST_CASE("degree and trim treat trailing zeros as absent") {
  CHECK(isr::poly_degree({}) == -1);
  CHECK(isr::poly_degree({BigInt(0), BigInt(0)}) == -1);
  CHECK(isr::poly_degree(desc({1, 0, 0, -2})) == 3);
  CHECK(isr::poly_trim({BigInt(5), BigInt(0), BigInt(0)}) == Poly{BigInt(5)});
}

TEST_CASE("evaluation, derivative, multiplication") {
  const Poly f = desc({1, 0, 0, -2});  // t^3 - 2
  CHECK(isr::poly_eval(f, BigInt(3)) == BigInt(25));
  CHECK(isr::poly_eval(f, BigInt(-1)) == BigInt(-3));

  const Poly df = isr::poly_derivative(f);  // 3t^2
  CHECK(isr::poly_degree(df) == 2);
  CHECK(isr::poly_eval(df, BigInt(2)) == BigInt(12));

  /* (t - 1)(t + 1) = t^2 - 1. */
  CHECK(isr::poly_trim(isr::poly_mul(desc({1, -1}), desc({1, 1}))) == desc({1, 0, -1}));
  CHECK(isr::poly_mul({}, desc({1, 1})).empty());
}

TEST_CASE("monic division recognizes exact factors only") {
  const Poly product = isr::poly_mul(desc({1, -2, 3}), desc({1, 5}));
  Poly quotient;
  CHECK(isr::poly_divides_monic(desc({1, 5}), product, &quotient));
  CHECK(isr::poly_trim(quotient) == desc({1, -2, 3}));
  CHECK(!isr::poly_divides_monic(desc({1, 1}), desc({1, 0, -2}), nullptr));
}

TEST_CASE("resultant on hand-computable cases") {
  /* res(t - a, t - b) = a - b. */
  CHECK(isr::resultant(desc({1, -7}), desc({1, -3})) == BigInt(4));
  /* res(t^2 - 2, t^2 - 3) = (2-3)(2-3) = 1. */
  CHECK(isr::resultant(desc({1, 0, -2}), desc({1, 0, -3})) == BigInt(1));
  /* res(t^3 - 2, t) = product of the roots of t^3 - 2. */
  CHECK(isr::resultant(desc({1, 0, 0, -2}), desc({1, 0})) == BigInt(2));
  /* res(t^3 - 2, 3t^2) = 27 * (product of roots)^2. */
  CHECK(isr::resultant(desc({1, 0, 0, -2}), desc({3, 0, 0})) == BigInt(108));
}

TEST_CASE("resultant matches the root-product oracle") {
  const Poly cases_f[] = {desc({1, 0, 0, -2}), desc({1, -1, -1}), desc({1, 2, 0, -3, 5})};
  const Poly cases_g[] = {desc({2, -1, 4}), desc({1, 1}), desc({1, 0, -2})};
  for (const Poly& f : cases_f) {
    for (const Poly& g : cases_g) {
      const double exact = static_cast<double>(isr::resultant(f, g).convert_to<double>());
      const double oracle = resultant_by_roots(f, g);
      CHECK(exact == doctest::Approx(oracle).epsilon(1e-8));
    }
  }
}

TEST_CASE("resultant algebra: swap sign and multiplicativity") {
  const Poly f = desc({1, 0, 0, -2});
  const Poly g = desc({1, -1, -1});
  const Poly h = desc({1, 3});
  const long long sign_flips = isr::poly_degree(f) * isr::poly_degree(g);
  const BigInt lhs = isr::resultant(f, g);
  const BigInt rhs = isr::resultant(g, f);
  CHECK(lhs == (sign_flips % 2 == 0 ? rhs : -rhs));
  CHECK(isr::resultant(f, isr::poly_mul(g, h)) ==
        isr::resultant(f, g) * isr::resultant(f, h));
}

TEST_CASE("squarefree detection") {
  CHECK(isr::is_squarefree(desc({1, 0, 0, -2})));
  CHECK(isr::is_squarefree(desc({1, 0, -2})));
  CHECK(!isr::is_squarefree(desc({1, -2, 1})));            // (t-1)^2
  CHECK(!isr::is_squarefree(isr::poly_mul(desc({1, -3}), desc({1, -6, 9}))));
}

TEST_CASE("desk-scale irreducibility catches non-obvious factorizations") {
  CHECK(isr::desk_scale_irreducible(desc({1, 0, 0, -2})));   // t^3 - 2
  CHECK(isr::desk_scale_irreducible(desc({1, 0, 1})));       // t^2 + 1
  CHECK(isr::desk_scale_irreducible(desc({1, 0, 0, 0, 1}))); // t^4 + 1
  CHECK(isr::desk_scale_irreducible(desc({1, 0, 0, 1, 0, 0, 1})));  // t^6 + t^3 + 1

  CHECK(!isr::desk_scale_irreducible(desc({1, 0, -1})));     // (t-1)(t+1)
  CHECK(!isr::desk_scale_irreducible(desc({1, 0, 0, 0, 4})));  // t^4 + 4: no rational root,
                                                               // yet (t^2-2t+2)(t^2+2t+2)
  CHECK(!isr::desk_scale_irreducible(desc({1, 1, 1, 1})));   // divisible by t + 1
}
