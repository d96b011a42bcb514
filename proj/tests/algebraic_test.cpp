#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "isr/algebraic.hpp"
#include "isr/rng.hpp"

using isr::AlgebraicSensingMatrix;
using isr::BigInt;
using isr::IntVec;
using isr::NumberFieldSpec;
using isr::SensingMatrix;

namespace {

SensingMatrix certified_3x6() {
  SensingMatrix a;
  a.m = 3;
  a.d = 6;
  a.k = 1;
  a.entries.resize(3, 6);
  a.entries << 1, 1, 1, 1, 1, 1,
               1, 1, 0, 0, -1, -1,
               1, 0, 1, -1, 0, -1;
  a.certificate = isr::verify_plucker(a);
  return a;
}

NumberFieldSpec cube_root_field() { return isr::make_field(isr::parse_int_list("1,0,0,-2")); }

AlgebraicSensingMatrix lifted_3x6() {
  return isr::build_algebraic_matrix(certified_3x6(), cube_root_field());
}

IntVec unit(Eigen::Index d, Eigen::Index j, long long v = 1) {
  IntVec x = IntVec::Zero(d);
  x(j) = v;
  return x;
}

}  // namespace

TEST_CASE("construction demands a passing certificate and a matching degree") {
  SensingMatrix bare = certified_3x6();
  bare.certificate.reset();
  CHECK_THROWS_AS(isr::build_algebraic_matrix(bare, cube_root_field()),
                  isr::PreconditionError);

  SensingMatrix failing = certified_3x6();
  failing.entries.col(0) = failing.entries.col(1);
  failing.certificate = isr::verify_plucker(failing);
  CHECK_THROWS_AS(isr::build_algebraic_matrix(failing, cube_root_field()),
                  isr::PreconditionError);

  CHECK_THROWS_AS(
      isr::build_algebraic_matrix(certified_3x6(), isr::make_field(isr::parse_int_list("1,0,-2"))),
      isr::DimensionError);
}

TEST_CASE("entries realize the power-basis combinations at each embedding") {
  const AlgebraicSensingMatrix a = lifted_3x6();
  CHECK(a.m == 3);
  CHECK(a.d == 6);
  CHECK(a.b.rows() == 6);
  CHECK(a.b.cols() == 3);

  /* Row 0 is the real embedding theta = 2^(1/3): entry (0, j) must equal
     sum_l B(j, l) * theta^l computed directly in double. */
  const double theta = std::cbrt(2.0);
  for (Eigen::Index j = 0; j < 6; ++j) {
    double expect = 0.0;
    for (Eigen::Index l = 0; l < 3; ++l) {
      expect += static_cast<double>(a.b(j, l)) * std::pow(theta, static_cast<double>(l));
    }
    CHECK(a.entries(0, j).real() == doctest::Approx(expect).epsilon(1e-13));
    CHECK(a.entries(0, j).imag() == 0.0);
  }

  /* Rows 1 and 2 are a conjugate pair, entrywise. */
  for (Eigen::Index j = 0; j < 6; ++j) {
    CHECK(a.entries(2, j) == std::conj(a.entries(1, j)));
  }

  double max_mod = 0.0;
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 6; ++j) max_mod = std::max(max_mod, std::abs(a.entries(i, j)));
  }
  CHECK(a.entry_bound == doctest::Approx(max_mod));
  /* Provable ceiling m * |B| * |theta|^(m-1) with |B| = 1. */
  CHECK(a.entry_bound <= 3.0 * std::pow(std::cbrt(2.0), 2.0) + 1e-9);
}

TEST_CASE("field norm is an integer that matches the float product") {
  const AlgebraicSensingMatrix a = lifted_3x6();
  for (Eigen::Index j = 0; j < 6; ++j) {
    const IntVec x = unit(6, j);
    const BigInt n = isr::norm_form_value(a, x);
    CHECK(n != 0);
    const std::complex<double> prod = isr::norm_product_float(a, x);
    CHECK(std::abs(prod.imag()) < 1e-9);
    CHECK(prod.real() == doctest::Approx(n.convert_to<double>()).epsilon(1e-9));
  }

  /* A denser vector; the norm form stays exact while the product floats. */
  IntVec x(6);
  x << 2, -1, 0, 3, 0, -2;
  const BigInt n = isr::norm_form_value(a, x);
  const std::complex<double> prod = isr::norm_product_float(a, x);
  CHECK(prod.real() == doctest::Approx(n.convert_to<double>()).epsilon(1e-9));

  CHECK(isr::norm_form_value(a, IntVec::Zero(6)) == BigInt(0));
}

TEST_CASE("arithmetic-geometric chain gives the square-root-of-m floor") {
  const AlgebraicSensingMatrix a = lifted_3x6();
  for (Eigen::Index j = 0; j < 6; ++j) {
    for (long long v : {-2LL, 1LL, 3LL}) {
      const IntVec x = unit(6, j, v);
      const double image_norm = (a.entries * x.cast<std::complex<double>>()).norm();
      const BigInt n = isr::norm_form_value(a, x);
      const double geo =
          std::sqrt(3.0) * std::pow(std::abs(n.convert_to<double>()), 1.0 / 3.0);
      CHECK(image_norm + 1e-9 >= geo);
      CHECK(image_norm >= std::sqrt(3.0) - 1e-9);
    }
  }
}

TEST_CASE("norm floor verification sweeps the whole box and reports the argmin") {
  const AlgebraicSensingMatrix a = lifted_3x6();
  const isr::NormBoundReport rep = isr::verify_norm_lower_bound(a, 1, 2);
  CHECK(rep.points == 24);  // C(6,1) supports x 4 nonzero values
  CHECK(rep.min_norm >= std::sqrt(3.0) - 1e-9);
  const double witness_norm =
      (a.entries * rep.witness.cast<std::complex<double>>()).norm();
  CHECK(witness_norm == doctest::Approx(rep.min_norm));

  CHECK_THROWS_AS(isr::verify_norm_lower_bound(a, 0, 2), isr::PreconditionError);
  CHECK_THROWS_AS(isr::verify_norm_lower_bound(a, 4, 2), isr::PreconditionError);
  CHECK_THROWS_AS(isr::verify_norm_lower_bound(a, 1, 0), isr::PreconditionError);
  CHECK_THROWS_AS(isr::verify_norm_lower_bound(a, 3, 10, 1000), isr::ResourceError);
}

TEST_CASE("a corrupted matrix trips the floor check instead of passing quietly") {
  AlgebraicSensingMatrix a = lifted_3x6();
  a.entries *= std::complex<double>(0.1, 0.0);
  CHECK_THROWS_AS(isr::verify_norm_lower_bound(a, 1, 1), isr::CertificateError);
}

TEST_CASE("coordinatewise nonvanishing") {
  const AlgebraicSensingMatrix a = lifted_3x6();
  CHECK(isr::nonzero_coordinates_check(a, unit(6, 0)));
  CHECK(!isr::nonzero_coordinates_check(a, IntVec::Zero(6)));

  IntVec sparse3(6);
  sparse3 << 1, 0, -2, 0, 1, 0;
  CHECK(isr::nonzero_coordinates_check(a, sparse3));

  IntVec dense(6);
  dense << 1, 1, 1, 1, 1, 1;
  CHECK_THROWS_AS(isr::nonzero_coordinates_check(a, dense), isr::PreconditionError);
}

TEST_CASE("realification preserves norms and stacks real over imaginary") {
  const AlgebraicSensingMatrix a = lifted_3x6();
  const Eigen::MatrixXd r = isr::realify(a);
  CHECK(r.rows() == 6);
  CHECK(r.cols() == 6);

  /* The identity embedding is real, so its imaginary row is zero. */
  CHECK(r.row(3).norm() == 0.0);

  isr::Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd x(6);
    for (Eigen::Index i = 0; i < 6; ++i) x(i) = rng.gaussian();
    const double complex_norm = (a.entries * x.cast<std::complex<double>>()).norm();
    const double real_norm = (r * x).norm();
    CHECK(real_norm == doctest::Approx(complex_norm).epsilon(1e-12));
  }
}
