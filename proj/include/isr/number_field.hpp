#pragma once

#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>
#include <string>
#include <vector>

#include "isr/eigen_support.hpp"
#include "isr/polynomial.hpp"

namespace isr {

using ComplexHP = boost::multiprecision::cpp_complex_50;

// Monic irreducible integer polynomial defining K = ℚ(θ). Coefficients are
// stored highest-degree first, matching the text formats ("1,0,0,-2" is
// t³ − 2). Construct through make_field, which validates monicity and —
// for degree ≤ 6 — runs the trial-factorization irreducibility scan;
// higher degrees are accepted on the caller's word.
struct NumberFieldSpec {
  std::vector<BigInt> minpoly;

  Eigen::Index degree() const { return static_cast<Eigen::Index>(minpoly.size()) - 1; }

  // Internal math convention: lowest-degree first.
  Poly ascending() const { return Poly(minpoly.rbegin(), minpoly.rend()); }
};

NumberFieldSpec make_field(const std::vector<BigInt>& coeffs_desc);

// "1,0,0,-2" -> {1, 0, 0, -2}; accepts optional spaces.
std::vector<BigInt> parse_int_list(const std::string& text);

// The m conjugates θ₁,…,θ_m of θ, refined until |minpoly(θ_i)| ≤ precision.
// Ordering fixes the identity embedding at index 0: real roots first
// (descending), then complex roots by descending real part with the
// positive-imaginary member of each conjugate pair first.
struct ConjugateSystem {
  std::vector<ComplexHP> roots;
  double precision = 0.0;

  std::vector<std::complex<double>> roots_double() const;
};

ConjugateSystem conjugate_roots(const NumberFieldSpec& field, double precision = 1e-30);

}  // namespace isr
