#pragma once

#include <complex>

#include "isr/forge.hpp"
#include "isr/number_field.hpp"

namespace isr {

// m×d complex sensing matrix whose row i applies the i-th conjugate
// embedding to α = B·(1, θ, …, θ^{m−1})ᵀ. Carries its provenance (the
// integer matrix B and the field) so every norm claim can be re-derived
// exactly; `entries` is the double-precision working view.
struct AlgebraicSensingMatrix {
  Eigen::Index m = 0;
  Eigen::Index d = 0;
  Eigen::MatrixXcd entries;
  IntMat b;  // d×m integer provenance matrix
  NumberFieldSpec field;
  ConjugateSystem roots;
  double entry_bound = 0.0;  // max entry modulus
};

// bt is Bᵀ (the wide m×d orientation the generator and verifier work in),
// carrying a passing minor certificate; the field degree must equal bt.m.
// Entries are accumulated in high precision and narrowed at the end; the
// provable ceiling |A| ≤ m·|B|·max_i|θ_i|^{m−1} is re-checked on the
// result and a violation reports numerical corruption.
AlgebraicSensingMatrix build_algebraic_matrix(const SensingMatrix& bt,
                                              const NumberFieldSpec& field,
                                              double root_precision = 1e-30);

// Exact field norm N_K(L₁(x)) = ∏_i L_i(x) via the resultant of the field
// polynomial with Σ_j (Bᵀx)_j t^{j−1}; integer output, zero iff L₁(x) = 0.
BigInt norm_form_value(const NumberFieldSpec& field, const IntMat& bt, const IntVec& x);
BigInt norm_form_value(const AlgebraicSensingMatrix& a, const IntVec& x);

// Floating cross-check of the same product, ∏_i L_i(x) in double.
std::complex<double> norm_product_float(const AlgebraicSensingMatrix& a, const IntVec& x);

struct NormBoundReport {
  double min_norm = 0.0;
  IntVec witness;            // an argmin of ‖Ax‖ over the box
  std::uint64_t points = 0;  // vectors enumerated
};

// Exhaustive sweep of nonzero x with ‖x‖₀ ≤ s and |x_i| ≤ box: returns the
// minimum of ‖Ax‖ and its argmin, and throws CertificateError if the
// minimum dips below √m − tol — that would falsify the field-norm
// guarantee rather than merely miss a tolerance.
NormBoundReport verify_norm_lower_bound(const AlgebraicSensingMatrix& a, Eigen::Index s,
                                        long long box, std::uint64_t enumeration_cap = 100'000'000,
                                        double tol = 1e-9);

// Every coordinate of Ax has modulus above tol. Guaranteed by the minor
// certificate of B for nonzero x with ‖x‖₀ ≤ m; x = 0 returns false.
bool nonzero_coordinates_check(const AlgebraicSensingMatrix& a, const IntVec& x,
                               double tol = 1e-9);

// Stack real over imaginary parts: a 2m×d real matrix with ‖[Re;Im]x‖ =
// ‖Ax‖ for every real x, so downstream decoders can stay real-valued.
Eigen::MatrixXd realify(const Eigen::MatrixXcd& a);
Eigen::MatrixXd realify(const AlgebraicSensingMatrix& a);

}  // namespace isr
