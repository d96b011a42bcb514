#pragma once

#include <vector>

#include "isr/rational.hpp"

namespace isr {

// Dense integer polynomial, coefficients lowest-degree first; the zero
// polynomial is {} or any all-zero vector. External text formats list
// coefficients highest-first ("1,0,0,-2" = t^3 - 2); convert at the edge.
using Poly = std::vector<BigInt>;

// Degree after trimming, -1 for the zero polynomial.
long long poly_degree(const Poly& p);

Poly poly_trim(Poly p);

BigInt poly_eval(const Poly& p, const BigInt& x);

Poly poly_derivative(const Poly& p);

Poly poly_mul(const Poly& a, const Poly& b);

// Exact division test against a monic divisor; fills *quotient on success.
bool poly_divides_monic(const Poly& monic_divisor, const Poly& f, Poly* quotient = nullptr);

// Sylvester-determinant resultant. With f = lc·∏(t − α_i) this returns
// lc(f)^deg(g) · ∏_i g(α_i), so for monic f it is exactly ∏_i g(α_i) —
// the field norm of g(θ) when f is the minimal polynomial of θ.
BigInt resultant(const Poly& f, const Poly& g);

// deg f ≥ 1 and Res(f, f′) ≠ 0, i.e. no repeated complex roots.
bool is_squarefree(const Poly& f);

// Trial factorization for monic f of degree ≤ 6: integer-root scan plus
// enumeration of monic quadratic/cubic divisors inside the Cauchy root
// box. Returns true only when no proper factor exists. Throws when the
// coefficient box is too large to enumerate — this check is meant for
// hand-sized polynomials, not a general factoring routine.
bool desk_scale_irreducible(const Poly& f);

}  // namespace isr
