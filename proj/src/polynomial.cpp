#include "isr/polynomial.hpp"

#include <algorithm>
#include <cstdlib>

#include "isr/eigen_support.hpp"
#include "isr/errors.hpp"
#include "isr/exact.hpp"

namespace isr {

long long poly_degree(const Poly& p) {
  for (auto i = static_cast<long long>(p.size()) - 1; i >= 0; --i) {
    if (p[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

Poly poly_trim(Poly p) {
  p.resize(static_cast<std::size_t>(poly_degree(p) + 1));
  return p;
}

BigInt poly_eval(const Poly& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto i = static_cast<long long>(p.size()) - 1; i >= 0; --i) {
    acc = acc * x + p[static_cast<std::size_t>(i)];
  }
  return acc;
}

Poly poly_derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(BigInt(i) * p[i]);
  return poly_trim(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  const long long da = poly_degree(a), db = poly_degree(b);
  if (da < 0 || db < 0) return {};
  Poly out(static_cast<std::size_t>(da + db + 1), BigInt(0));
  for (long long i = 0; i <= da; ++i) {
    for (long long j = 0; j <= db; ++j) {
      out[static_cast<std::size_t>(i + j)] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

bool poly_divides_monic(const Poly& monic_divisor, const Poly& f, Poly* quotient) {
  const Poly g = poly_trim(monic_divisor);
  const long long dg = poly_degree(g);
  if (dg < 0 || g.back() != 1) {
    throw PreconditionError("divisor must be monic and nonzero");
  }
  Poly rem = poly_trim(f);
  long long dr = poly_degree(rem);
  if (dr < dg) return false;
  Poly q(static_cast<std::size_t>(dr - dg + 1), BigInt(0));
  while (dr >= dg) {
    const BigInt lead = rem[static_cast<std::size_t>(dr)];
    q[static_cast<std::size_t>(dr - dg)] = lead;
    for (long long i = 0; i <= dg; ++i) {
      rem[static_cast<std::size_t>(dr - dg + i)] -= lead * g[static_cast<std::size_t>(i)];
    }
    dr = poly_degree(rem);
  }
  if (dr >= 0) return false;
  if (quotient) *quotient = poly_trim(std::move(q));
  return true;
}

BigInt resultant(const Poly& f_in, const Poly& g_in) {
  const Poly f = poly_trim(f_in);
  const Poly g = poly_trim(g_in);
  const long long n = poly_degree(f);
  const long long k = poly_degree(g);
  if (n < 0) throw PreconditionError("resultant needs a nonzero first argument");
  if (k < 0) return 0;          // Res(f, 0) = 0 for deg f >= 1; degenerate otherwise
  if (n == 0) return pow(f[0], static_cast<unsigned>(k));
  if (k == 0) return pow(g[0], static_cast<unsigned>(n));

  // Sylvester matrix: k shifted copies of f's coefficients (highest first)
  // above n shifted copies of g's.
  using BigIntMat = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index sz = static_cast<Eigen::Index>(n + k);
  BigIntMat s = BigIntMat::Constant(sz, sz, BigInt(0));
  for (long long r = 0; r < k; ++r) {
    for (long long i = 0; i <= n; ++i) {
      s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r + i)) =
          f[static_cast<std::size_t>(n - i)];
    }
  }
  for (long long r = 0; r < n; ++r) {
    for (long long i = 0; i <= k; ++i) {
      s(static_cast<Eigen::Index>(k + r), static_cast<Eigen::Index>(r + i)) =
          g[static_cast<std::size_t>(k - i)];
    }
  }
  return det_bareiss<BigInt>(std::move(s));
}

bool is_squarefree(const Poly& f) {
  if (poly_degree(f) < 1) return false;
  return resultant(f, poly_derivative(f)) != 0;
}

namespace {

// Cauchy bound: every complex root of a monic integer polynomial has
// modulus < 1 + max|coefficient|.
BigInt cauchy_root_bound(const Poly& f) {
  BigInt mx = 0;
  for (const BigInt& c : f) {
    const BigInt a = abs(c);
    if (a > mx) mx = a;
  }
  return mx + 1;
}

constexpr long long kDeskCandidateCap = 20'000'000;

long long checked_box_side(const BigInt& bound) {
  const BigInt side = 2 * bound + 1;
  if (side > BigInt(kDeskCandidateCap)) {
    throw PreconditionError(
        "coefficients too large for the desk-scale irreducibility scan");
  }
  return static_cast<long long>(side);
}

bool has_integer_root(const Poly& f) {
  const BigInt bound = cauchy_root_bound(f);
  checked_box_side(bound);
  const long long b = static_cast<long long>(bound);
  for (long long r = -b; r <= b; ++r) {
    if (poly_eval(f, BigInt(r)) == 0) return true;
  }
  return false;
}

// Enumerate monic degree-deg divisors t^deg + c_{deg-1} t^{deg-1} + … + c_0
// with each |c_i| ≤ C(deg, i)·R^{deg-i} (coefficients of ∏(t − root) with
// all roots in the Cauchy disk of radius R).
bool has_monic_factor_of_degree(const Poly& f, int deg) {
  const BigInt r = cauchy_root_bound(f);
  std::vector<BigInt> coeff_bound(static_cast<std::size_t>(deg));
  BigInt total = 1;
  for (int i = 0; i < deg; ++i) {
    coeff_bound[static_cast<std::size_t>(i)] =
        binomial(deg, deg - i) * pow(r, static_cast<unsigned>(deg - i));
    total *= 2 * coeff_bound[static_cast<std::size_t>(i)] + 1;
    if (total > BigInt(kDeskCandidateCap)) {
      throw PreconditionError(
          "coefficients too large for the desk-scale irreducibility scan");
    }
  }
  Poly candidate(static_cast<std::size_t>(deg) + 1, BigInt(0));
  candidate.back() = 1;
  const BigInt f0 = poly_eval(f, 0);
  std::vector<long long> c(static_cast<std::size_t>(deg));
  std::vector<long long> lim(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) {
    lim[static_cast<std::size_t>(i)] =
        static_cast<long long>(coeff_bound[static_cast<std::size_t>(i)]);
    c[static_cast<std::size_t>(i)] = -lim[static_cast<std::size_t>(i)];
  }
  while (true) {
    for (int i = 0; i < deg; ++i) candidate[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    // Constant term of a proper factor divides f(0); cheap rejection first.
    const BigInt c0 = candidate[0];
    const bool plausible = (f0 == 0) ? true : (c0 != 0 && f0 % c0 == 0);
    if (plausible && poly_divides_monic(candidate, f)) return true;
    int pos = 0;
    while (pos < deg) {
      if (++c[static_cast<std::size_t>(pos)] <= lim[static_cast<std::size_t>(pos)]) break;
      c[static_cast<std::size_t>(pos)] = -lim[static_cast<std::size_t>(pos)];
      ++pos;
    }
    if (pos == deg) return false;
  }
}

}  // namespace

bool desk_scale_irreducible(const Poly& f_in) {
  const Poly f = poly_trim(f_in);
  const long long n = poly_degree(f);
  if (n < 1) return false;
  if (f.back() != 1) throw PreconditionError("irreducibility scan expects a monic polynomial");
  if (n > 6) throw PreconditionError("irreducibility scan only covers degree <= 6");
  if (n == 1) return true;
  // A monic integer polynomial's rational roots are integers, so the
  // integer-root scan rules out all linear factors.
  if (has_integer_root(f)) return false;
  // Remaining factorization shapes: 2+2, 2+3, 2+4, 3+3 — a quadratic or
  // cubic factor is present in every one of them.
  if (n >= 4 && has_monic_factor_of_degree(f, 2)) return false;
  if (n == 6 && has_monic_factor_of_degree(f, 3)) return false;
  return true;
}

}  // namespace isr
