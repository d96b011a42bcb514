#pragma once

#include <Eigen/Dense>

#include "isr/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<isr::Rational> : GenericNumTraits<isr::Rational> {
  using Real = isr::Rational;
  using NonInteger = isr::Rational;
  using Nested = isr::Rational;
  using Literal = long long;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };

  static inline Real epsilon() { return isr::Rational(0); }
  static inline Real dummy_precision() { return isr::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace isr {

using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

// Column indices into an m×d matrix: strictly increasing, 0-based in code.
// Files and console output use the 1-based convention of [d] = {1,…,d}.
using IndexSet = std::vector<Eigen::Index>;

inline RatMat to_rational(const IntMat& m) {
  return m.unaryExpr([](long long v) { return Rational(v); });
}

inline Eigen::MatrixXd to_real(const RatMat& m) {
  return m.unaryExpr([](const Rational& r) { return r.to_double(); });
}

inline Eigen::MatrixXd to_real(const IntMat& m) { return m.cast<double>(); }

}  // namespace isr
