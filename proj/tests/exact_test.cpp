#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/SVD>

#include "isr/exact.hpp"
#include "isr/rng.hpp"

using isr::BigInt;
using isr::IndexSet;
using isr::IntMat;
using isr::RatMat;
using isr::Rational;

namespace {

RatMat random_rat_matrix(isr::Rng& rng, Eigen::Index rows, Eigen::Index cols,
                         long long lo, long long hi) {
  RatMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform_int(lo, hi));
  }
  return m;
}

/* Independent determinant oracle: cofactor expansion along the first row.
   Exponential, so only for the small matrices used here. */
Rational det_cofactor(const RatMat& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  Rational acc(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    RatMat sub(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(i - 1, cc++) = m(i, c);
      }
    }
    const Rational term = m(0, j) * det_cofactor(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

TEST_CASE("bareiss matches cofactor expansion on random matrices") {
  isr::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.below(5));
    const RatMat m = random_rat_matrix(rng, n, n, -9, 9);
    CHECK(isr::det_exact(m) == det_cofactor(m));
  }
}

TEST_CASE("bareiss handles zero pivots and stays exact over rationals") {
  RatMat m(3, 3);
  m << Rational(0), Rational(1), Rational(2),
       Rational(3), Rational(0), Rational(1),
       Rational(1), Rational(1), Rational(0);
  CHECK(isr::det_exact(m) == det_cofactor(m));

  RatMat frac(2, 2);
  frac << Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(2)),
          Rational(BigInt(1), BigInt(5)), Rational(BigInt(1), BigInt(7));
  CHECK(isr::det_exact(frac) == Rational(BigInt(1), BigInt(21)) - Rational(BigInt(1), BigInt(10)));

  RatMat singular(3, 3);
  singular << Rational(1), Rational(2), Rational(3),
              Rational(2), Rational(4), Rational(6),
              Rational(0), Rational(1), Rational(1);
  CHECK(isr::det_exact(singular) == Rational(0));

  CHECK(isr::det_exact(RatMat(0, 0)) == Rational(1));
  CHECK_THROWS_AS(isr::det_exact(RatMat(2, 3)), isr::DimensionError);
}

TEST_CASE("integer bareiss agrees with the rational path") {
  isr::Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.below(5));
    Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
    RatMat q(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const long long v = rng.uniform_int(-9, 9);
        m(i, j) = BigInt(v);
        q(i, j) = Rational(v);
      }
    }
    CHECK(Rational(isr::det_exact_int(m)) == isr::det_exact(q));
  }
}

TEST_CASE("index-set validation rejects unsorted, duplicate, and out-of-range sets") {
  isr::validate_index_set({0, 2, 4}, 5);
  CHECK_THROWS_AS(isr::validate_index_set({2, 1}, 5), isr::PreconditionError);
  CHECK_THROWS_AS(isr::validate_index_set({1, 1}, 5), isr::PreconditionError);
  CHECK_THROWS_AS(isr::validate_index_set({0, 5}, 5), isr::PreconditionError);
  CHECK_THROWS_AS(isr::validate_index_set({-1, 0}, 5), isr::PreconditionError);
}

TEST_CASE("index-set enumeration is lexicographic and complete") {
  std::vector<IndexSet> seen;
  const bool finished = isr::for_each_index_set(5, 3, [&](const IndexSet& s) {
    seen.push_back(s);
    return true;
  });
  CHECK(finished);
  CHECK(seen.size() == 10);
  CHECK(seen.front() == IndexSet{0, 1, 2});
  CHECK(seen.back() == IndexSet{2, 3, 4});
  for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] < seen[i]);

  int count = 0;
  const bool stopped = isr::for_each_index_set(5, 3, [&](const IndexSet&) {
    return ++count < 4;
  });
  CHECK(!stopped);
  CHECK(count == 4);
}

TEST_CASE("binomial against Pascal recurrence") {
  CHECK(isr::binomial(6, 3) == BigInt(20));
  CHECK(isr::binomial(10, 0) == BigInt(1));
  CHECK(isr::binomial(10, 10) == BigInt(1));
  CHECK(isr::binomial(129, 100) == isr::binomial(128, 99) + isr::binomial(128, 100));
}

TEST_CASE("column and row selection, and minors") {
  RatMat m(2, 4);
  m << Rational(1), Rational(2), Rational(3), Rational(4),
       Rational(5), Rational(6), Rational(7), Rational(8);
  const RatMat picked = isr::select_columns(m, {1, 3});
  CHECK(picked(0, 0) == Rational(2));
  CHECK(picked(1, 1) == Rational(8));
  const RatMat rows = isr::select_rows(m, {1});
  CHECK(rows(0, 2) == Rational(7));

  CHECK(isr::minor_det(m, {1, 3}) == Rational(2) * Rational(8) - Rational(4) * Rational(6));
  IntMat mi(2, 4);
  mi << 1, 2, 3, 4, 5, 6, 7, 8;
  CHECK(isr::minor_det_int(mi, {1, 3}) == BigInt(-8));
}

TEST_CASE("exact solve inverts what it solves") {
  isr::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(3));
    RatMat a = random_rat_matrix(rng, n, n, -9, 9);
    if (isr::det_exact(a).is_zero()) continue;
    const RatMat b = random_rat_matrix(rng, n, 2, -9, 9);
    const RatMat x = isr::solve_exact(a, b);
    const RatMat residual = a * x - b;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < 2; ++j) CHECK(residual(i, j).is_zero());
    }
  }

  RatMat singular(2, 2);
  singular << Rational(1), Rational(2), Rational(2), Rational(4);
  RatMat rhs(2, 1);
  rhs << Rational(1), Rational(1);
  CHECK_THROWS_AS(isr::solve_exact(singular, rhs), isr::RankError);
}

TEST_CASE("rank is exact where floating point would waffle") {
  RatMat m(3, 3);
  /* Rank 2 by construction: row3 = row1 + row2 over huge entries. */
  const Rational big(isr::pow(Rational(10), 30).num(), BigInt(1));
  m << big, Rational(1), Rational(0),
       Rational(0), big, Rational(1),
       big, big + Rational(1), Rational(1);
  CHECK(isr::rank_exact(m) == 2);
  CHECK(isr::rank_exact(RatMat::Zero(2, 3)) == 0);
}

TEST_CASE("right inverse is exact and minimum-norm") {
  isr::Rng rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    const RatMat a = random_rat_matrix(rng, 3, 6, -5, 5);
    if (isr::rank_exact(a) < 3) continue;
    const RatMat ap = isr::right_inverse(a);
    const RatMat id = a * ap;
    for (Eigen::Index i = 0; i < 3; ++i) {
      for (Eigen::Index j = 0; j < 3; ++j) {
        CHECK(id(i, j) == (i == j ? Rational(1) : Rational(0)));
      }
    }
    /* Minimum-norm means rows of A′ lie in the row space of A: A′ = Aᵀ·S
       for S = (AAᵀ)⁻¹, so checking A′ᵀ has rank ≤ 3 catches a wrong
       completion that a bare AA′ = I test would accept. */
    CHECK(isr::rank_exact(ap) == 3);
    const RatMat gram = a * a.transpose();
    const RatMat s = isr::solve_exact(gram, RatMat::Identity(3, 3));
    const RatMat expected = a.transpose() * s;
    for (Eigen::Index i = 0; i < 6; ++i) {
      for (Eigen::Index j = 0; j < 3; ++j) CHECK(ap(i, j) == expected(i, j));
    }
  }

  RatMat deficient(2, 3);
  deficient << Rational(1), Rational(2), Rational(3),
               Rational(2), Rational(4), Rational(6);
  CHECK_THROWS_AS(isr::right_inverse(deficient), isr::RankError);
}

TEST_CASE("gram determinant equals the bareiss determinant of M^T M") {
  isr::Rng rng(15);
  for (int trial = 0; trial < 15; ++trial) {
    const RatMat m = random_rat_matrix(rng, 5, 3, -6, 6);
    CHECK(isr::gram_det(m) == isr::det_exact(RatMat(m.transpose() * m)));
    CHECK(isr::gram_det(m) >= Rational(0));
  }
  RatMat dependent(3, 2);
  dependent << Rational(1), Rational(2), Rational(2), Rational(4), Rational(3), Rational(6);
  CHECK(isr::gram_det(dependent) == Rational(0));
}

TEST_CASE("cauchy-binet check validates both expansions") {
  isr::Rng rng(16);
  int tested = 0;
  while (tested < 10) {
    const RatMat a = random_rat_matrix(rng, 3, 5, -5, 5);
    if (isr::rank_exact(a) < 3) continue;
    ++tested;
    const auto result = isr::cauchy_binet_check(a, isr::right_inverse(a));
    CHECK(result.ok);
    CHECK(result.residual == Rational(0));
  }

  /* A right inverse requirement: handing a non-inverse must fail. */
  RatMat a(2, 3);
  a << Rational(1), Rational(0), Rational(0),
       Rational(0), Rational(1), Rational(0);
  const RatMat wrong = RatMat::Zero(3, 2);
  CHECK(!isr::cauchy_binet_check(a, wrong).ok);
}

TEST_CASE("min singular value matches Eigen's SVD") {
  isr::Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXd m(3, 6);
    for (Eigen::Index i = 0; i < 3; ++i) {
      for (Eigen::Index j = 0; j < 6; ++j) m(i, j) = rng.gaussian();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const double expected = svd.singularValues().minCoeff();
    CHECK(isr::min_singular_value(m) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("row norms") {
  Eigen::MatrixXd m(2, 3);
  m << 3, 4, 0, 1, 2, 2;
  const Eigen::VectorXd norms = isr::row_norms(m);
  CHECK(norms(0) == doctest::Approx(5.0));
  CHECK(norms(1) == doctest::Approx(3.0));
}
