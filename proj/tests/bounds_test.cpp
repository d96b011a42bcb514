#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <optional>
#include <vector>

#include "isr/bounds.hpp"
#include "isr/forge.hpp"
#include "isr/rng.hpp"

using isr::BigInt;
using isr::IndexSet;
using isr::IntMat;
using isr::IntVec;
using isr::RatMat;
using isr::Rational;
using isr::SparseIntSignal;

namespace {

RatMat rat_from(const IntMat& a) { return isr::to_rational(a); }

IntMat mat_3x5_skew() {
  IntMat a(3, 5);
  a << 15, 15, 4, 13, 15,
       2, -1, -15, 2, -13,
       -13, 2, 1, -15, 4;
  return a;
}

/* Plain lexicographic sweep used as the order oracle for the witness
   search: supports of size 1..rows in lexicographic order, values over
   {−box..box}\{0} with the last coordinate moving fastest. */
std::optional<IntVec> witness_by_scan(const Eigen::MatrixXd& a, double bound, long long box) {
  const double limit = bound * (1.0 + 1e-9);
  const Eigen::Index d = a.cols();
  for (Eigen::Index j = 1; j <= a.rows(); ++j) {
    std::optional<IntVec> hit;
    isr::for_each_index_set(d, j, [&](const IndexSet& support) {
      std::vector<long long> vals(static_cast<std::size_t>(j), -box);
      for (;;) {
        IntVec x = IntVec::Zero(d);
        for (std::size_t p = 0; p < support.size(); ++p) x(support[p]) = vals[p];
        if ((a * x.cast<double>()).norm() <= limit) {
          hit = x;
          return false;
        }
        std::size_t i = vals.size();
        for (; i-- > 0;) {
          if (++vals[i] == 0) vals[i] = 1;
          if (vals[i] <= box) break;
          vals[i] = -box;
        }
        if (i == static_cast<std::size_t>(-1)) break;
      }
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("determinantal and entry bounds of a fixed skewed matrix") {
  const isr::BoundReport rep = isr::sparse_minkowski_bound(rat_from(mat_3x5_skew()), "skew");
  CHECK(rep.matrix_id == "skew");
  /* det(AAᵀ) = 60242612 exactly, so det(A′ᵀA′) is its reciprocal and the
     bound is √3 · 60242612^(1/6). */
  CHECK(rep.gram_det == Rational(BigInt(1), BigInt(60242612)));
  CHECK(rep.minkowski_bound == doctest::Approx(34.2934564208).epsilon(1e-9));
  CHECK(rep.naive_bound == doctest::Approx(15.0 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK(rep.index_set == IndexSet{0, 1, 2});

  CHECK(isr::naive_bound(rat_from(mat_3x5_skew())) ==
        doctest::Approx(15.0 * std::sqrt(3.0)));
}

TEST_CASE("the determinantal bound scales linearly with the matrix") {
  const RatMat a = rat_from(mat_3x5_skew());
  RatMat doubled = a;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) doubled(i, j) = a(i, j) * Rational(2);
  }
  const double one = isr::sparse_minkowski_bound(a).minkowski_bound;
  const double two = isr::sparse_minkowski_bound(doubled).minkowski_bound;
  CHECK(two == doctest::Approx(2.0 * one).epsilon(1e-12));
}

TEST_CASE("the bound dominates every column-subset lattice bound") {
  /* det(AAᵀ) = Σ_J det(A_J)² ≥ det(A_J)² gives
     √m·det(AAᵀ)^{1/2m} ≥ √m·|det A_J|^{1/m} for each subset J; the
     short-vector theorem on the best A_J is what makes the bound
     attainable. Verified here subset by subset on certified draws. */
  int checked = 0;
  for (unsigned attempt = 0; checked < 8; ++attempt) {
    REQUIRE(attempt < 100);
    isr::GenSpec spec;
    spec.model = isr::GenModel::uniform_k;
    spec.m = 3;
    spec.d = 6;
    spec.k = 7;
    spec.seed = isr::derive_seed(400, attempt);
    isr::SensingMatrix sm;
    try {
      sm = isr::gen_verified(spec, 30).matrix;
    } catch (const isr::PreconditionError&) {
      continue;
    }
    const RatMat a = sm.rational();
    const double bound = isr::sparse_minkowski_bound(a).minkowski_bound;
    isr::for_each_index_set(6, 3, [&](const IndexSet& cols) {
      const Rational dj = isr::minor_det(a, cols);
      const double sub_bound =
          std::sqrt(3.0) * std::pow(std::abs(dj.to_double()), 1.0 / 3.0);
      CHECK(bound >= sub_bound - 1e-9);
      return true;
    });
    ++checked;
  }
}

TEST_CASE("a witness at the bound exists inside the default box") {
  std::vector<IntMat> cases;
  cases.push_back(mat_3x5_skew());
  {
    IntMat b(2, 4);
    b << 3, 1, -2, 5,
         1, -4, 2, 3;
    cases.push_back(b);
  }
  {
    IntMat c(3, 6);
    c << 1, 1, 1, 1, 1, 1,
         1, 1, 0, 0, -1, -1,
         1, 0, 1, -1, 0, -1;
    cases.push_back(c);
  }
  for (const IntMat& m : cases) {
    const RatMat a = rat_from(m);
    const double bound = isr::sparse_minkowski_bound(a).minkowski_bound;
    const long long box = isr::default_witness_box(a, bound);
    const auto w = isr::find_sparse_witness(isr::to_real(m), bound, box);
    REQUIRE(w.has_value());
    CHECK(w->sparsity() >= 1);
    CHECK(w->sparsity() <= m.rows());
    const double norm = (isr::to_real(m) * w->dense().cast<double>()).norm();
    CHECK(norm <= bound * (1.0 + 1e-9));
  }
}

TEST_CASE("witness search reproduces the plain lexicographic first hit") {
  isr::Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index m = 2 + static_cast<Eigen::Index>(rng.below(2));
    const Eigen::Index d = m + 1 + static_cast<Eigen::Index>(rng.below(3));
    IntMat mat(m, d);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) mat(i, j) = rng.uniform_int(-6, 6);
    }
    const Eigen::MatrixXd a = isr::to_real(mat);
    const double bound = 1.5 + 4.0 * rng.uniform01();
    const auto fast = isr::find_sparse_witness(a, bound, 4);
    const auto slow = witness_by_scan(a, bound, 4);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK((fast->dense().array() == slow->array()).all());
    }
  }

  CHECK_THROWS_AS(isr::find_sparse_witness(Eigen::MatrixXd::Identity(3, 3), -1.0, 4),
                  isr::PreconditionError);
  CHECK_THROWS_AS(isr::find_sparse_witness(Eigen::MatrixXd::Identity(3, 3), 1.0, 0),
                  isr::PreconditionError);
  CHECK_THROWS_AS(
      isr::find_sparse_witness(Eigen::MatrixXd::Random(4, 12), 1e-9, 1000, 100),
      isr::ResourceError);
}

TEST_CASE("default witness box follows the right-inverse column norms") {
  /* Identity: A′ = I, max column norm 1, so the box is ceil(bound) + 5. */
  IntMat eye = IntMat::Identity(3, 3);
  CHECK(isr::default_witness_box(rat_from(eye), 2.3) == 8);
  CHECK(isr::default_witness_box(rat_from(eye), 3.0) == 8);
  CHECK(isr::default_witness_box(rat_from(eye), 3.5) == 9);
}

TEST_CASE("linear-forms feasibility compares the box volume exactly") {
  /* B = I: the condition is ∏ c_i ≥ 1, checked as (∏c)² ≥ 1. */
  isr::LinearFormsBox box;
  box.b = rat_from(IntMat::Identity(2, 2));
  box.index_set = {0, 1};
  box.c = {Rational(2), Rational(1, 2)};
  CHECK(isr::linear_forms_feasible(box));  // product exactly 1
  box.c = {Rational(2), Rational(1, 3)};
  CHECK(!isr::linear_forms_feasible(box));  // product 2/3 < 1
  box.c = {Rational(3), Rational(1, 2)};
  CHECK(isr::linear_forms_feasible(box));

  /* Diagonal B = diag(2, 2): B⁻¹ = diag(1/2, 1/2), det(B⁻ᵀB⁻¹) = 1/16,
     so the requirement is ∏c ≥ 4. */
  isr::LinearFormsBox scaled;
  scaled.b = rat_from(IntMat(IntMat::Identity(2, 2) * 2));
  scaled.index_set = {0, 1};
  scaled.c = {Rational(2), Rational(2)};
  CHECK(isr::linear_forms_feasible(scaled));  // exactly on the boundary
  scaled.c = {Rational(2), Rational(39, 20)};
  CHECK(!isr::linear_forms_feasible(scaled));
}

TEST_CASE("cube-image volume condition and membership") {
  /* diag(2,2): the image of the side-1 cube is the side-2 square, and
     det(A_IᵀA_I) = 16 ≥ 4² holds with equality at I = {0,1}. */
  const RatMat d2 = rat_from(IntMat(IntMat::Identity(2, 2) * 2));
  CHECK(isr::proposition_volume_check(d2, {0, 1}));
  CHECK(isr::proposition_volume_check(d2, {0}));  // 4 ≥ 4

  const RatMat eye = rat_from(IntMat(IntMat::Identity(2, 2)));
  CHECK(!isr::proposition_volume_check(eye, {0}));  // 1 < 4

  IntVec corner(2);
  corner << 1, 1;
  CHECK(isr::parallelepiped_contains(d2, corner));  // exactly on the boundary
  IntVec outside(2);
  outside << 2, 0;
  CHECK(!isr::parallelepiped_contains(d2, outside));
  CHECK(isr::parallelepiped_contains(d2, IntVec::Zero(2)));

  const auto p = isr::find_parallelepiped_point(d2, 1, 3);
  REQUIRE(p.has_value());
  CHECK((*p)(0) == -1);
  CHECK((*p)(1) == 0);
}

TEST_CASE("a sheared square passes the volume check yet traps no sparse point") {
  /* det = 1 and both inverse columns are long: every 1-sparse integer
     point lands outside the half-cube image, so volume alone does not
     manufacture a witness. */
  IntMat shear(2, 2);
  shear << 3, 1,
           2, 1;
  const RatMat a = rat_from(shear);
  CHECK(isr::proposition_volume_check(a, {0}));  // column (3,2): 13 ≥ 4
  CHECK(!isr::find_parallelepiped_point(a, 1, 50).has_value());
}
