#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "finspinor/herm.hpp"
#include "finspinor/metric.hpp"
#include "finspinor/sampling.hpp"
#include "finspinor/spintensor.hpp"
#include "finspinor/types.hpp"
#include "oracles.hpp"

using namespace finspinor;

namespace {

/// Matrix view of a one-upper-plain, one-upper-dotted tensor.
CMatrix tensor_to_matrix(const Spintensor& t) {
  const int n = t.dim();
  CMatrix m(n, n);
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      m(b, c) = t.components()[static_cast<std::size_t>(b) * n + c];
    }
  }
  return m;
}

}  // namespace

TEST_CASE("det_invariant fixtures") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(det_invariant(HermVector(CMatrix::Identity(n, n))) == doctest::Approx(1.0));
  }
  CMatrix x(2, 2);
  x << 3.0, 0.0, 0.0, 1.0;  // sigma_0 * 2 + sigma_3 * 1
  CHECK(det_invariant(HermVector(x)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("determinant is invariant under the tensor transformation") {
  Rng rng(41);
  for (int n = 2; n <= 4; ++n) {
    for (int s = 0; s < 25; ++s) {
      const HermVector x = random_hermitian(n, rng);
      const BasisChange b = random_sl(n, rng);
      const Spintensor moved = transform(x.to_spintensor(), b);
      const HermVector back(tensor_to_matrix(moved));
      CHECK(std::abs(det_invariant(back) - det_invariant(x)) <= 1e-9);
    }
  }
}

TEST_CASE("mixed determinant restricts to det on the diagonal") {
  Rng rng(42);
  for (int n = 2; n <= 4; ++n) {
    const CMatrix a = random_complex_gaussian(n, rng);
    const std::vector<CMatrix> args(n, a);
    const Complex expected = oracle::det_lu(a);
    CHECK(std::abs(mixed_determinant(args) - expected) <=
          1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("Pauli mixed-determinant fixtures") {
  const std::vector<CMatrix> zero_pair{oracle::pauli(0), oracle::pauli(3)};
  CHECK(std::abs(mixed_determinant(zero_pair)) <= 1e-14);
  const std::vector<CMatrix> unit_pair{oracle::pauli(0), oracle::pauli(0)};
  CHECK(std::abs(mixed_determinant(unit_pair) - 1.0) <= 1e-14);
  const std::vector<CMatrix> minus_pair{oracle::pauli(3), oracle::pauli(3)};
  CHECK(std::abs(mixed_determinant(minus_pair) + 1.0) <= 1e-14);
}

TEST_CASE("mixed determinant is symmetric in its arguments") {
  Rng rng(43);
  for (int s = 0; s < 20; ++s) {
    std::vector<CMatrix> args{random_complex_gaussian(3, rng),
                              random_complex_gaussian(3, rng),
                              random_complex_gaussian(3, rng)};
    const Complex base = mixed_determinant(args);
    std::vector<CMatrix> perm{args[2], args[0], args[1]};
    CHECK(std::abs(mixed_determinant(perm) - base) <= 1e-12);
    std::swap(args[0], args[1]);
    CHECK(std::abs(mixed_determinant(args) - base) <= 1e-12);
  }
}

TEST_CASE("mixed determinant validates its arguments") {
  CHECK_THROWS_AS((void)mixed_determinant({}), DomainError);
  const std::vector<CMatrix> wrong{CMatrix::Identity(2, 2)};  // 1 matrix, 2x2
  CHECK_THROWS_AS((void)mixed_determinant(wrong), DomainError);
}

TEST_CASE("FinslerMetric validates stored coefficients") {
  std::map<std::vector<int>, double> good{{{0, 0}, 1.0}};
  CHECK_NOTHROW(FinslerMetric(2, good));

  std::map<std::vector<int>, double> unsorted{{{3, 1}, 1.0}};
  CHECK_THROWS_AS(FinslerMetric(2, unsorted), DomainError);
  std::map<std::vector<int>, double> out_of_range{{{0, 4}, 1.0}};
  CHECK_THROWS_AS(FinslerMetric(2, out_of_range), DomainError);
  std::map<std::vector<int>, double> wrong_size{{{0, 0, 0}, 1.0}};
  CHECK_THROWS_AS(FinslerMetric(2, wrong_size), DomainError);
  std::map<std::vector<int>, double> non_finite{{{0, 0}, std::nan("")}};
  CHECK_THROWS_AS(FinslerMetric(2, non_finite), DomainError);
  CHECK_THROWS_AS(FinslerMetric(1, {}), DomainError);

  const FinslerMetric metric(2, good);
  CHECK(metric.coefficient({0, 0}) == 1.0);
  CHECK(metric.coefficient({1, 0}) == 0.0);
}

TEST_CASE("N = 2 metric is the Minkowski quadratic form") {
  const FinslerMetric metric = metric_coefficients(standard_herm_basis(2));
  REQUIRE(metric.dim() == 2);
  // Exactly four stored coefficients: the diagonal signature (1, -1, -1, -1).
  CHECK(metric.coefficients().size() == 4);
  CHECK(std::abs(metric.coefficient({0, 0}) - 1.0) <= 1e-12);
  CHECK(std::abs(metric.coefficient({1, 1}) + 1.0) <= 1e-12);
  CHECK(std::abs(metric.coefficient({2, 2}) + 1.0) <= 1e-12);
  CHECK(std::abs(metric.coefficient({3, 3}) + 1.0) <= 1e-12);
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      CHECK(metric.coefficient({a, b}) == 0.0);  // snapped to exact zero
    }
  }
}

TEST_CASE("leading diagonal coefficient is det of the identity element") {
  for (int n = 2; n <= 4; ++n) {
    const FinslerMetric metric = metric_coefficients(standard_herm_basis(n));
    const std::vector<int> zeros(n, 0);
    CHECK(std::abs(metric.coefficient(zeros) - 1.0) <= 1e-12);
  }
}

TEST_CASE("cubic form at N = 3 agrees with det on random data") {
  Rng rng(44);
  const HermBasis basis = standard_herm_basis(3);
  const FinslerMetric metric = metric_coefficients(basis);
  for (int s = 0; s < 200; ++s) {
    const HermVector x = random_hermitian(3, rng);
    const double via_form = finsler_power(vector_components(x, basis), metric);
    const double via_det = det_invariant(x);
    CHECK(std::abs(via_form - via_det) <= 1e-9 * std::max(1.0, std::abs(via_det)));
  }
}

TEST_CASE("finsler_power fixtures, homogeneity, and validation") {
  const HermBasis basis = standard_herm_basis(2);
  const FinslerMetric metric = metric_coefficients(basis);

  RVector unit = RVector::Zero(4);
  unit(0) = 1.0;
  CHECK(finsler_power(unit, metric) == doctest::Approx(1.0).epsilon(1e-12));

  RVector x(4);
  x << 2.0, 0.0, 0.0, 1.0;
  CHECK(finsler_power(x, metric) == doctest::Approx(3.0).epsilon(1e-12));  // 4 - 1

  Rng rng(45);
  std::uniform_real_distribution<double> scale(-2.0, 2.0);
  for (int s = 0; s < 50; ++s) {
    const RVector y = random_real_vector(4, rng);
    const double t = scale(rng);
    const double lhs = finsler_power(t * y, metric);
    const double rhs = t * t * finsler_power(y, metric);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }

  CHECK_THROWS_AS((void)finsler_power(RVector::Zero(5), metric), DomainError);
}

TEST_CASE("the form is indefinite") {
  for (int n = 2; n <= 4; ++n) {
    const HermBasis basis = standard_herm_basis(n);
    const FinslerMetric metric = metric_coefficients(basis);
    const double plus =
        finsler_power(vector_components(HermVector(CMatrix::Identity(n, n)), basis),
                      metric);
    CMatrix flipped = CMatrix::Identity(n, n);
    flipped(0, 0) = -1.0;
    const double minus =
        finsler_power(vector_components(HermVector(flipped), basis), metric);
    CHECK(plus > 0.5);
    CHECK(minus < -0.5);
  }
}

TEST_CASE("check_forminvariance on fixtures and random changes") {
  Rng rng(46);
  const HermBasis basis2 = standard_herm_basis(2);
  const FinslerMetric metric2 = metric_coefficients(basis2);

  const FLMatrix identity_map{2, RMatrix::Identity(4, 4)};
  CHECK(check_forminvariance(metric2, identity_map, 10, rng) == 0.0);

  CMatrix c(2, 2);
  c << 2.0, 0.0, 0.0, 0.5;
  const FLMatrix boost = epimorphism_L(make_basis_change(c), basis2);
  CHECK(check_forminvariance(metric2, boost, 100, rng) <= 1e-10);

  const HermBasis basis3 = standard_herm_basis(3);
  const FinslerMetric metric3 = metric_coefficients(basis3);
  for (int s = 0; s < 5; ++s) {
    const FLMatrix map = epimorphism_L(random_sl(3, rng), basis3);
    CHECK(check_forminvariance(metric3, map, 100, rng) <= 1e-8);
  }

  CHECK_THROWS_AS((void)check_forminvariance(metric2, identity_map, 0, rng),
                  DomainError);
  const FLMatrix mismatched{3, RMatrix::Identity(9, 9)};
  CHECK_THROWS_AS((void)check_forminvariance(metric2, mismatched, 5, rng),
                  DomainError);
}

TEST_CASE("component form is invariant under the inverse-map action") {
  // Components of the transformed tensor are the inverse image acting on the
  // original components; the degree-N form takes the same value on both.
  Rng rng(47);
  for (int n = 2; n <= 3; ++n) {
    const HermBasis basis = standard_herm_basis(n);
    const FinslerMetric metric = metric_coefficients(basis);
    for (int s = 0; s < 20; ++s) {
      const BasisChange b = random_sl(n, rng);
      const HermVector x = random_hermitian(n, rng);
      const Spintensor moved = transform(x.to_spintensor(), b);
      const RVector direct = vector_components(HermVector(tensor_to_matrix(moved)), basis);
      const FLMatrix inverse_map = epimorphism_L(b.inverse(), basis);
      const RVector mapped = inverse_map.entries * vector_components(x, basis);
      CHECK((direct - mapped).cwiseAbs().maxCoeff() <= 1e-9);
      CHECK(std::abs(finsler_power(direct, metric) -
                     finsler_power(vector_components(x, basis), metric)) <= 1e-8);
    }
  }
}
