#include "finspinor/metric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace finspinor {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Number of distinct orderings of a sorted multiset: N! / prod(count!).
double multinomial_multiplicity(const std::vector<int>& sorted) {
  double denom = 1.0;
  int run = 1;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
      ++run;
    } else {
      denom *= factorial(run);
      run = 1;
    }
  }
  return factorial(static_cast<int>(sorted.size())) / denom;
}

}  // namespace

FinslerMetric::FinslerMetric(int dim,
                             std::map<std::vector<int>, double> coefficients)
    : dim_(dim), coefficients_(std::move(coefficients)) {
  if (dim_ < 2) throw DomainError("FinslerMetric: dimension must be at least 2");
  const int limit = dim_ * dim_;
  for (const auto& [indices, value] : coefficients_) {
    if (static_cast<int>(indices.size()) != dim_) {
      throw DomainError("FinslerMetric: multiset size must equal the dimension");
    }
    if (!std::is_sorted(indices.begin(), indices.end())) {
      throw DomainError("FinslerMetric: multiset indices must be sorted");
    }
    if (indices.front() < 0 || indices.back() >= limit) {
      throw DomainError("FinslerMetric: index outside 0.." + std::to_string(limit - 1));
    }
    if (!std::isfinite(value)) throw DomainError("FinslerMetric: non-finite value");
  }
}

double FinslerMetric::coefficient(std::vector<int> indices) const {
  std::sort(indices.begin(), indices.end());
  const auto it = coefficients_.find(indices);
  return it == coefficients_.end() ? 0.0 : it->second;
}

double det_invariant(const HermVector& x) {
  const Complex det = x.matrix().determinant();
  if (std::abs(det.imag()) > kRealTol * std::max(1.0, std::abs(det))) {
    throw ConventionError("det_invariant: imaginary residue " +
                          std::to_string(det.imag()));
  }
  return det.real();
}

Complex mixed_determinant(std::span<const CMatrix> matrices) {
  const int n = static_cast<int>(matrices.size());
  if (n == 0) throw DomainError("mixed_determinant: empty argument list");
  for (const CMatrix& m : matrices) {
    if (m.rows() != n || m.cols() != n) {
      throw DomainError("mixed_determinant: needs exactly N matrices of size N x N");
    }
  }

  Complex total = 0.0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    CMatrix sum = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) sum += matrices[i];
    }
    const int picked = std::popcount(mask);
    const double sign = (n - picked) % 2 == 0 ? 1.0 : -1.0;
    total += sign * sum.determinant();
  }
  return total / factorial(n);
}

FinslerMetric metric_coefficients(const HermBasis& basis) {
  const int n = basis.dim();
  const int limit = n * n;

  std::map<std::vector<int>, double> coeffs;
  std::vector<int> multiset(n, 0);
  std::vector<CMatrix> args(n);
  while (true) {
    for (int i = 0; i < n; ++i) args[i] = basis.elements()[multiset[i]].matrix();
    const Complex value = mixed_determinant(args);
    if (std::abs(value.imag()) > kRealTol * std::max(1.0, std::abs(value))) {
      throw ConventionError("metric_coefficients: imaginary residue in coefficient");
    }
    if (std::abs(value.real()) >= kZeroSnapTol) {
      coeffs.emplace(multiset, value.real());
    }

    // Next nondecreasing multiset.
    int pos = n - 1;
    while (pos >= 0 && multiset[pos] == limit - 1) --pos;
    if (pos < 0) break;
    const int next = multiset[pos] + 1;
    for (int i = pos; i < n; ++i) multiset[i] = next;
  }
  return FinslerMetric(n, std::move(coeffs));
}

double finsler_power(const RVector& components, const FinslerMetric& metric) {
  const int count = metric.dim() * metric.dim();
  if (components.size() != count) {
    throw DomainError("finsler_power: expected " + std::to_string(count) +
                      " components");
  }
  double total = 0.0;
  for (const auto& [indices, value] : metric.coefficients()) {
    double product = value * multinomial_multiplicity(indices);
    for (int idx : indices) product *= components(idx);
    total += product;
  }
  return total;
}

double check_forminvariance(const FinslerMetric& metric, const FLMatrix& map,
                            int samples, Rng& rng) {
  const int count = metric.dim() * metric.dim();
  if (map.dim != metric.dim() || map.entries.rows() != count ||
      map.entries.cols() != count) {
    throw DomainError("check_forminvariance: dimension mismatch");
  }
  if (samples < 1) throw DomainError("check_forminvariance: samples must be positive");

  const RMatrix inverse = map.entries.inverse();
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    RVector x(count);
    for (int i = 0; i < count; ++i) x(i) = unit(rng);
    const double direct = finsler_power(x, metric);
    const double mapped = finsler_power(inverse * x, metric);
    worst = std::max(worst, std::abs(direct - mapped));
  }
  return worst;
}

}  // namespace finspinor
