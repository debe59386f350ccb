#include "finspinor/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace finspinor {

int levi_civita(std::span<const int> indices) {
  const int n = static_cast<int>(indices.size());
  for (int v : indices) {
    if (v < 1 || v > n) {
      throw DomainError("levi_civita: index " + std::to_string(v) +
                        " outside 1.." + std::to_string(n));
    }
  }
  // Count inversions; a repeated value makes the symbol vanish.
  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (indices[i] == indices[j]) return 0;
      if (indices[i] > indices[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

NSpinor::NSpinor(CVector components) : components_(std::move(components)) {
  if (components_.size() < 2) {
    throw DomainError("NSpinor: dimension must be at least 2");
  }
  for (Eigen::Index i = 0; i < components_.size(); ++i) {
    if (!is_finite(components_(i))) {
      throw DomainError("NSpinor: component " + std::to_string(i) +
                        " is not finite");
    }
  }
}

NSpinor NSpinor::unit(int dim, int a) {
  if (a < 0 || a >= dim) throw DomainError("NSpinor::unit: slot out of range");
  CVector v = CVector::Zero(dim);
  v(a) = 1.0;
  return NSpinor(std::move(v));
}

Complex scalar_n_product(std::span<const NSpinor> spinors) {
  if (spinors.empty()) throw DomainError("scalar_n_product: empty argument list");
  const int n = spinors[0].dim();
  if (static_cast<int>(spinors.size()) != n) {
    throw DomainError("scalar_n_product: expected exactly " +
                      std::to_string(n) + " spinors, got " +
                      std::to_string(spinors.size()));
  }
  for (const NSpinor& s : spinors) {
    if (s.dim() != n) throw DomainError("scalar_n_product: mixed dimensions");
  }

  // Signed sum over permutations: eps_{ab...c} xi^a eta^b ... lambda^c.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Complex value = 0.0;
  double magnitude = 0.0;  // sum of |term|, used to scale the check below
  do {
    const int sign = levi_civita(perm);
    Complex term = static_cast<double>(sign);
    for (int j = 0; j < n; ++j) term *= spinors[j][perm[j] - 1];
    value += term;
    magnitude += std::abs(term);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // The expansion must reproduce the determinant of the column matrix.
  CMatrix m(n, n);
  for (int j = 0; j < n; ++j) m.col(j) = spinors[j].components();
  const Complex det = m.determinant();
  if (std::abs(value - det) > 1e-10 * std::max(1.0, magnitude)) {
    throw std::logic_error("scalar_n_product: permutation expansion disagrees "
                           "with the column determinant");
  }
  return value;
}

BasisChange BasisChange::identity(int dim) {
  if (dim < 2) throw DomainError("BasisChange: dimension must be at least 2");
  return BasisChange(CMatrix::Identity(dim, dim), CMatrix::Identity(dim, dim));
}

BasisChange make_basis_change(const CMatrix& c, double det_tol) {
  if (c.rows() != c.cols()) throw DomainError("make_basis_change: matrix not square");
  if (c.rows() < 2) throw DomainError("make_basis_change: dimension must be at least 2");
  double scale = 0.0;
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if (!is_finite(c(i, j))) throw DomainError("make_basis_change: non-finite entry");
      scale = std::max(scale, std::abs(c(i, j)));
    }
  }

  const Complex det = c.determinant();
  if (std::abs(det) < 1e-12 * std::max(1.0, std::pow(scale, c.rows()))) {
    throw SingularMatrixError("make_basis_change: matrix is singular");
  }
  if (std::abs(det - 1.0) > det_tol) {
    throw NotUnimodularError("make_basis_change: det = (" +
                             std::to_string(det.real()) + ", " +
                             std::to_string(det.imag()) + "), expected 1");
  }

  CMatrix d = c.inverse();
  const double residual = (c * d - CMatrix::Identity(c.rows(), c.cols()))
                              .cwiseAbs()
                              .maxCoeff();
  if (residual > 1e-8 * std::max(1.0, scale)) {
    throw SingularMatrixError("make_basis_change: inverse residual " +
                              std::to_string(residual));
  }
  return BasisChange(c, std::move(d));
}

BasisChange compose(const BasisChange& first, const BasisChange& second) {
  if (first.dim() != second.dim()) throw DomainError("compose: dimension mismatch");
  return BasisChange(first.c() * second.c(), second.d() * first.d());
}

NSpinor transform(const NSpinor& s, const BasisChange& b) {
  if (s.dim() != b.dim()) throw DomainError("transform: dimension mismatch");
  return NSpinor(b.d() * s.components());
}

}  // namespace finspinor
