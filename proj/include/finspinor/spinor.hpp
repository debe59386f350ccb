#pragma once

#include <span>

#include "finspinor/types.hpp"

namespace finspinor {

/// Sign of the index tuple (1-based entries in 1..N, N = indices.size()):
/// +1 for even permutations of (1,...,N), -1 for odd ones, 0 whenever an
/// index repeats. Normalized so that (1,2,...,N) -> +1.
/// Throws DomainError on an entry outside 1..N.
int levi_civita(std::span<const int> indices);

/// Element of the N-dimensional complex spinor space, stored as components
/// relative to a fixed canonical basis. Immutable.
class NSpinor {
public:
  /// Requires size >= 2 and finite entries.
  explicit NSpinor(CVector components);

  /// Canonical basis spinor: 1 in slot `a` (0-based), 0 elsewhere.
  static NSpinor unit(int dim, int a);

  int dim() const { return static_cast<int>(components_.size()); }
  const CVector& components() const { return components_; }
  Complex operator[](int a) const { return components_(a); }

private:
  CVector components_;
};

/// Antisymmetric N-linear scalar product of exactly N spinors of common
/// dimension N: the signed sum over permutations of component products.
/// The value always equals the determinant of the matrix whose j-th column
/// is spinors[j]; that identity is recomputed on every call as an internal
/// consistency check (std::logic_error on mismatch).
Complex scalar_n_product(std::span<const NSpinor> spinors);

/// A change between canonical bases: a unimodular complex matrix c together
/// with its inverse coefficients d.
///
/// Entry convention: c(b, a) holds the coefficient of old basis spinor b in
/// the expansion of new basis spinor a, so column a of c is the new basis
/// spinor a written in the old basis. d is the matrix inverse of c; spinor
/// components transform with d (contragradiently to the basis).
class BasisChange {
public:
  static BasisChange identity(int dim);

  int dim() const { return static_cast<int>(c_.rows()); }
  const CMatrix& c() const { return c_; }
  const CMatrix& d() const { return d_; }

  /// The change undoing this one (swaps c and d).
  BasisChange inverse() const { return BasisChange(d_, c_); }

private:
  friend BasisChange make_basis_change(const CMatrix& c, double det_tol);
  friend BasisChange compose(const BasisChange& first, const BasisChange& second);
  BasisChange(CMatrix c, CMatrix d) : c_(std::move(c)), d_(std::move(d)) {}

  CMatrix c_;
  CMatrix d_;
};

/// Validates that c is square (N >= 2), finite, nonsingular and unimodular
/// (|det c - 1| <= det_tol), and computes d = c^{-1}.
/// Throws SingularMatrixError / NotUnimodularError / DomainError.
BasisChange make_basis_change(const CMatrix& c, double det_tol = kDetTol);

/// The single change equivalent to applying `first` and then `second`.
///
/// Its c-matrix is first.c() * second.c(): the second change is read
/// relative to the basis produced by the first, so component
/// transformations (which act through d = c^{-1}) chain as
/// d_second * d_first. Transforming by `first` then `second` agrees with
/// transforming once by compose(first, second).
BasisChange compose(const BasisChange& first, const BasisChange& second);

/// Components of the same spinor relative to the new basis: xi' = d * xi.
NSpinor transform(const NSpinor& s, const BasisChange& b);

}  // namespace finspinor
