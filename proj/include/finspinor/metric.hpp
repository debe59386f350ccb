#pragma once

#include <map>
#include <span>
#include <vector>

#include "finspinor/herm.hpp"
#include "finspinor/types.hpp"

namespace finspinor {

/// Totally symmetric degree-N coefficient array over N^2 component indices,
/// stored sparsely as one value per sorted index multiset. Multisets whose
/// coefficient is below kZeroSnapTol are dropped (treated as exact zeros).
class FinslerMetric {
public:
  FinslerMetric(int dim, std::map<std::vector<int>, double> coefficients);

  int dim() const { return dim_; }

  /// One entry per nonzero sorted multiset of size N over 0..N^2-1.
  const std::map<std::vector<int>, double>& coefficients() const {
    return coefficients_;
  }

  /// Coefficient for an index tuple in any order; 0 when the multiset is
  /// not stored.
  double coefficient(std::vector<int> indices) const;

private:
  int dim_;
  std::map<std::vector<int>, double> coefficients_;
};

/// Determinant of the component matrix: a frame-invariant real number.
/// Throws ConventionError if the determinant has an imaginary residue
/// above kRealTol (cannot happen for a genuinely Hermitian matrix).
double det_invariant(const HermVector& x);

/// The symmetric multilinear form whose diagonal restriction is det,
/// evaluated by inclusion-exclusion over subset sums:
/// (1/N!) sum over nonempty S of (-1)^(N-|S|) det(sum of A_i, i in S).
/// Takes exactly N matrices of size N x N.
Complex mixed_determinant(std::span<const CMatrix> matrices);

/// Coefficient extraction: the value for multiset (a_1, ..., a_N) is the
/// mixed determinant of the corresponding basis elements. Every value is
/// checked real to kRealTol before truncation.
FinslerMetric metric_coefficients(const HermBasis& basis);

/// Degree-N form value: sum over all index tuples of G * X...X, computed
/// from the multiset storage with multinomial multiplicities. Equals
/// det_invariant of the assembled matrix.
double finsler_power(const RVector& components, const FinslerMetric& metric);

/// Draws `samples` random component vectors X (entries uniform in [-1, 1])
/// and returns the largest |finsler_power(X) - finsler_power(L^{-1} X)|.
double check_forminvariance(const FinslerMetric& metric, const FLMatrix& map,
                            int samples, Rng& rng);

}  // namespace finspinor
