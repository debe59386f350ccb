#pragma once

#include <vector>

#include "finspinor/spintensor.hpp"
#include "finspinor/types.hpp"

namespace finspinor {

/// Element of Herm(N): a spintensor with one upper plain and one upper
/// dotted index whose components are Hermitian-symmetric. Stored as an N x N
/// complex matrix with the plain index on rows and the dotted index on
/// columns. Throws DomainError when the matrix is not Hermitian to `tol`
/// (scaled by the largest entry).
class HermVector {
public:
  explicit HermVector(CMatrix matrix, double tol = kCompareTol);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix& matrix() const { return matrix_; }

  /// One-upper-plain, one-upper-dotted tensor view for the generic engine.
  Spintensor to_spintensor() const;

private:
  CMatrix matrix_;
};

/// Dual family of a Hermitian basis: the unique lower-index Hermitian
/// spintensors whose full contraction with the basis elements is the
/// Kronecker delta.
///
/// Matrix convention for the lower index pair: the dotted index is the row
/// and the plain index the column, so the pairing is a plain matrix trace,
/// trace(dual[a] * basis[b].matrix()) = delta^a_b, and for N = 2 the duals
/// of the Pauli basis come out entrywise as the half Pauli matrices.
/// Computed as dual[a] = sum_b Ginv(a, b) * basis[b].matrix() with G the
/// real Gram matrix of the trace pairing.
/// Throws NotABasisError when the Gram matrix is singular.
std::vector<CMatrix> dual_basis(const std::vector<HermVector>& elements);

/// An ordered basis of Herm(N) (N*N elements) together with its dual family.
class HermBasis {
public:
  /// Validates the element count, computes the duals, and verifies the
  /// delta normalization to kCompareTol.
  explicit HermBasis(std::vector<HermVector> elements);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<HermVector>& elements() const { return elements_; }
  const std::vector<CMatrix>& duals() const { return duals_; }

  /// Lower-index tensor view of dual element `alpha`. Axis order is
  /// (lower plain, lower dotted), i.e. the transpose of the stored matrix.
  Spintensor dual_to_spintensor(int alpha) const;

private:
  int dim_;
  std::vector<HermVector> elements_;
  std::vector<CMatrix> duals_;
};

/// The canonical basis used throughout: identity first, then the symmetric
/// and antisymmetric pair matrices in lexicographic (j, k) order, then the
/// scaled diagonal traceless matrices. For N = 2 this is exactly
/// (sigma_0, sigma_1, sigma_2, sigma_3). Requires N >= 2.
HermBasis standard_herm_basis(int dim);

/// Identifier of the standard basis construction, recorded in files.
inline constexpr const char* kStandardBasisId = "gellmann-v1";

/// Real N^2 x N^2 matrix representing the action of a basis change on
/// Herm(N) component vectors.
struct FLMatrix {
  int dim = 0;          // N; entries is N^2 x N^2
  RMatrix entries;
};

/// The induced linear map on Herm(N): entry (a, b) is
/// trace(dual[a] * c * basis[b] * c_adjoint). Entries are checked to be
/// real to kRealTol and then truncated; a larger imaginary residue throws
/// ConventionError. Multiplicative in the c-matrix: L of a matrix product
/// is the product of the L images, so L(compose(b1, b2)) = L(b1) * L(b2).
FLMatrix epimorphism_L(const BasisChange& change, const HermBasis& basis);

/// Max entrywise deviation of L(B*C) from L(B)*L(C), where B*C is the
/// matrix product of the two c-matrices.
double check_homomorphism(const BasisChange& b, const BasisChange& c,
                          const HermBasis& basis);

/// True iff L(change) is the identity to `tol`. Exactly the N scalar
/// matrices exp(2 pi i k / N) * identity land here.
bool is_in_kernel(const BasisChange& change, const HermBasis& basis,
                  double tol = 1e-9);

/// Real expansion coefficients of X in the basis, via the dual pairing.
RVector vector_components(const HermVector& x, const HermBasis& basis);

/// Reassembles sum_a components(a) * basis[a].
HermVector herm_from_components(const RVector& components, const HermBasis& basis);

}  // namespace finspinor
