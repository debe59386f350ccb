#include "finspinor/herm.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace finspinor {

namespace {

double hermiticity_residual(const CMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double matrix_scale(const CMatrix& m) {
  return std::max(1.0, m.cwiseAbs().maxCoeff());
}

}  // namespace

HermVector::HermVector(CMatrix matrix, double tol) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw DomainError("HermVector: matrix not square");
  }
  if (matrix_.rows() < 2) throw DomainError("HermVector: dimension must be at least 2");
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix_.cols(); ++j) {
      if (!is_finite(matrix_(i, j))) throw DomainError("HermVector: non-finite entry");
    }
  }
  if (hermiticity_residual(matrix_) > tol * matrix_scale(matrix_)) {
    throw DomainError("HermVector: matrix is not Hermitian to tolerance");
  }
}

Spintensor HermVector::to_spintensor() const {
  const int n = dim();
  std::vector<Complex> comps(static_cast<std::size_t>(n) * n);
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      comps[static_cast<std::size_t>(b) * n + c] = matrix_(b, c);
    }
  }
  return Spintensor(n, Valency{.upper_plain = 1, .upper_dotted = 1},
                    std::move(comps));
}

std::vector<CMatrix> dual_basis(const std::vector<HermVector>& elements) {
  if (elements.empty()) throw DomainError("dual_basis: empty element list");
  const int n = elements[0].dim();
  const int count = n * n;
  if (static_cast<int>(elements.size()) != count) {
    throw DomainError("dual_basis: expected " + std::to_string(count) +
                      " elements, got " + std::to_string(elements.size()));
  }
  for (const HermVector& e : elements) {
    if (e.dim() != n) throw DomainError("dual_basis: mixed dimensions");
  }

  // Real Gram matrix of the trace pairing. Traces of products of Hermitian
  // matrices are real; a residue here would mean corrupted elements.
  RMatrix gram(count, count);
  for (int a = 0; a < count; ++a) {
    for (int b = a; b < count; ++b) {
      const Complex t = (elements[a].matrix() * elements[b].matrix()).trace();
      if (std::abs(t.imag()) > kRealTol * std::max(1.0, std::abs(t))) {
        throw ConventionError("dual_basis: complex trace pairing residue");
      }
      gram(a, b) = t.real();
      gram(b, a) = t.real();
    }
  }

  Eigen::FullPivLU<RMatrix> lu(gram);
  if (!lu.isInvertible()) {
    throw NotABasisError("dual_basis: elements are linearly dependent over R");
  }
  const RMatrix ginv = lu.inverse();

  std::vector<CMatrix> duals(count);
  for (int a = 0; a < count; ++a) {
    CMatrix d = CMatrix::Zero(n, n);
    for (int b = 0; b < count; ++b) d += ginv(a, b) * elements[b].matrix();
    duals[a] = std::move(d);
  }
  return duals;
}

HermBasis::HermBasis(std::vector<HermVector> elements)
    : dim_(elements.empty() ? 0 : elements[0].dim()),
      elements_(std::move(elements)) {
  duals_ = dual_basis(elements_);  // validates count and independence

  const int count = size();
  double worst = 0.0;
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      const Complex t = (duals_[a] * elements_[b].matrix()).trace();
      const double expected = a == b ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(t - expected));
    }
  }
  if (worst > kCompareTol) {
    throw NotABasisError("HermBasis: dual normalization residual " +
                         std::to_string(worst));
  }
  for (const CMatrix& d : duals_) {
    if (hermiticity_residual(d) > kCompareTol * matrix_scale(d)) {
      throw NotABasisError("HermBasis: dual element is not Hermitian");
    }
  }
}

Spintensor HermBasis::dual_to_spintensor(int alpha) const {
  if (alpha < 0 || alpha >= size()) throw DomainError("HermBasis: index out of range");
  const CMatrix& d = duals_[alpha];
  const int n = dim_;
  // Stored matrix has the dotted index on rows; the tensor axis order
  // (lower plain, lower dotted) is its transpose.
  std::vector<Complex> comps(static_cast<std::size_t>(n) * n);
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      comps[static_cast<std::size_t>(b) * n + c] = d(c, b);
    }
  }
  return Spintensor(n, Valency{.lower_plain = 1, .lower_dotted = 1},
                    std::move(comps));
}

HermBasis standard_herm_basis(int dim) {
  if (dim < 2) throw DomainError("standard_herm_basis: dimension must be at least 2");
  std::vector<HermVector> elements;
  elements.reserve(static_cast<std::size_t>(dim) * dim);

  elements.emplace_back(CMatrix::Identity(dim, dim));

  // Symmetric pair matrices e_jk + e_kj.
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CMatrix m = CMatrix::Zero(dim, dim);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      elements.emplace_back(std::move(m));
    }
  }
  // Antisymmetric pair matrices -i e_jk + i e_kj.
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CMatrix m = CMatrix::Zero(dim, dim);
      m(j, k) = Complex(0.0, -1.0);
      m(k, j) = Complex(0.0, 1.0);
      elements.emplace_back(std::move(m));
    }
  }
  // Diagonal traceless matrices, scaled to squared trace 2. For dim = 2 the
  // single one is diag(1, -1).
  for (int l = 1; l < dim; ++l) {
    CMatrix m = CMatrix::Zero(dim, dim);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int j = 0; j < l; ++j) m(j, j) = scale;
    m(l, l) = -scale * static_cast<double>(l);
    elements.emplace_back(std::move(m));
  }

  return HermBasis(std::move(elements));
}

FLMatrix epimorphism_L(const BasisChange& change, const HermBasis& basis) {
  if (change.dim() != basis.dim()) {
    throw DomainError("epimorphism_L: dimension mismatch");
  }
  const int count = basis.size();
  RMatrix entries(count, count);
  for (int b = 0; b < count; ++b) {
    const CMatrix image =
        change.c() * basis.elements()[b].matrix() * change.c().adjoint();
    for (int a = 0; a < count; ++a) {
      const Complex t = (basis.duals()[a] * image).trace();
      if (std::abs(t.imag()) > kRealTol * std::max(1.0, std::abs(t))) {
        throw ConventionError("epimorphism_L: imaginary residue " +
                              std::to_string(t.imag()) + " at entry (" +
                              std::to_string(a) + ", " + std::to_string(b) + ")");
      }
      entries(a, b) = t.real();
    }
  }
  return FLMatrix{basis.dim(), std::move(entries)};
}

double check_homomorphism(const BasisChange& b, const BasisChange& c,
                          const HermBasis& basis) {
  if (b.dim() != c.dim() || b.dim() != basis.dim()) {
    throw DomainError("check_homomorphism: dimension mismatch");
  }
  const FLMatrix product = epimorphism_L(make_basis_change(b.c() * c.c()), basis);
  const FLMatrix lb = epimorphism_L(b, basis);
  const FLMatrix lc = epimorphism_L(c, basis);
  return (product.entries - lb.entries * lc.entries).cwiseAbs().maxCoeff();
}

bool is_in_kernel(const BasisChange& change, const HermBasis& basis, double tol) {
  const FLMatrix l = epimorphism_L(change, basis);
  const RMatrix id = RMatrix::Identity(l.entries.rows(), l.entries.cols());
  return (l.entries - id).cwiseAbs().maxCoeff() <= tol;
}

RVector vector_components(const HermVector& x, const HermBasis& basis) {
  if (x.dim() != basis.dim()) {
    throw DomainError("vector_components: dimension mismatch");
  }
  const int count = basis.size();
  RVector comps(count);
  for (int a = 0; a < count; ++a) {
    const Complex t = (basis.duals()[a] * x.matrix()).trace();
    if (std::abs(t.imag()) > kRealTol * std::max(1.0, std::abs(t))) {
      throw ConventionError("vector_components: imaginary residue in component " +
                            std::to_string(a));
    }
    comps(a) = t.real();
  }
  return comps;
}

HermVector herm_from_components(const RVector& components, const HermBasis& basis) {
  if (components.size() != basis.size()) {
    throw DomainError("herm_from_components: expected " +
                      std::to_string(basis.size()) + " components");
  }
  CMatrix m = CMatrix::Zero(basis.dim(), basis.dim());
  for (int a = 0; a < basis.size(); ++a) {
    m += components(a) * basis.elements()[a].matrix();
  }
  return HermVector(std::move(m));
}

}  // namespace finspinor
