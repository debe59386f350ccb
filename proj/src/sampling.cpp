#include "finspinor/sampling.hpp"

#include <cmath>

namespace finspinor {

CMatrix random_complex_gaussian(int dim, Rng& rng) {
  if (dim < 1) throw DomainError("random_complex_gaussian: bad dimension");
  std::normal_distribution<double> part(0.0, std::sqrt(0.5));
  CMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = part(rng);
      const double im = part(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

BasisChange random_sl(int dim, Rng& rng) {
  if (dim < 2) throw DomainError("random_sl: dimension must be at least 2");
  while (true) {
    CMatrix m = random_complex_gaussian(dim, rng);
    const Complex det = m.determinant();
    if (std::abs(det) < 1e-6) continue;
    // Principal branch of the N-th root; any branch differs only by a
    // kernel element.
    m /= std::pow(det, 1.0 / dim);
    return make_basis_change(m);
  }
}

HermVector random_hermitian(int dim, Rng& rng) {
  const CMatrix a = random_complex_gaussian(dim, rng);
  return HermVector((a + a.adjoint()) / 2.0);
}

NSpinor random_spinor(int dim, Rng& rng) {
  if (dim < 2) throw DomainError("random_spinor: dimension must be at least 2");
  std::normal_distribution<double> part(0.0, std::sqrt(0.5));
  CVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = part(rng);
    const double im = part(rng);
    v(i) = Complex(re, im);
  }
  return NSpinor(std::move(v));
}

RVector random_real_vector(int size, Rng& rng, double lo, double hi) {
  if (size < 1) throw DomainError("random_real_vector: bad size");
  std::uniform_real_distribution<double> dist(lo, hi);
  RVector v(size);
  for (int i = 0; i < size; ++i) v(i) = dist(rng);
  return v;
}

}  // namespace finspinor
