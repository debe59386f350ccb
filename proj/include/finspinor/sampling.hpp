#pragma once

#include "finspinor/herm.hpp"
#include "finspinor/spinor.hpp"
#include "finspinor/types.hpp"

namespace finspinor {

/// Matrix with i.i.d. standard complex normal entries
/// (real and imaginary parts each N(0, 1/2)).
CMatrix random_complex_gaussian(int dim, Rng& rng);

/// Random unimodular matrix: a complex Gaussian matrix divided by the
/// principal N-th root of its determinant. Resamples while |det| < 1e-6.
BasisChange random_sl(int dim, Rng& rng);

/// Random Hermitian matrix (A + A^dagger) / 2 with A complex Gaussian.
HermVector random_hermitian(int dim, Rng& rng);

NSpinor random_spinor(int dim, Rng& rng);

RVector random_real_vector(int size, Rng& rng, double lo = -1.0, double hi = 1.0);

}  // namespace finspinor
