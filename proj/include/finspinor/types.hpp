#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace finspinor {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Deterministic generator backing every randomized routine; callers seed
/// it explicitly so any run is replayable from a single 64-bit seed.
using Rng = std::mt19937_64;

/// Unimodularity tolerance: |det(c) - 1| must stay below this.
inline constexpr double kDetTol = 1e-9;

/// General comparison tolerance on unit-scale data.
inline constexpr double kCompareTol = 1e-10;

/// Largest imaginary residue tolerated before a value is truncated to real.
inline constexpr double kRealTol = 1e-10;

/// Metric coefficients below this magnitude are stored as exact zeros.
inline constexpr double kZeroSnapTol = 1e-12;

/// Invalid argument: wrong dimensions, bad index, malformed input.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Basis-change matrix whose determinant is not 1 within tolerance.
class NotUnimodularError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Basis-change matrix that is numerically singular.
class SingularMatrixError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A purported Hermitian basis that is linearly dependent over the reals.
class NotABasisError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A value that must be real came out with an imaginary residue above
/// tolerance. Signals an index-convention bug, not bad user input.
class ConventionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace finspinor
