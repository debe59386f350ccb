#pragma once

// Reference implementations used only by tests. Each one deliberately takes
// a different route than the library (and avoids Eigen where the library
// leans on it) so that agreement is a genuine cross-check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "finspinor/types.hpp"

namespace oracle {

using finspinor::CMatrix;
using finspinor::Complex;
using finspinor::RMatrix;

/// Determinant by hand-rolled partial-pivot Gaussian elimination.
inline Complex det_lu(const CMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      const Complex f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

/// Permutation sign via cycle decomposition (1-based entries); zero when
/// the tuple is not a permutation of 1..N.
inline int sign_by_cycles(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> count(n + 1, 0);
  for (int v : p) {
    if (v < 1 || v > n || ++count[v] > 1) return 0;
  }
  std::vector<bool> seen(n, false);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j] - 1) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Brute-force transformation law for a rank-4 tensor carrying one index of
/// each kind, flat axis order (upper plain, upper dotted, lower plain,
/// lower dotted), last axis fastest:
///   out[b][g][a][h] = sum d(b,f) conj(d(g,gg)) c(e,a) conj(c(hh,h)) in[f][gg][e][hh]
inline std::vector<Complex> transform_full_brute(const std::vector<Complex>& in,
                                                 const CMatrix& c,
                                                 const CMatrix& d) {
  const int n = static_cast<int>(c.rows());
  const auto flat = [n](int i0, int i1, int i2, int i3) {
    return ((static_cast<std::size_t>(i0) * n + i1) * n + i2) * n + i3;
  };
  std::vector<Complex> out(in.size(), Complex(0.0));
  for (int b = 0; b < n; ++b) {
    for (int g = 0; g < n; ++g) {
      for (int a = 0; a < n; ++a) {
        for (int h = 0; h < n; ++h) {
          Complex acc = 0.0;
          for (int f = 0; f < n; ++f) {
            for (int gg = 0; gg < n; ++gg) {
              for (int e = 0; e < n; ++e) {
                for (int hh = 0; hh < n; ++hh) {
                  acc += d(b, f) * std::conj(d(g, gg)) * c(e, a) *
                         std::conj(c(hh, h)) * in[flat(f, gg, e, hh)];
                }
              }
            }
          }
          out[flat(b, g, a, h)] = acc;
        }
      }
    }
  }
  return out;
}

inline CMatrix pauli(int k) {
  CMatrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (k) {
    case 0: m << 1.0, 0.0, 0.0, 1.0; break;
    case 1: m << 0.0, 1.0, 1.0, 0.0; break;
    case 2: m << 0.0, -i, i, 0.0; break;
    default: m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return m;
}

/// Textbook z-boost with rapidity eta, rows/cols ordered (0, 1, 2, 3).
inline RMatrix boost_z(double eta) {
  RMatrix m = RMatrix::Identity(4, 4);
  m(0, 0) = std::cosh(eta);
  m(0, 3) = std::sinh(eta);
  m(3, 0) = std::sinh(eta);
  m(3, 3) = std::cosh(eta);
  return m;
}

/// Spatial rotation by theta about the 3-axis, same row/col order.
inline RMatrix rotation_z(double theta) {
  RMatrix m = RMatrix::Identity(4, 4);
  m(1, 1) = std::cos(theta);
  m(1, 2) = std::sin(theta);
  m(2, 1) = -std::sin(theta);
  m(2, 2) = std::cos(theta);
  return m;
}

}  // namespace oracle
