#pragma once

#include <span>
#include <vector>

#include "finspinor/spinor.hpp"
#include "finspinor/types.hpp"

namespace finspinor {

/// The four index species. Plain indices transform with the basis-change
/// coefficients, dotted ones with their complex conjugates; upper indices
/// use the inverse coefficients d, lower ones use c itself.
enum class IndexKind { UpperPlain, UpperDotted, LowerPlain, LowerDotted };

/// Number of indices of each kind carried by a spintensor.
struct Valency {
  int upper_plain = 0;
  int upper_dotted = 0;
  int lower_plain = 0;
  int lower_dotted = 0;

  int rank() const { return upper_plain + upper_dotted + lower_plain + lower_dotted; }
  bool operator==(const Valency&) const = default;
};

/// Dense complex component array of a spintensor of dimension N.
///
/// Axes are stored in the fixed order (upper plain | upper dotted |
/// lower plain | lower dotted), row-major with the last axis fastest;
/// every axis has extent N. Axis ids used by contract() and axis_kind()
/// are positions 0..rank-1 in this order. Values are immutable after
/// construction.
class Spintensor {
public:
  /// Takes ownership of a flat row-major component array of exactly
  /// N^rank finite entries.
  Spintensor(int dim, Valency valency, std::vector<Complex> components);

  static Spintensor zero(int dim, Valency valency);
  /// Valency [0 0; 0 0] tensor holding a single value.
  static Spintensor scalar(int dim, Complex value);
  /// Valency [1 0; 0 0] tensor with the spinor's components.
  static Spintensor from_spinor(const NSpinor& s);
  /// The unit mixed tensor delta^a_b (one upper plain, one lower plain).
  static Spintensor kronecker(int dim);

  int dim() const { return dim_; }
  const Valency& valency() const { return valency_; }
  int rank() const { return valency_.rank(); }
  IndexKind axis_kind(int axis) const;

  /// Component at a full 0-based multi-index (one entry per axis).
  Complex at(std::span<const int> indices) const;
  const std::vector<Complex>& components() const { return components_; }

  bool operator==(const Spintensor&) const = default;

private:
  int dim_;
  Valency valency_;
  std::vector<Complex> components_;
};

/// Outer product. The result's valency is the blockwise sum; within each
/// kind block the left factor's axes precede the right factor's.
Spintensor tensor_product(const Spintensor& s, const Spintensor& u);

/// Sums the paired axes of one upper and one lower index of the same
/// species (plain with plain, dotted with dotted). The surviving axes keep
/// their relative order; the valency drops by one in each paired block.
Spintensor contract(const Spintensor& s, int upper_axis, int lower_axis);

/// Components of the same spintensor relative to the new basis: one factor
/// per index, d on upper plain, conj(d) on upper dotted, c on lower plain,
/// conj(c) on lower dotted. Transforming by b1 then b2 equals one transform
/// by compose(b1, b2).
Spintensor transform(const Spintensor& s, const BasisChange& b);

/// Largest entrywise absolute difference; shapes must match.
double max_abs_diff(const Spintensor& a, const Spintensor& b);

}  // namespace finspinor
