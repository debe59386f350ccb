#include "finspinor/spintensor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace finspinor {

namespace {

std::size_t pow_size(int base, int exponent) {
  std::size_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

/// Row-major strides for `rank` axes of common extent `dim`.
std::vector<std::size_t> make_strides(int dim, int rank) {
  std::vector<std::size_t> st(rank);
  std::size_t s = 1;
  for (int a = rank - 1; a >= 0; --a) {
    st[a] = s;
    s *= static_cast<std::size_t>(dim);
  }
  return st;
}

/// out[..., j, ...] = sum_k factor(j, k) * in[..., k, ...] along one axis.
std::vector<Complex> mode_multiply(const std::vector<Complex>& in,
                                   const CMatrix& factor, int dim, int rank,
                                   int axis) {
  const std::size_t stride = pow_size(dim, rank - 1 - axis);
  const std::size_t block = stride * static_cast<std::size_t>(dim);
  std::vector<Complex> out(in.size());
  for (std::size_t base = 0; base < in.size(); base += block) {
    for (std::size_t t = 0; t < stride; ++t) {
      for (int j = 0; j < dim; ++j) {
        Complex acc = 0.0;
        for (int k = 0; k < dim; ++k) {
          acc += factor(j, k) * in[base + static_cast<std::size_t>(k) * stride + t];
        }
        out[base + static_cast<std::size_t>(j) * stride + t] = acc;
      }
    }
  }
  return out;
}

}  // namespace

Spintensor::Spintensor(int dim, Valency valency, std::vector<Complex> components)
    : dim_(dim), valency_(valency), components_(std::move(components)) {
  if (dim_ < 2) throw DomainError("Spintensor: dimension must be at least 2");
  if (valency_.upper_plain < 0 || valency_.upper_dotted < 0 ||
      valency_.lower_plain < 0 || valency_.lower_dotted < 0) {
    throw DomainError("Spintensor: negative valency");
  }
  const std::size_t expected = pow_size(dim_, valency_.rank());
  if (components_.size() != expected) {
    throw DomainError("Spintensor: expected " + std::to_string(expected) +
                      " components, got " + std::to_string(components_.size()));
  }
  for (const Complex& z : components_) {
    if (!is_finite(z)) throw DomainError("Spintensor: non-finite component");
  }
}

Spintensor Spintensor::zero(int dim, Valency valency) {
  return Spintensor(dim, valency,
                    std::vector<Complex>(pow_size(dim, valency.rank()), 0.0));
}

Spintensor Spintensor::scalar(int dim, Complex value) {
  return Spintensor(dim, Valency{}, std::vector<Complex>{value});
}

Spintensor Spintensor::from_spinor(const NSpinor& s) {
  std::vector<Complex> comps(s.components().data(),
                             s.components().data() + s.dim());
  return Spintensor(s.dim(), Valency{.upper_plain = 1}, std::move(comps));
}

Spintensor Spintensor::kronecker(int dim) {
  Spintensor t = zero(dim, Valency{.upper_plain = 1, .lower_plain = 1});
  std::vector<Complex> comps = t.components_;
  for (int a = 0; a < dim; ++a) {
    comps[static_cast<std::size_t>(a) * dim + a] = 1.0;
  }
  return Spintensor(dim, t.valency_, std::move(comps));
}

IndexKind Spintensor::axis_kind(int axis) const {
  if (axis < 0 || axis >= rank()) throw DomainError("Spintensor: axis out of range");
  if (axis < valency_.upper_plain) return IndexKind::UpperPlain;
  axis -= valency_.upper_plain;
  if (axis < valency_.upper_dotted) return IndexKind::UpperDotted;
  axis -= valency_.upper_dotted;
  if (axis < valency_.lower_plain) return IndexKind::LowerPlain;
  return IndexKind::LowerDotted;
}

Complex Spintensor::at(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != rank()) {
    throw DomainError("Spintensor::at: expected " + std::to_string(rank()) +
                      " indices");
  }
  std::size_t flat = 0;
  for (int a = 0; a < rank(); ++a) {
    if (indices[a] < 0 || indices[a] >= dim_) {
      throw DomainError("Spintensor::at: index out of range");
    }
    flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(indices[a]);
  }
  return components_[flat];
}

Spintensor tensor_product(const Spintensor& s, const Spintensor& u) {
  if (s.dim() != u.dim()) throw DomainError("tensor_product: dimension mismatch");
  const int dim = s.dim();
  const Valency& sv = s.valency();
  const Valency& uv = u.valency();
  const Valency rv{sv.upper_plain + uv.upper_plain,
                   sv.upper_dotted + uv.upper_dotted,
                   sv.lower_plain + uv.lower_plain,
                   sv.lower_dotted + uv.lower_dotted};

  // Per output axis: the stride it contributes to the left or right flat
  // index. Blocks interleave as (s upper plain, u upper plain, s upper
  // dotted, u upper dotted, ...).
  const auto s_strides = make_strides(dim, sv.rank());
  const auto u_strides = make_strides(dim, uv.rank());
  std::vector<std::size_t> into_s(rv.rank(), 0);
  std::vector<std::size_t> into_u(rv.rank(), 0);
  {
    const std::array<int, 4> s_counts{sv.upper_plain, sv.upper_dotted,
                                      sv.lower_plain, sv.lower_dotted};
    const std::array<int, 4> u_counts{uv.upper_plain, uv.upper_dotted,
                                      uv.lower_plain, uv.lower_dotted};
    int out_axis = 0, s_axis = 0, u_axis = 0;
    for (int block = 0; block < 4; ++block) {
      for (int i = 0; i < s_counts[block]; ++i) into_s[out_axis++] = s_strides[s_axis++];
      for (int i = 0; i < u_counts[block]; ++i) into_u[out_axis++] = u_strides[u_axis++];
    }
  }

  const std::size_t total = pow_size(dim, rv.rank());
  std::vector<Complex> out(total);
  std::vector<int> digits(rv.rank(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t sf = 0, uf = 0;
    for (int a = 0; a < rv.rank(); ++a) {
      sf += static_cast<std::size_t>(digits[a]) * into_s[a];
      uf += static_cast<std::size_t>(digits[a]) * into_u[a];
    }
    out[flat] = s.components()[sf] * u.components()[uf];
    for (int a = rv.rank() - 1; a >= 0; --a) {
      if (++digits[a] < dim) break;
      digits[a] = 0;
    }
  }
  return Spintensor(dim, rv, std::move(out));
}

Spintensor contract(const Spintensor& s, int upper_axis, int lower_axis) {
  const int rank = s.rank();
  if (upper_axis < 0 || upper_axis >= rank || lower_axis < 0 || lower_axis >= rank) {
    throw DomainError("contract: axis out of range");
  }
  if (upper_axis == lower_axis) throw DomainError("contract: axes must differ");

  const IndexKind up = s.axis_kind(upper_axis);
  const IndexKind low = s.axis_kind(lower_axis);
  if (up != IndexKind::UpperPlain && up != IndexKind::UpperDotted) {
    throw DomainError("contract: first axis is not an upper index");
  }
  if (low != IndexKind::LowerPlain && low != IndexKind::LowerDotted) {
    throw DomainError("contract: second axis is not a lower index");
  }
  const bool plain_pair = up == IndexKind::UpperPlain && low == IndexKind::LowerPlain;
  const bool dotted_pair = up == IndexKind::UpperDotted && low == IndexKind::LowerDotted;
  if (!plain_pair && !dotted_pair) {
    throw DomainError("contract: cannot pair a plain index with a dotted one");
  }

  Valency rv = s.valency();
  if (up == IndexKind::UpperPlain) --rv.upper_plain; else --rv.upper_dotted;
  if (low == IndexKind::LowerPlain) --rv.lower_plain; else --rv.lower_dotted;

  const int dim = s.dim();
  const auto in_strides = make_strides(dim, rank);
  std::vector<std::size_t> kept;
  kept.reserve(static_cast<std::size_t>(rank) - 2);
  for (int a = 0; a < rank; ++a) {
    if (a != upper_axis && a != lower_axis) kept.push_back(in_strides[a]);
  }
  const std::size_t diag_stride = in_strides[upper_axis] + in_strides[lower_axis];

  const std::size_t total = pow_size(dim, rv.rank());
  std::vector<Complex> out(total);
  std::vector<int> digits(rv.rank(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t base = 0;
    for (int a = 0; a < rv.rank(); ++a) {
      base += static_cast<std::size_t>(digits[a]) * kept[a];
    }
    Complex acc = 0.0;
    for (int q = 0; q < dim; ++q) {
      acc += s.components()[base + static_cast<std::size_t>(q) * diag_stride];
    }
    out[flat] = acc;
    for (int a = rv.rank() - 1; a >= 0; --a) {
      if (++digits[a] < dim) break;
      digits[a] = 0;
    }
  }
  return Spintensor(dim, rv, std::move(out));
}

Spintensor transform(const Spintensor& s, const BasisChange& b) {
  if (s.dim() != b.dim()) throw DomainError("transform: dimension mismatch");
  // One mode product per axis. Lower plain axes contract against the upper
  // (row) index of c, hence the transpose; dotted axes take conjugates.
  const std::array<CMatrix, 4> factors{b.d(), b.d().conjugate(),
                                       b.c().transpose(), b.c().adjoint()};
  std::vector<Complex> data = s.components();
  for (int axis = 0; axis < s.rank(); ++axis) {
    const auto& f = factors[static_cast<int>(s.axis_kind(axis))];
    data = mode_multiply(data, f, s.dim(), s.rank(), axis);
  }
  return Spintensor(s.dim(), s.valency(), std::move(data));
}

double max_abs_diff(const Spintensor& a, const Spintensor& b) {
  if (a.dim() != b.dim() || !(a.valency() == b.valency())) {
    throw DomainError("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.components().size(); ++i) {
    m = std::max(m, std::abs(a.components()[i] - b.components()[i]));
  }
  return m;
}

}  // namespace finspinor
