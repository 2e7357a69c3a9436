#pragma once

// Finslerian N-spinor components, the scalar N-product and spintensors of
// arbitrary valency.
//
// Components are always taken with respect to a caller-chosen canonical basis.
// A change of canonical basis eps'_a = c_a^b eps_b is stored as the matrix C
// with C(b, a) = c_a^b, so the columns of C hold the new basis vectors and
// det C = [eps'_1, ..., eps'_N]. Upper (contravariant) indices transform with
// D = C^-1, lower ones with C^T, dotted ones with the complex conjugates.

#include <array>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "finspinor/error.hpp"
#include "finspinor/numeric.hpp"

namespace finspinor {

/// Components xi^a of a Finslerian N-spinor.
struct Spinor {
  std::vector<Complex> components;

  Spinor() = default;
  explicit Spinor(std::vector<Complex> c) : components(std::move(c)) {}
  Spinor(std::initializer_list<Complex> c) : components(c) {}

  int n() const noexcept { return static_cast<int>(components.size()); }
  Complex operator[](std::size_t i) const { return components[i]; }
};

namespace detail {

inline int check_spinor_family(std::span<const Spinor> spinors) {
  const auto count = static_cast<int>(spinors.size());
  if (count < 2) throw ShapeError("scalar N-product needs N >= 2 spinors");
  for (const auto& s : spinors)
    if (s.n() != count)
      throw ShapeError("scalar N-product needs exactly N spinors of dimension N (got " + std::to_string(count) +
                       " spinors, one of dimension " + std::to_string(s.n()) + ")");
  return count;
}

inline ComplexMatrix spinor_columns(std::span<const Spinor> spinors) {
  const auto n = spinors.size();
  ComplexMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = spinors[c].components[r];
  return m;
}

}  // namespace detail

/// eps_{ab...c} xi^a eta^b ... lambda^c, computed as the determinant of the
/// matrix whose columns are the spinors.
inline Complex scalar_n_product(std::span<const Spinor> spinors) {
  detail::check_spinor_family(spinors);
  return det(detail::spinor_columns(spinors));
}

inline Complex scalar_n_product(std::initializer_list<Spinor> spinors) {
  return scalar_n_product(std::span<const Spinor>(spinors.begin(), spinors.size()));
}

/// True iff the spinors form a canonical basis, i.e. their scalar N-product is 1.
inline bool is_canonical(std::span<const Spinor> candidate, const Tolerance& tol = {}) {
  return tol.close(scalar_n_product(candidate), Complex(1.0));
}

/// Zero test on the scalar N-product, scaled by the component magnitudes:
/// |[xi, ..., lambda]| <= abs + rel * prod_i max|xi_i|.
inline bool linearly_dependent(std::span<const Spinor> spinors, const Tolerance& tol = {}) {
  const Complex p = scalar_n_product(spinors);
  double scale = 1.0;
  for (const auto& s : spinors) {
    double m = 0.0;
    for (const auto& z : s.components) m = std::max(m, std::abs(z));
    scale *= m;
  }
  return std::abs(p) <= tol.abs + tol.rel * scale;
}

/// A change of canonical basis: c and its inverse d.
class BasisChange {
 public:
  BasisChange(ComplexMatrix c, const Tolerance& tol = {}) : c_(std::move(c)) {
    require_unimodular(c_, tol, "BasisChange");
    d_ = inverse(c_, tol);
  }

  static BasisChange identity(int n) { return BasisChange(ComplexMatrix::identity(static_cast<std::size_t>(n))); }

  int n() const noexcept { return static_cast<int>(c_.rows()); }
  const ComplexMatrix& c() const noexcept { return c_; }
  const ComplexMatrix& d() const noexcept { return d_; }

  /// First `this`, then `next` (expressed relative to the basis `this` produced).
  BasisChange then(const BasisChange& next, const Tolerance& tol = {}) const { return BasisChange(c_ * next.c_, tol); }

 private:
  ComplexMatrix c_;
  ComplexMatrix d_;
};

/// Index classes of a spintensor, in storage order.
enum class AxisKind { UpperUndotted = 0, UpperDotted = 1, LowerUndotted = 2, LowerDotted = 3 };

/// The `pos`-th index of class `kind`.
struct Axis {
  AxisKind kind;
  int pos = 0;
};

/// (k l / m n): counts of upper undotted, upper dotted, lower undotted and
/// lower dotted indices.
struct Valency {
  int upper = 0;
  int upper_dotted = 0;
  int lower = 0;
  int lower_dotted = 0;

  int count(AxisKind k) const { return std::array{upper, upper_dotted, lower, lower_dotted}[static_cast<int>(k)]; }
  int rank() const { return upper + upper_dotted + lower + lower_dotted; }
  friend bool operator==(const Valency&, const Valency&) = default;
  friend Valency operator+(const Valency& a, const Valency& b) {
    return {a.upper + b.upper, a.upper_dotted + b.upper_dotted, a.lower + b.lower, a.lower_dotted + b.lower_dotted};
  }
};

/// Dense spintensor components. Axes are stored row-major in the order
/// upper undotted, upper dotted, lower undotted, lower dotted; each axis has
/// extent n.
class SpinTensor {
 public:
  SpinTensor(int n, Valency v) : n_(n), valency_(v) {
    if (n < 2) throw DimensionError("spintensor dimension must be at least 2");
    if (v.upper < 0 || v.upper_dotted < 0 || v.lower < 0 || v.lower_dotted < 0)
      throw ValencyError("valency counts must be nonnegative");
    std::size_t size = 1;
    for (int i = 0; i < v.rank(); ++i) size *= static_cast<std::size_t>(n);
    data_.assign(size, Complex{});
  }
  SpinTensor(int n, Valency v, std::vector<Complex> data) : SpinTensor(n, v) {
    if (data.size() != data_.size()) throw DimensionError("spintensor data size does not match valency");
    data_ = std::move(data);
  }

  static SpinTensor scalar(int n, Complex value) { return SpinTensor(n, {}, {value}); }

  /// Valency (1 0 / 0 0) tensor with the spinor's components.
  static SpinTensor from_spinor(const Spinor& s) { return SpinTensor(s.n(), {1, 0, 0, 0}, s.components); }

  /// Valency (1 1 / 0 0) tensor X^{b c.} = m(b, c).
  static SpinTensor upper_pair(const ComplexMatrix& m) {
    require_square(m);
    return SpinTensor(static_cast<int>(m.rows()), {1, 1, 0, 0}, {m.data().begin(), m.data().end()});
  }

  /// Valency (0 0 / 1 1) tensor X_{b c.} = m(c, b): the matrix of a lower
  /// Hermitian pair is indexed (dotted, undotted), so trace(m * x) is the full
  /// contraction with upper_pair(x).
  static SpinTensor lower_pair(const ComplexMatrix& m) {
    require_square(m);
    const auto mt = transpose(m);
    return SpinTensor(static_cast<int>(m.rows()), {0, 0, 1, 1}, {mt.data().begin(), mt.data().end()});
  }

  int n() const noexcept { return n_; }
  const Valency& valency() const noexcept { return valency_; }
  int rank() const noexcept { return valency_.rank(); }
  std::size_t size() const noexcept { return data_.size(); }
  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  /// Flat position of an axis in storage order.
  int axis_index(Axis a) const {
    if (a.pos < 0 || a.pos >= valency_.count(a.kind)) throw IndexError("axis position out of range for valency");
    int offset = 0;
    for (int k = 0; k < static_cast<int>(a.kind); ++k) offset += valency_.count(static_cast<AxisKind>(k));
    return offset + a.pos;
  }

  Complex& at(std::span<const int> idx) { return data_[flat(idx)]; }
  Complex at(std::span<const int> idx) const { return data_[flat(idx)]; }
  Complex& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx.begin(), idx.size())); }
  Complex at(std::initializer_list<int> idx) const { return at(std::span<const int>(idx.begin(), idx.size())); }

  /// Scalar value of a rank-0 tensor.
  Complex value() const {
    if (rank() != 0) throw ValencyError("value() needs a rank-0 spintensor");
    return data_[0];
  }

  /// Matrix view of a rank-2 tensor, rows along the first stored axis.
  ComplexMatrix as_matrix() const {
    if (rank() != 2) throw ValencyError("as_matrix() needs a rank-2 spintensor");
    const auto n = static_cast<std::size_t>(n_);
    return ComplexMatrix(n, n, data_);
  }

  SpinTensor& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  double max_abs_diff(const SpinTensor& o) const {
    if (n_ != o.n_ || valency_ != o.valency_) throw ValencyError("spintensors differ in dimension or valency");
    double r = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) r = std::max(r, std::abs(data_[i] - o.data_[i]));
    return r;
  }

 private:
  static void require_square(const ComplexMatrix& m) {
    if (!m.square()) throw DimensionError("spintensor from a non-square matrix");
  }

  std::size_t flat(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != rank()) throw IndexError("index count does not match spintensor rank");
    std::size_t f = 0;
    for (const int i : idx) {
      if (i < 0 || i >= n_) throw IndexError("spintensor index out of range");
      f = f * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
    }
    return f;
  }

  int n_;
  Valency valency_;
  std::vector<Complex> data_;
};

namespace detail {

/// out[..., i, ...] = sum_j m(i, j) in[..., j, ...] along storage axis `axis`.
inline void apply_along_axis(std::vector<Complex>& data, int n, int rank, int axis, const ComplexMatrix& m) {
  const auto un = static_cast<std::size_t>(n);
  std::size_t inner = 1;
  for (int a = axis + 1; a < rank; ++a) inner *= un;
  const std::size_t outer = data.size() / (inner * un);
  std::vector<Complex> out(data.size());
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) {
        const Complex mij = m(i, j);
        if (mij == Complex{}) continue;
        const std::size_t dst = (o * un + i) * inner;
        const std::size_t src = (o * un + j) * inner;
        for (std::size_t r = 0; r < inner; ++r) out[dst + r] += mij * data[src + r];
      }
  data = std::move(out);
}

}  // namespace detail

/// Components of `s` with respect to the new canonical basis.
inline SpinTensor transform_components(const SpinTensor& s, const BasisChange& change) {
  if (change.n() != s.n()) throw DimensionError("basis change dimension differs from spintensor dimension");
  const auto& v = s.valency();
  const ComplexMatrix upper = change.d();
  const ComplexMatrix upper_dotted = conjugate(change.d());
  const ComplexMatrix lower = transpose(change.c());
  const ComplexMatrix lower_dotted = conjugate(lower);
  std::vector<Complex> data(s.data().begin(), s.data().end());
  int axis = 0;
  for (int i = 0; i < v.upper; ++i) detail::apply_along_axis(data, s.n(), s.rank(), axis++, upper);
  for (int i = 0; i < v.upper_dotted; ++i) detail::apply_along_axis(data, s.n(), s.rank(), axis++, upper_dotted);
  for (int i = 0; i < v.lower; ++i) detail::apply_along_axis(data, s.n(), s.rank(), axis++, lower);
  for (int i = 0; i < v.lower_dotted; ++i) detail::apply_along_axis(data, s.n(), s.rank(), axis++, lower_dotted);
  return SpinTensor(s.n(), v, std::move(data));
}

inline SpinTensor add(const SpinTensor& a, const SpinTensor& b) {
  if (a.n() != b.n() || a.valency() != b.valency())
    throw ValencyError("spintensor sum needs equal dimension and valency");
  SpinTensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += b.data()[i];
  return out;
}

inline SpinTensor operator+(const SpinTensor& a, const SpinTensor& b) { return add(a, b); }

/// (S (x) U): within each index class the indices of `a` come first.
inline SpinTensor tensor_product(const SpinTensor& a, const SpinTensor& b) {
  if (a.n() != b.n()) throw DimensionError("tensor product needs equal spinor dimension");
  const Valency va = a.valency();
  const Valency vb = b.valency();
  SpinTensor out(a.n(), va + vb);
  const int n = a.n();
  const int rank = out.rank();
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  std::vector<int> ia(static_cast<std::size_t>(a.rank()));
  std::vector<int> ib(static_cast<std::size_t>(b.rank()));
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    // Decode flat -> multi-index.
    std::size_t f = flat;
    for (int k = rank; k-- > 0;) {
      idx[static_cast<std::size_t>(k)] = static_cast<int>(f % static_cast<std::size_t>(n));
      f /= static_cast<std::size_t>(n);
    }
    // Split each class block into a-part then b-part.
    std::size_t pos = 0, pa = 0, pb = 0;
    for (int k = 0; k < 4; ++k) {
      const auto kind = static_cast<AxisKind>(k);
      for (int i = 0; i < va.count(kind); ++i) ia[pa++] = idx[pos++];
      for (int i = 0; i < vb.count(kind); ++i) ib[pb++] = idx[pos++];
    }
    out.data()[flat] = a.at(ia) * b.at(ib);
  }
  return out;
}

/// Sums an upper axis against a lower axis of the same dottedness.
inline SpinTensor contract(const SpinTensor& s, Axis upper, Axis lower) {
  const bool upper_ok = upper.kind == AxisKind::UpperUndotted || upper.kind == AxisKind::UpperDotted;
  const bool lower_ok = lower.kind == AxisKind::LowerUndotted || lower.kind == AxisKind::LowerDotted;
  if (!upper_ok || !lower_ok) throw IndexError("contraction pairs one upper index with one lower index");
  const bool upper_dotted = upper.kind == AxisKind::UpperDotted;
  const bool lower_dotted = lower.kind == AxisKind::LowerDotted;
  if (upper_dotted != lower_dotted) throw IndexError("dotted indices contract only with dotted indices");

  const int au = s.axis_index(upper);
  const int al = s.axis_index(lower);
  Valency v = s.valency();
  if (upper_dotted) {
    --v.upper_dotted;
    --v.lower_dotted;
  } else {
    --v.upper;
    --v.lower;
  }
  SpinTensor out(s.n(), v);
  const int n = s.n();
  const int rank = s.rank();
  std::vector<int> idx(static_cast<std::size_t>(rank));
  std::vector<int> kept(static_cast<std::size_t>(rank - 2));
  for (std::size_t flat = 0; flat < s.size(); ++flat) {
    std::size_t f = flat;
    for (int k = rank; k-- > 0;) {
      idx[static_cast<std::size_t>(k)] = static_cast<int>(f % static_cast<std::size_t>(n));
      f /= static_cast<std::size_t>(n);
    }
    if (idx[static_cast<std::size_t>(au)] != idx[static_cast<std::size_t>(al)]) continue;
    std::size_t p = 0;
    for (int k = 0; k < rank; ++k)
      if (k != au && k != al) kept[p++] = idx[static_cast<std::size_t>(k)];
    out.at(kept) += s.data()[flat];
  }
  return out;
}

/// Contracts every upper undotted index with the lower undotted index of the
/// same position, and likewise for dotted ones. Valency must be (k l / k l).
inline SpinTensor full_contraction(SpinTensor s) {
  const auto v = s.valency();
  if (v.upper != v.lower || v.upper_dotted != v.lower_dotted)
    throw ValencyError("full contraction needs matching upper and lower counts");
  while (s.valency().upper > 0) s = contract(s, {AxisKind::UpperUndotted, 0}, {AxisKind::LowerUndotted, 0});
  while (s.valency().upper_dotted > 0) s = contract(s, {AxisKind::UpperDotted, 0}, {AxisKind::LowerDotted, 0});
  return s;
}

}  // namespace finspinor
