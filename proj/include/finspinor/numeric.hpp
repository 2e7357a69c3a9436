#pragma once

// Small dense matrices over R or C with the handful of operations the spinor
// algebra needs: products, LU determinant and inverse, Hermitian adjoint,
// trace, and seeded sampling of SL(N,C).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "finspinor/error.hpp"
#include "finspinor/rng.hpp"

namespace finspinor {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Comparison tolerance: |a - b| <= abs + rel * max(|a|, |b|).
struct Tolerance {
  double abs = 1e-10;
  double rel = 1e-9;

  bool close(double a, double b) const {
    return std::abs(a - b) <= bound(std::max(std::abs(a), std::abs(b)));
  }
  bool close(Complex a, Complex b) const {
    return std::abs(a - b) <= bound(std::max(std::abs(a), std::abs(b)));
  }
  double bound(double scale) const { return abs + rel * scale; }
};

inline void validate(const Tolerance& tol) {
  if (!(tol.abs >= 0.0) || !(tol.rel >= 0.0) || !(tol.abs + tol.rel > 0.0))
    throw DomainError("tolerance needs abs >= 0, rel >= 0 and abs + rel > 0");
}

namespace detail {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

inline double conj_of(double x) { return x; }
inline Complex conj_of(Complex z) { return std::conj(z); }

inline bool finite(double x) { return std::isfinite(x); }
inline bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace detail

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Complex>;

/// Dense row-major matrix.
template <Scalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix data size does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(std::span<const T> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }
  static Matrix diagonal(std::initializer_list<T> values) {
    return diagonal(std::span<const T>(values.begin(), values.size()));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return detail::finite(x); });
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(T s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, T s) { return a *= s; }
  friend Matrix operator*(T s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= T(-1); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  /// Exact entrywise equality.
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;

template <Scalar T>
std::vector<T> operator*(const Matrix<T>& m, std::span<const T> v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector product: dimensions differ");
  std::vector<T> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

template <Scalar T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
  return m * std::span<const T>(v);
}

template <Scalar T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

/// Conjugate transpose.
template <Scalar T>
Matrix<T> hermitian_adjoint(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = detail::conj_of(m(i, j));
  return out;
}

inline ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix out = m;
  for (auto& z : out.data()) z = std::conj(z);
  return out;
}

inline ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = m.data()[i];
  return out;
}

template <Scalar T>
T trace(const Matrix<T>& m) {
  if (!m.square()) throw DimensionError("trace of a non-square matrix");
  T t{};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// trace(a * b) without forming the product.
template <Scalar T>
T trace_of_product(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw DimensionError("trace_of_product: shapes do not form a square product");
  T t{};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  return t;
}

template <Scalar T>
double max_abs(const Matrix<T>& m) {
  double r = 0.0;
  for (const auto& x : m.data()) r = std::max(r, std::abs(x));
  return r;
}

/// Max-norm of a - b.
template <Scalar T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix shapes differ");
  double r = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) r = std::max(r, std::abs(a.data()[i] - b.data()[i]));
  return r;
}

/// LU factorization with partial pivoting, P*A = L*U packed into one matrix.
template <Scalar T>
struct LuDecomposition {
  Matrix<T> lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;

  explicit LuDecomposition(Matrix<T> a) : lu(std::move(a)) {
    if (!lu.square()) throw DimensionError("LU of a non-square matrix");
    const std::size_t n = lu.rows();
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(lu(k, k));
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(lu(i, k)) > best) {
          best = std::abs(lu(i, k));
          p = i;
        }
      if (best == 0.0) {
        singular = true;
        continue;
      }
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
        std::swap(perm[k], perm[p]);
        sign = -sign;
      }
      const T pivot = lu(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const T f = lu(i, k) / pivot;
        lu(i, k) = f;
        if (f == T(0)) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      }
    }
  }

  T determinant() const {
    if (singular) return T(0);
    T d = T(sign);
    for (std::size_t i = 0; i < lu.rows(); ++i) d *= lu(i, i);
    return d;
  }

  /// Solves A x = b for one right-hand side.
  std::vector<T> solve(std::span<const T> b) const {
    const std::size_t n = lu.rows();
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      T s = b[perm[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * x[j];
      x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      T s = x[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu(i, j) * x[j];
      x[i] = s / lu(i, i);
    }
    return x;
  }
};

template <Scalar T>
T det(const Matrix<T>& m) {
  if (!m.square() || m.rows() == 0) throw DimensionError("determinant needs a non-empty square matrix");
  if (m.rows() == 1) return m(0, 0);
  return LuDecomposition<T>(m).determinant();
}

/// Inverse of `m`. Throws SingularityError when |det m| <= tol.abs or the
/// residual of m * inverse exceeds the tolerance bound.
template <Scalar T>
Matrix<T> inverse(const Matrix<T>& m, const Tolerance& tol = {}) {
  if (!m.square() || m.rows() == 0) throw DimensionError("inverse needs a non-empty square matrix");
  const std::size_t n = m.rows();
  LuDecomposition<T> lu(m);
  const double abs_det = std::abs(lu.determinant());
  if (lu.singular || !(abs_det > tol.abs)) {
    std::ostringstream os;
    os << "matrix is singular to tolerance (|det| = " << abs_det << ")";
    throw SingularityError(os.str(), abs_det);
  }
  Matrix<T> inv(n, n);
  std::vector<T> e(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(e.begin(), e.end(), T(0));
    e[c] = T(1);
    const auto col = lu.solve(e);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  const double residual = max_abs_diff(m * inv, Matrix<T>::identity(n));
  if (residual > tol.bound(max_abs(m) * max_abs(inv) * static_cast<double>(n))) {
    std::ostringstream os;
    os << "inverse residual " << residual << " exceeds tolerance (|det| = " << abs_det << ")";
    throw SingularityError(os.str(), abs_det);
  }
  return inv;
}

/// Throws GroupMembershipError unless m is square with det m = 1 within tol.
inline Complex require_unimodular(const ComplexMatrix& m, const Tolerance& tol, const char* who) {
  if (!m.square() || m.rows() == 0) throw DimensionError(std::string(who) + ": matrix must be square");
  if (!m.all_finite()) throw DomainError(std::string(who) + ": matrix has non-finite entries");
  const Complex d = det(m);
  if (!tol.close(d, Complex(1.0))) {
    std::ostringstream os;
    os.precision(17);
    os << who << ": matrix is not unimodular (det = " << d.real() << (d.imag() < 0 ? " - " : " + ")
       << std::abs(d.imag()) << "i)";
    throw GroupMembershipError(os.str(), d.real(), d.imag());
  }
  return d;
}

/// Seeded sample of SL(n,C): a complex Ginibre draw scaled by the principal
/// branch of det^(-1/n). Draws with |det| < 1e-6 are rejected.
inline ComplexMatrix random_sl(int n, std::uint64_t seed) {
  if (n < 2) throw DomainError("random_sl: n must be at least 2");
  Rng rng(seed);
  const auto size = static_cast<std::size_t>(n);
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    ComplexMatrix m(size, size);
    for (auto& z : m.data()) {
      const double re = rng.normal();
      const double im = rng.normal();
      z = Complex(re, im) * std::sqrt(0.5);
    }
    const Complex d = det(m);
    if (std::abs(d) < 1e-6) continue;
    m *= std::pow(d, -1.0 / n);
    if (std::abs(det(m) - 1.0) <= 1e-12) return m;
  }
  throw InternalConsistencyError("random_sl: no acceptable draw within the attempt budget");
}

/// Uniform-norm distance of `m` to the nearest of the given matrices.
inline double distance_to_set(const ComplexMatrix& m, std::span<const ComplexMatrix> set) {
  double best = INFINITY;
  for (const auto& s : set) best = std::min(best, max_abs_diff(m, s));
  return best;
}

}  // namespace finspinor
