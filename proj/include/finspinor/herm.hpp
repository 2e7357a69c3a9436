#pragma once

// Herm(N): the real N^2-dimensional space of Hermitian (1 1 / 0 0)
// spintensors, its basis conventions, coordinates, and the degree-N
// determinant form G.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "finspinor/error.hpp"
#include "finspinor/numeric.hpp"

namespace finspinor {

/// Coordinates X^alpha of a vector of Herm(N).
struct HermVector {
  int n = 0;
  std::vector<double> coords;

  HermVector() = default;
  HermVector(int n_, std::vector<double> c) : n(n_), coords(std::move(c)) {
    if (coords.size() != static_cast<std::size_t>(n * n))
      throw DimensionError("HermVector needs n^2 coordinates");
  }
  static HermVector zero(int n_) { return HermVector(n_, std::vector<double>(static_cast<std::size_t>(n_ * n_))); }

  double& operator[](std::size_t i) { return coords[i]; }
  double operator[](std::size_t i) const { return coords[i]; }
  std::size_t size() const noexcept { return coords.size(); }
};

inline double max_abs_diff(const HermVector& a, const HermVector& b) {
  if (a.n != b.n) throw DimensionError("HermVector dimensions differ");
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

/// A basis E_beta of Herm(N) together with its trace-dual E^alpha:
/// trace(E^alpha E_beta) = delta^alpha_beta.
struct HermBasis {
  int n = 0;
  std::vector<ComplexMatrix> e_lower;
  std::vector<ComplexMatrix> e_upper;

  int dim() const noexcept { return n * n; }
};

/// Gram matrix P(a, b) = trace(E_a E_b) of a family of Hermitian matrices.
inline RealMatrix gram_matrix(const std::vector<ComplexMatrix>& e) {
  RealMatrix p(e.size(), e.size());
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = 0; b < e.size(); ++b) p(a, b) = trace_of_product(e[a], e[b]).real();
  return p;
}

/// Dual family E^a = sum_b (P^-1)(a, b) E_b.
inline std::vector<ComplexMatrix> gram_dual(const std::vector<ComplexMatrix>& e) {
  const RealMatrix pinv = inverse(gram_matrix(e), Tolerance{1e-12, 1e-9});
  std::vector<ComplexMatrix> dual;
  dual.reserve(e.size());
  for (std::size_t a = 0; a < e.size(); ++a) {
    ComplexMatrix m(e[a].rows(), e[a].cols());
    for (std::size_t b = 0; b < e.size(); ++b)
      if (pinv(a, b) != 0.0) m += e[b] * Complex(pinv(a, b));
    dual.push_back(std::move(m));
  }
  return dual;
}

/// max |trace(E^a E_b) - delta_ab|.
inline double pairing_residual(const HermBasis& basis) {
  double r = 0.0;
  for (std::size_t a = 0; a < basis.e_upper.size(); ++a)
    for (std::size_t b = 0; b < basis.e_lower.size(); ++b) {
      const Complex t = trace_of_product(basis.e_upper[a], basis.e_lower[b]);
      r = std::max(r, std::abs(t - Complex(a == b ? 1.0 : 0.0)));
    }
  return r;
}

/// Maximum |m(i, j) - conj(m(j, i))|.
inline double hermitian_asymmetry(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("hermiticity test on a non-square matrix");
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
  return r;
}

namespace detail {

inline ComplexMatrix unit_pair(std::size_t n, std::size_t p, std::size_t q, Complex upper) {
  ComplexMatrix m(n, n);
  m(p, q) = upper;
  m(q, p) = std::conj(upper);
  return m;
}

inline ComplexMatrix real_diagonal(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

/// The generalized lambda family for N >= 3:
///   E_0 = diag(1, ..., 1, 0);
///   for q = 1..N-1: for p < q the symmetric (1 at (p,q),(q,p)) and the
///   antisymmetric (-i at (p,q), +i at (q,p)) matrix, followed (if q <= N-2)
///   by the diagonal diag(1, ..., 1, -q, 0, ...) with q leading ones;
///   E_{N^2-1} = diag(0, ..., 0, 1).
/// For N = 3 this is lambda_0..lambda_8 in order.
inline std::vector<ComplexMatrix> lambda_family(int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<ComplexMatrix> e;
  e.reserve(un * un);
  std::vector<double> d0(un, 1.0);
  d0.back() = 0.0;
  e.push_back(real_diagonal(d0));
  for (std::size_t q = 1; q < un; ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      e.push_back(unit_pair(un, p, q, Complex(1.0)));
      e.push_back(unit_pair(un, p, q, Complex(0.0, -1.0)));
    }
    if (q + 2 <= un) {
      std::vector<double> d(un, 0.0);
      for (std::size_t i = 0; i < q; ++i) d[i] = 1.0;
      d[q] = -static_cast<double>(q);
      e.push_back(real_diagonal(d));
    }
  }
  std::vector<double> last(un, 0.0);
  last.back() = 1.0;
  e.push_back(real_diagonal(last));
  return e;
}

}  // namespace detail

/// Identity and Pauli matrices sigma_0..sigma_3.
inline std::vector<ComplexMatrix> pauli_matrices() {
  return {
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, -kI}, {kI, 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
}

/// The basis used throughout the library.
///
/// n = 2: E_b = sigma_b, E^a = sigma_a / 2.
/// n = 3: E_B = lambda_B, E^A = lambda_A / 2 except E^8 = lambda_8.
/// n >= 4: the lambda_family above with the Gram dual.
inline HermBasis standard_basis(int n) {
  if (n < 2) throw DomainError("standard_basis: n must be at least 2");
  HermBasis b;
  b.n = n;
  if (n == 2) {
    b.e_lower = pauli_matrices();
    for (const auto& s : b.e_lower) b.e_upper.push_back(s * Complex(0.5));
    return b;
  }
  b.e_lower = detail::lambda_family(n);
  if (n == 3) {
    for (const auto& l : b.e_lower) b.e_upper.push_back(l * Complex(0.5));
    b.e_upper[8] = b.e_lower[8];
    return b;
  }
  b.e_upper = gram_dual(b.e_lower);
  return b;
}

/// Maximum dropped imaginary residue reported by pack().
struct PackDiagnostics {
  double max_dropped_imag = 0.0;
};

/// Coordinates X^a = trace(E^a X) of a Hermitian matrix.
inline HermVector pack(const ComplexMatrix& x, const HermBasis& basis, const Tolerance& tol,
                       PackDiagnostics* diag = nullptr) {
  if (x.rows() != static_cast<std::size_t>(basis.n) || !x.square())
    throw DimensionError("pack: matrix size differs from basis dimension");
  const double scale = max_abs(x);
  const double asym = hermitian_asymmetry(x);
  if (asym > tol.bound(scale)) {
    std::ostringstream os;
    os << "pack: matrix is not Hermitian (max asymmetry " << asym << ")";
    throw SymmetryError(os.str(), asym);
  }
  HermVector v = HermVector::zero(basis.n);
  double dropped = 0.0;
  for (std::size_t a = 0; a < basis.e_upper.size(); ++a) {
    const Complex t = trace_of_product(basis.e_upper[a], x);
    if (std::abs(t.imag()) > tol.bound(std::abs(t.real()) + scale))
      throw SymmetryError("pack: coordinate has a non-negligible imaginary part", std::abs(t.imag()));
    dropped = std::max(dropped, std::abs(t.imag()));
    v[a] = t.real();
  }
  if (diag) diag->max_dropped_imag = dropped;
  return v;
}

inline HermVector pack(const ComplexMatrix& x, const HermBasis& basis) { return pack(x, basis, Tolerance{}); }

/// X = X^a E_a.
inline ComplexMatrix unpack(const HermVector& v, const HermBasis& basis) {
  if (v.n != basis.n) throw DimensionError("unpack: vector and basis dimensions differ");
  const auto un = static_cast<std::size_t>(basis.n);
  ComplexMatrix x(un, un);
  for (std::size_t a = 0; a < basis.e_lower.size(); ++a)
    if (v[a] != 0.0) x += basis.e_lower[a] * Complex(v[a]);
  return x;
}

/// det(X^a E_a); real for Hermitian X.
inline double det_invariant(const HermVector& v, const HermBasis& basis) {
  const Complex d = det(unpack(v, basis));
  if (std::abs(d.imag()) > 1e-10 * std::max(1.0, std::abs(d.real())))
    throw InternalConsistencyError("det_invariant: determinant of a Hermitian matrix has an imaginary part");
  return d.real();
}

/// Symmetric degree-N form G with det(X^a E_a) = G_{a...c} X^a ... X^c.
/// Only sorted multi-indices with nonzero coefficient are stored.
struct FormTensor {
  int n = 0;
  int degree = 0;
  std::map<std::vector<int>, double> coeffs;

  double coefficient(std::vector<int> idx) const {
    std::sort(idx.begin(), idx.end());
    const auto it = coeffs.find(idx);
    return it == coeffs.end() ? 0.0 : it->second;
  }
};

/// Number of distinct orderings of a sorted multi-index.
inline double multinomial_count(const std::vector<int>& sorted_idx) {
  double count = 1.0;
  int run = 0;
  for (std::size_t i = 0; i < sorted_idx.size(); ++i) {
    run = (i > 0 && sorted_idx[i] == sorted_idx[i - 1]) ? run + 1 : 1;
    count *= static_cast<double>(i + 1) / run;
  }
  return count;
}

namespace detail {

struct MixedDiscriminant {
  const std::vector<ComplexMatrix>& e;
  const std::vector<std::vector<bool>>& column_nonzero;  // [alpha][col]
  std::size_t n;
  std::vector<int> remaining;  // multiplicity per distinct alpha
  std::vector<int> alphas;     // distinct alpha values
  ComplexMatrix assembled;
  Complex sum{};

  // Places a distinct arrangement of the multiset column by column.
  void place(std::size_t col) {
    if (col == n) {
      sum += det(assembled);
      return;
    }
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      if (remaining[k] == 0) continue;
      const auto a = static_cast<std::size_t>(alphas[k]);
      if (!column_nonzero[a][col]) continue;
      --remaining[k];
      for (std::size_t r = 0; r < n; ++r) assembled(r, col) = e[a](r, col);
      place(col + 1);
      ++remaining[k];
    }
  }
};

}  // namespace detail

/// Coefficients via mixed discriminants: for a sorted multi-index
/// (a_1, ..., a_N), G = (1/N!) sum over permutations s of det of the matrix
/// whose i-th column is column i of E_{a_s(i)}. Arrangements with a zero
/// column are skipped; repeated indices are folded into multiplicities.
inline FormTensor form_tensor(const HermBasis& basis) {
  const int n = basis.n;
  const auto un = static_cast<std::size_t>(n);
  const int dim = basis.dim();
  std::vector<std::vector<bool>> nonzero(static_cast<std::size_t>(dim), std::vector<bool>(un, false));
  for (int a = 0; a < dim; ++a)
    for (std::size_t c = 0; c < un; ++c)
      for (std::size_t r = 0; r < un; ++r)
        if (basis.e_lower[static_cast<std::size_t>(a)](r, c) != Complex{}) nonzero[static_cast<std::size_t>(a)][c] = true;

  double n_factorial = 1.0;
  for (int i = 2; i <= n; ++i) n_factorial *= i;

  FormTensor g;
  g.n = n;
  g.degree = n;
  std::vector<int> idx(un, 0);
  while (true) {
    detail::MixedDiscriminant md{basis.e_lower, nonzero, un, {}, {}, ComplexMatrix(un, un), {}};
    for (std::size_t i = 0; i < un; ++i) {
      if (i == 0 || idx[i] != idx[i - 1]) {
        md.alphas.push_back(idx[i]);
        md.remaining.push_back(1);
      } else {
        ++md.remaining.back();
      }
    }
    md.place(0);
    // Each distinct arrangement stands for prod(mult!) permutations.
    double mult_factor = 1.0;
    for (int m : md.remaining)
      for (int k = 2; k <= m; ++k) mult_factor *= k;
    const Complex coeff = md.sum * (mult_factor / n_factorial);
    if (std::abs(coeff.imag()) > 1e-10 * std::max(1.0, std::abs(coeff.real())))
      throw InternalConsistencyError("form_tensor: complex coefficient for a Hermitian basis");
    if (std::abs(coeff.real()) > 1e-13) g.coeffs.emplace(idx, coeff.real());

    // Next nondecreasing multi-index.
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == dim - 1) --pos;
    if (pos < 0) break;
    const int next = idx[static_cast<std::size_t>(pos)] + 1;
    for (std::size_t i = static_cast<std::size_t>(pos); i < un; ++i) idx[i] = next;
  }
  return g;
}

/// sum over sorted keys of G * multinomial * X^a1 ... X^aN.
inline double finsler_length_power(const HermVector& v, const FormTensor& g) {
  if (v.n != g.n) throw DimensionError("finsler_length_power: vector and form dimensions differ");
  double total = 0.0;
  for (const auto& [idx, c] : g.coeffs) {
    double term = c * multinomial_count(idx);
    for (int a : idx) term *= v[static_cast<std::size_t>(a)];
    total += term;
  }
  return total;
}

}  // namespace finspinor
