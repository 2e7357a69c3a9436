#pragma once

// The homomorphism SL(N,C) -> FL(N^2,R), C |-> L(C).
//
// Convention: induced_map(D) is the matrix that acts on Herm(N) coordinates
// by conjugation of the Hermitian representative,
//   apply(induced_map(D), pack(X)) == pack(D X D^+),
// so L(D)^a_b = trace(E^a D E_b D^+) and L(B C) = L(B) L(C).

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include "finspinor/error.hpp"
#include "finspinor/herm.hpp"
#include "finspinor/numeric.hpp"

namespace finspinor {

/// Real N^2 x N^2 matrix L^a_b (row a, column b).
struct FinsLinearMap {
  int n = 0;
  RealMatrix entries;

  static FinsLinearMap identity(int n) {
    return {n, RealMatrix::identity(static_cast<std::size_t>(n * n))};
  }
  double operator()(std::size_t row, std::size_t col) const { return entries(row, col); }

  friend FinsLinearMap operator*(const FinsLinearMap& a, const FinsLinearMap& b) {
    if (a.n != b.n) throw DimensionError("composing maps of different dimension");
    return {a.n, a.entries * b.entries};
  }
};

inline double max_abs_diff(const FinsLinearMap& a, const FinsLinearMap& b) {
  return max_abs_diff(a.entries, b.entries);
}

/// Imaginary residue allowed on an entry before the basis is deemed broken.
inline constexpr double kMapImagResidue = 1e-10;

inline FinsLinearMap induced_map(const ComplexMatrix& c, const HermBasis& basis, const Tolerance& tol = {}) {
  if (c.rows() != static_cast<std::size_t>(basis.n)) throw DimensionError("induced_map: matrix and basis dimensions differ");
  require_unimodular(c, tol, "induced_map");
  const auto dim = static_cast<std::size_t>(basis.dim());
  const ComplexMatrix c_adj = hermitian_adjoint(c);
  FinsLinearMap out{basis.n, RealMatrix(dim, dim)};
  for (std::size_t b = 0; b < dim; ++b) {
    const ComplexMatrix image = c * basis.e_lower[b] * c_adj;
    for (std::size_t a = 0; a < dim; ++a) {
      const Complex t = trace_of_product(basis.e_upper[a], image);
      if (std::abs(t.imag()) > kMapImagResidue * std::max(1.0, std::abs(t.real()))) {
        std::ostringstream os;
        os << "induced_map: entry (" << a << ", " << b << ") has imaginary residue " << t.imag();
        throw InternalConsistencyError(os.str());
      }
      out.entries(a, b) = t.real();
    }
  }
  return out;
}

inline HermVector apply(const FinsLinearMap& map, const HermVector& v) {
  if (map.n != v.n) throw DimensionError("apply: map and vector dimensions differ");
  return HermVector(v.n, map.entries * v.coords);
}

/// max |L(B C) - L(B) L(C)|.
inline double check_homomorphism(const ComplexMatrix& b, const ComplexMatrix& c, const HermBasis& basis,
                                 const Tolerance& tol = {}) {
  const FinsLinearMap lb = induced_map(b, basis, tol);
  const FinsLinearMap lc = induced_map(c, basis, tol);
  const FinsLinearMap lbc = induced_map(b * c, basis, tol);
  return max_abs_diff(lbc, lb * lc);
}

/// The N scalar matrices exp(2 pi i k / N) * 1_N.
inline std::vector<ComplexMatrix> kernel_elements(int n) {
  if (n < 2) throw DomainError("kernel_elements: n must be at least 2");
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Complex w = k == 0 ? Complex(1.0) : std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    out.push_back(ComplexMatrix::identity(static_cast<std::size_t>(n)) * w);
  }
  return out;
}

}  // namespace finspinor
