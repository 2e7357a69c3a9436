#pragma once

// N = 2: Weyl spinors, the Lorentz group as FL(4,R), Majorana 4-spinors and
// the Majorana-representation gamma matrices.
//
// explicit_l_matrix and majorana_matrix are written out entry by entry and do
// not go through traces; they serve as independent cross-checks of
// induced_map.

#include <array>
#include <cmath>
#include <complex>

#include "finspinor/epimorphism.hpp"
#include "finspinor/error.hpp"
#include "finspinor/numeric.hpp"
#include "finspinor/spinor.hpp"

namespace finspinor {

/// (xi^1_R, xi^2_R, xi^3_R, xi^4_R) with xi^1 = xi^1_R - i xi^2_R and
/// xi^2 = xi^3_R - i xi^4_R.
using MajoranaSpinor = std::array<double, 4>;

/// Minkowski metric diag(1, -1, -1, -1).
inline constexpr std::array<double, 4> kMinkowski{1.0, -1.0, -1.0, -1.0};

namespace detail {

inline void require_sl2(const ComplexMatrix& d, const char* who) {
  if (d.rows() != 2 || d.cols() != 2) throw DimensionError(std::string(who) + ": expected a 2x2 matrix");
  require_unimodular(d, Tolerance{}, who);
}

}  // namespace detail

/// L(D)^a_b for D in SL(2,C), spelled out as sixteen bilinear forms in the
/// entries of D and their conjugates.
inline FinsLinearMap explicit_l_matrix(const ComplexMatrix& dm) {
  detail::require_sl2(dm, "explicit_l_matrix");
  // d(a, b) = d^a_b (row a, column b, 1-based); c(a, b) its conjugate.
  auto d = [&](int a, int b) { return dm(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)); };
  auto c = [&](int a, int b) { return std::conj(d(a, b)); };
  const Complex h = 0.5;
  const Complex ih = Complex(0.0, 0.5);
  std::array<std::array<Complex, 4>, 4> l{};

  l[0][0] = h * (d(1, 1) * c(1, 1) + d(1, 2) * c(1, 2) + d(2, 1) * c(2, 1) + d(2, 2) * c(2, 2));
  l[0][1] = h * (d(1, 1) * c(1, 2) + d(2, 1) * c(2, 2) + d(1, 2) * c(1, 1) + d(2, 2) * c(2, 1));
  l[0][2] = ih * (d(1, 2) * c(1, 1) + d(2, 2) * c(2, 1) - d(1, 1) * c(1, 2) - d(2, 1) * c(2, 2));
  l[0][3] = h * (d(1, 1) * c(1, 1) + d(2, 1) * c(2, 1) - d(1, 2) * c(1, 2) - d(2, 2) * c(2, 2));

  l[1][0] = h * (d(1, 1) * c(2, 1) + d(2, 1) * c(1, 1) + d(1, 2) * c(2, 2) + d(2, 2) * c(1, 2));
  l[1][1] = h * (d(1, 1) * c(2, 2) + d(2, 1) * c(1, 2) + d(1, 2) * c(2, 1) + d(2, 2) * c(1, 1));
  l[1][2] = ih * (d(1, 2) * c(2, 1) + d(2, 2) * c(1, 1) - d(1, 1) * c(2, 2) - d(2, 1) * c(1, 2));
  l[1][3] = h * (d(1, 1) * c(2, 1) + d(2, 1) * c(1, 1) - d(1, 2) * c(2, 2) - d(2, 2) * c(1, 2));

  l[2][0] = ih * (d(1, 1) * c(2, 1) - d(2, 1) * c(1, 1) + d(1, 2) * c(2, 2) - d(2, 2) * c(1, 2));
  l[2][1] = ih * (d(1, 1) * c(2, 2) - d(2, 1) * c(1, 2) + d(1, 2) * c(2, 1) - d(2, 2) * c(1, 1));
  l[2][2] = h * (d(1, 1) * c(2, 2) + d(2, 2) * c(1, 1) - d(1, 2) * c(2, 1) - d(2, 1) * c(1, 2));
  l[2][3] = ih * (d(1, 1) * c(2, 1) - d(2, 1) * c(1, 1) - d(1, 2) * c(2, 2) + d(2, 2) * c(1, 2));

  l[3][0] = h * (d(1, 1) * c(1, 1) - d(2, 1) * c(2, 1) + d(1, 2) * c(1, 2) - d(2, 2) * c(2, 2));
  l[3][1] = h * (d(1, 1) * c(1, 2) - d(2, 1) * c(2, 2) + d(1, 2) * c(1, 1) - d(2, 2) * c(2, 1));
  l[3][2] = ih * (d(1, 2) * c(1, 1) - d(2, 2) * c(2, 1) - d(1, 1) * c(1, 2) + d(2, 1) * c(2, 2));
  l[3][3] = h * (d(1, 1) * c(1, 1) - d(1, 2) * c(1, 2) - d(2, 1) * c(2, 1) + d(2, 2) * c(2, 2));

  FinsLinearMap out{2, RealMatrix(4, 4)};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) out.entries(a, b) = l[a][b].real();
  return out;
}

inline MajoranaSpinor realify(const Spinor& xi) {
  if (xi.n() != 2) throw ShapeError("realify: expected a 2-spinor");
  return {xi[0].real(), -xi[0].imag(), xi[1].real(), -xi[1].imag()};
}

/// Inverse of realify.
inline Spinor complexify(const MajoranaSpinor& x) {
  return Spinor{Complex(x[0], -x[1]), Complex(x[2], -x[3])};
}

/// Real 4x4 M(D) with realify(D xi) = M(D) realify(xi).
inline RealMatrix majorana_matrix(const ComplexMatrix& dm) {
  detail::require_sl2(dm, "majorana_matrix");
  auto d = [&](int a, int b) { return dm(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)); };
  const Complex h = 0.5;
  const Complex ih = Complex(0.0, 0.5);
  std::array<std::array<Complex, 4>, 4> m{};

  m[0][0] = h * (std::conj(d(1, 1)) + d(1, 1));
  m[0][1] = ih * (std::conj(d(1, 1)) - d(1, 1));
  m[0][2] = h * (std::conj(d(1, 2)) + d(1, 2));
  m[0][3] = ih * (std::conj(d(1, 2)) - d(1, 2));

  m[1][0] = ih * (d(1, 1) - std::conj(d(1, 1)));
  m[1][1] = h * (d(1, 1) + std::conj(d(1, 1)));
  m[1][2] = ih * (d(1, 2) - std::conj(d(1, 2)));
  m[1][3] = h * (d(1, 2) + std::conj(d(1, 2)));

  m[2][0] = h * (std::conj(d(2, 1)) + d(2, 1));
  m[2][1] = ih * (std::conj(d(2, 1)) - d(2, 1));
  m[2][2] = h * (std::conj(d(2, 2)) + d(2, 2));
  m[2][3] = ih * (std::conj(d(2, 2)) - d(2, 2));

  m[3][0] = ih * (d(2, 1) - std::conj(d(2, 1)));
  m[3][1] = h * (d(2, 1) + std::conj(d(2, 1)));
  m[3][2] = ih * (d(2, 2) - std::conj(d(2, 2)));
  m[3][3] = h * (d(2, 2) + std::conj(d(2, 2)));

  RealMatrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = m[i][j].real();
  return out;
}

inline MajoranaSpinor operator*(const RealMatrix& m, const MajoranaSpinor& x) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("expected a 4x4 matrix");
  MajoranaSpinor out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += m(i, j) * x[j];
  return out;
}

/// Dirac matrices in the Majorana representation. Entries are 0, +-1, +-i,
/// so products and sums of them are exact in double arithmetic.
struct GammaSet {
  std::array<ComplexMatrix, 4> gamma;  // gamma^0 .. gamma^3
  ComplexMatrix gamma5;
};

inline GammaSet gamma_set() {
  const Complex o = 0.0;
  const Complex i = kI;
  GammaSet g;
  g.gamma[0] = ComplexMatrix{{o, o, i, o}, {o, o, o, -i}, {-i, o, o, o}, {o, i, o, o}};
  g.gamma[1] = ComplexMatrix{{i, o, o, o}, {o, -i, o, o}, {o, o, -i, o}, {o, o, o, i}};
  g.gamma[2] = ComplexMatrix{{o, i, o, o}, {i, o, o, o}, {o, o, o, i}, {o, o, i, o}};
  g.gamma[3] = ComplexMatrix{{o, o, -i, o}, {o, o, o, i}, {-i, o, o, o}, {o, i, o, o}};
  g.gamma5 = ComplexMatrix{{0.0, -1.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, -1.0}, {0.0, 0.0, 1.0, 0.0}};
  return g;
}

/// Bilinear x^T A y for real column vectors and a complex 4x4 matrix.
inline Complex bilinear(const MajoranaSpinor& x, const ComplexMatrix& a, const MajoranaSpinor& y) {
  Complex s{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s += x[i] * a(i, j) * y[j];
  return s;
}

/// xi-bar gamma^5 eta - i xi-bar eta with xi-bar = xi^T gamma^0. Equals the
/// symplectic product xi^1 eta^2 - xi^2 eta^1 of the complexified spinors.
inline Complex symplectic_via_gamma(const MajoranaSpinor& xi, const MajoranaSpinor& eta) {
  const GammaSet g = gamma_set();
  return bilinear(xi, g.gamma[0] * g.gamma5, eta) - kI * bilinear(xi, g.gamma[0], eta);
}

}  // namespace finspinor
