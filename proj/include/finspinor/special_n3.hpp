#pragma once

// N = 3: the lambda-basis cubic form, the factorization of SL(3,C) matrices
// into four subgroup factors, and the explicit FL(9,R) action of each factor.
//
// Slots of a 9-vector: X^0..X^3 behave as a Minkowski 4-vector under the
// first factor, X^4..X^7 as a Majorana 4-spinor xi, and X^8 is the remaining
// singlet.

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "finspinor/epimorphism.hpp"
#include "finspinor/error.hpp"
#include "finspinor/herm.hpp"
#include "finspinor/numeric.hpp"
#include "finspinor/special_n2.hpp"

namespace finspinor {

using NineVector = HermVector;

inline NineVector make_nine_vector(const std::array<double, 9>& x) { return NineVector(3, {x.begin(), x.end()}); }

/// The Majorana part (X^4, X^5, X^6, X^7).
inline MajoranaSpinor spinor_part(const NineVector& v) { return {v[4], v[5], v[6], v[7]}; }

namespace detail {

inline void require_nine(const NineVector& v, const char* who) {
  if (v.n != 3 || v.size() != 9) throw DimensionError(std::string(who) + ": expected a 9-vector");
}

/// Largest |Im| among the entries; throws if above the residue bound.
inline double require_real(std::span<const Complex> zs, double scale, const char* who) {
  double worst = 0.0;
  for (const auto& z : zs) worst = std::max(worst, std::abs(z.imag()));
  if (worst > 1e-10 * std::max(1.0, scale)) {
    std::ostringstream os;
    os << who << ": imaginary residue " << worst << " on a real slot";
    throw InternalConsistencyError(os.str());
  }
  return worst;
}

}  // namespace detail

/// The cubic form det(X^A lambda_A), written out term by term.
inline double cubic_form(const NineVector& v) {
  detail::require_nine(v, "cubic_form");
  const auto& x = v.coords;
  return (x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3]) * x[8]
         - x[0] * (x[4] * x[4] + x[5] * x[5] + x[6] * x[6] + x[7] * x[7])
         + 2.0 * x[1] * (x[4] * x[6] + x[5] * x[7])
         + 2.0 * x[2] * (x[5] * x[6] - x[4] * x[7])
         + x[3] * (x[4] * x[4] + x[5] * x[5] - x[6] * x[6] - x[7] * x[7]);
}

/// The same form split into a Minkowski part and a spinor bilinear:
/// g_ab X^a X^b X^8 - g_ab X^a (xi-bar gamma^b xi).
inline double cubic_form_spinor_split(const NineVector& v) {
  detail::require_nine(v, "cubic_form_spinor_split");
  const GammaSet g = gamma_set();
  const MajoranaSpinor xi = spinor_part(v);
  Complex total{};
  for (std::size_t a = 0; a < 4; ++a) {
    const Complex current = bilinear(xi, g.gamma[0] * g.gamma[a], xi);
    total += kMinkowski[a] * v[a] * v[a] * v[8] - kMinkowski[a] * v[a] * current;
  }
  const Complex one[] = {total};
  detail::require_real(one, std::abs(total.real()), "cubic_form_spinor_split");
  return total.real();
}

// Builders for the four factor shapes.

/// [[A, 0], [0, 1]] for A in SL(2,C).
inline ComplexMatrix embed_sl2(const ComplexMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionError("embed_sl2: expected a 2x2 matrix");
  ComplexMatrix m = ComplexMatrix::identity(3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = a(i, j);
  return m;
}

/// Upper unitriangular factor with d^1_3 = e1 - i e2, d^2_3 = e3 - i e4.
inline ComplexMatrix upper_translation(const std::array<double, 4>& eps) {
  ComplexMatrix m = ComplexMatrix::identity(3);
  m(0, 2) = Complex(eps[0], -eps[1]);
  m(1, 2) = Complex(eps[2], -eps[3]);
  return m;
}

/// Lower unitriangular factor with d^3_1 = k3 - i k4, d^3_2 = -k1 + i k2.
inline ComplexMatrix lower_translation(const std::array<double, 4>& kappa) {
  ComplexMatrix m = ComplexMatrix::identity(3);
  m(2, 0) = Complex(kappa[2], -kappa[3]);
  m(2, 1) = Complex(-kappa[0], kappa[1]);
  return m;
}

/// diag(d, d, d^-2) with d = modulus * exp(i phi).
inline ComplexMatrix scaling_matrix(double modulus, double phi) {
  if (!(modulus > 0.0)) throw DomainError("scaling_matrix: modulus must be positive");
  const Complex d = std::polar(modulus, phi);
  return ComplexMatrix::diagonal({d, d, 1.0 / (d * d)});
}

/// Inverse parametrizations of the translation factors.
inline std::array<double, 4> upper_translation_params(const ComplexMatrix& m) {
  return {m(0, 2).real(), -m(0, 2).imag(), m(1, 2).real(), -m(1, 2).imag()};
}
inline std::array<double, 4> lower_translation_params(const ComplexMatrix& m) {
  return {-m(2, 1).real(), m(2, 1).imag(), m(2, 0).real(), -m(2, 0).imag()};
}

/// m = d1 * d2 * d3 * d4 with
///   d1 = [[P, 0], [0, 1]], P in SL(2,C);
///   d2 = [[1, u], [0, 1]] (entries (1,3), (2,3) free);
///   d3 = [[1, 0], [w^T, 1]] (entries (3,1), (3,2) free);
///   d4 = diag(d, d, d^-2).
struct SL3Decomposition {
  ComplexMatrix d1;
  ComplexMatrix d2;
  ComplexMatrix d3;
  ComplexMatrix d4;
  Complex d;  // the scaling parameter, principal square root of 1 / m33
  double reconstruction_residual = 0.0;

  static constexpr const char* kBranch = "principal-sqrt-of-inverse-m33";

  ComplexMatrix product() const { return d1 * d2 * d3 * d4; }
  std::array<double, 4> eps() const { return upper_translation_params(d2); }
  std::array<double, 4> kappa() const { return lower_translation_params(d3); }
  ComplexMatrix block() const {
    return ComplexMatrix{{d1(0, 0), d1(0, 1)}, {d1(1, 0), d1(1, 1)}};
  }
};

/// Writes m = [[A, b], [c^T, h]] and solves for the factors:
///   d = sqrt(1/h) (principal branch), P = (A - b c^T / h) / d,
///   u = P^-1 b / h, w = c / d.
/// Requires |h| > tol.abs.
inline SL3Decomposition decompose_sl3(const ComplexMatrix& m, const Tolerance& tol = {}) {
  if (m.rows() != 3 || m.cols() != 3) throw DimensionError("decompose_sl3: expected a 3x3 matrix");
  require_unimodular(m, tol, "decompose_sl3");
  const Complex h = m(2, 2);
  if (!(std::abs(h) > tol.abs)) {
    std::ostringstream os;
    os << "decompose_sl3: entry (3,3) is zero to tolerance (|m33| = " << std::abs(h) << ")";
    throw DomainError(os.str());
  }
  SL3Decomposition out;
  out.d = std::sqrt(1.0 / h);
  const Complex d = out.d;

  ComplexMatrix p(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) p(i, j) = (m(i, j) - m(i, 2) * m(2, j) / h) / d;
  const Complex det_p = det(p);
  if (std::abs(det_p - 1.0) > tol.bound(max_abs(p) * max_abs(p))) {
    std::ostringstream os;
    os << "decompose_sl3: leading block is not unimodular after the Schur correction (det = " << det_p << ")";
    throw InternalConsistencyError(os.str());
  }
  ComplexMatrix p_inv;
  try {
    p_inv = inverse(p, tol);
  } catch (const SingularityError& e) {
    throw InternalConsistencyError(std::string("decompose_sl3: ") + e.what());
  }
  const Complex b_over_h[] = {m(0, 2) / h, m(1, 2) / h};
  const auto u = p_inv * std::span<const Complex>(b_over_h);

  out.d1 = embed_sl2(p);
  out.d2 = ComplexMatrix::identity(3);
  out.d2(0, 2) = u[0];
  out.d2(1, 2) = u[1];
  out.d3 = ComplexMatrix::identity(3);
  out.d3(2, 0) = m(2, 0) / d;
  out.d3(2, 1) = m(2, 1) / d;
  out.d4 = ComplexMatrix::diagonal({d, d, 1.0 / (d * d)});

  const ComplexMatrix rebuilt = out.product();
  out.reconstruction_residual = max_abs_diff(rebuilt, m);
  const double scale = max_abs(out.d1) * max_abs(out.d2) * max_abs(out.d3) * max_abs(out.d4);
  if (out.reconstruction_residual > tol.bound(scale)) {
    std::ostringstream os;
    os << "decompose_sl3: reconstruction residual " << out.reconstruction_residual << " exceeds tolerance";
    throw InternalConsistencyError(os.str());
  }
  return out;
}

/// Action of embed_sl2(block): a Lorentz transformation of X^0..X^3, the
/// Majorana transformation of X^4..X^7, X^8 fixed.
inline NineVector subgroup_51(const NineVector& v, const ComplexMatrix& block) {
  detail::require_nine(v, "subgroup_51");
  const FinsLinearMap lorentz = explicit_l_matrix(block);
  const RealMatrix maj = majorana_matrix(block);
  NineVector out = v;
  for (std::size_t a = 0; a < 4; ++a) {
    out[a] = 0.0;
    for (std::size_t b = 0; b < 4; ++b) out[a] += lorentz(a, b) * v[b];
  }
  const MajoranaSpinor xi = maj * spinor_part(v);
  for (std::size_t i = 0; i < 4; ++i) out[4 + i] = xi[i];
  return out;
}

/// Action of upper_translation(eps):
///   X'^a = X^a + eps-bar gamma^a xi + 1/2 eps-bar gamma^a eps X^8,
///   xi' = xi + eps X^8, X'^8 = X^8, with eps-bar = eps^T gamma^0.
inline NineVector subgroup_52(const NineVector& v, const std::array<double, 4>& eps) {
  detail::require_nine(v, "subgroup_52");
  const GammaSet g = gamma_set();
  const MajoranaSpinor xi = spinor_part(v);
  NineVector out = v;
  std::array<Complex, 4> vec{};
  for (std::size_t a = 0; a < 4; ++a) {
    const ComplexMatrix bar_gamma = g.gamma[0] * g.gamma[a];
    vec[a] = v[a] + bilinear(eps, bar_gamma, xi) + 0.5 * bilinear(eps, bar_gamma, eps) * v[8];
  }
  double scale = 0.0;
  for (const auto& z : vec) scale = std::max(scale, std::abs(z));
  detail::require_real(vec, scale, "subgroup_52");
  for (std::size_t a = 0; a < 4; ++a) out[a] = vec[a].real();
  for (std::size_t i = 0; i < 4; ++i) out[4 + i] = xi[i] + eps[i] * v[8];
  return out;
}

/// Action of lower_translation(kappa):
///   X'^a = X^a,
///   xi' = -i g_ab gamma^a kappa X^b + xi,
///   X'^8 = g_ab kappa-bar gamma^a kappa X^b + 2i kappa-bar xi + X^8.
inline NineVector subgroup_53(const NineVector& v, const std::array<double, 4>& kappa) {
  detail::require_nine(v, "subgroup_53");
  const GammaSet g = gamma_set();
  const MajoranaSpinor xi = spinor_part(v);
  std::array<Complex, 5> slots{};  // xi'^1..xi'^4, X'^8
  for (std::size_t i = 0; i < 4; ++i) slots[i] = xi[i];
  slots[4] = v[8];
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t i = 0; i < 4; ++i) {
      Complex gk{};
      for (std::size_t j = 0; j < 4; ++j) gk += g.gamma[a](i, j) * kappa[j];
      slots[i] += -kI * kMinkowski[a] * gk * v[a];
    }
    slots[4] += kMinkowski[a] * bilinear(kappa, g.gamma[0] * g.gamma[a], kappa) * v[a];
  }
  slots[4] += 2.0 * kI * bilinear(kappa, g.gamma[0], xi);
  double scale = 0.0;
  for (const auto& z : slots) scale = std::max(scale, std::abs(z));
  detail::require_real(slots, scale, "subgroup_53");
  NineVector out = v;
  for (std::size_t i = 0; i < 4; ++i) out[4 + i] = slots[i].real();
  out[8] = slots[4].real();
  return out;
}

/// Action of scaling_matrix(modulus, phi): X^0..X^3 scale by |d|^2, the pairs
/// (X^4, X^5) and (X^6, X^7) rotate by 3 phi and scale by |d|^-1, X^8 scales
/// by |d|^-4.
inline NineVector subgroup_54(const NineVector& v, double modulus, double phi) {
  detail::require_nine(v, "subgroup_54");
  if (!(modulus > 0.0)) throw DomainError("subgroup_54: modulus must be positive");
  const double c = std::cos(3.0 * phi) / modulus;
  const double s = std::sin(3.0 * phi) / modulus;
  NineVector out = v;
  for (std::size_t a = 0; a < 4; ++a) out[a] = modulus * modulus * v[a];
  out[4] = c * v[4] + s * v[5];
  out[5] = -s * v[4] + c * v[5];
  out[6] = c * v[6] + s * v[7];
  out[7] = -s * v[6] + c * v[7];
  out[8] = v[8] / (modulus * modulus * modulus * modulus);
  return out;
}

/// apply(L(m), v) computed through the four-factor decomposition, innermost
/// factor (the scaling) first.
inline NineVector compose_via_decomposition(const ComplexMatrix& m, const NineVector& v, const Tolerance& tol = {}) {
  detail::require_nine(v, "compose_via_decomposition");
  const SL3Decomposition f = decompose_sl3(m, tol);
  NineVector out = subgroup_54(v, std::abs(f.d), std::arg(f.d));
  out = subgroup_53(out, f.kappa());
  out = subgroup_52(out, f.eps());
  return subgroup_51(out, f.block());
}

}  // namespace finspinor
