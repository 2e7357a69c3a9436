#pragma once

// Seeded random inputs for property checks.

#include <array>
#include <cstdint>

#include "finspinor/herm.hpp"
#include "finspinor/numeric.hpp"
#include "finspinor/rng.hpp"
#include "finspinor/spinor.hpp"

namespace finspinor {

inline HermVector random_herm_vector(int n, Rng& rng) {
  HermVector v = HermVector::zero(n);
  for (auto& x : v.coords) x = rng.normal();
  return v;
}

inline Spinor random_spinor(int n, Rng& rng) {
  Spinor s;
  s.components.resize(static_cast<std::size_t>(n));
  for (auto& z : s.components) z = Complex(rng.normal(), rng.normal());
  return s;
}

inline ComplexMatrix random_complex_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.data()) z = Complex(rng.normal(), rng.normal());
  return m;
}

inline ComplexMatrix random_hermitian(int n, Rng& rng) {
  const auto a = random_complex_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n), rng);
  return (a + hermitian_adjoint(a)) * Complex(0.5);
}

inline std::array<double, 4> random_real4(Rng& rng) {
  return {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
}

/// random_sl(3, ...) redrawn along the substream until |m33| > min_m33.
inline ComplexMatrix random_sl3_decomposable(std::uint64_t seed, double min_m33 = 0.1) {
  for (std::uint64_t k = 0;; ++k) {
    ComplexMatrix m = random_sl(3, splitmix64(seed + k));
    if (std::abs(m(2, 2)) > min_m33) return m;
  }
}

}  // namespace finspinor
