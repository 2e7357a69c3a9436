#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "finspinor/epimorphism.hpp"
#include "finspinor/sampling.hpp"

using namespace finspinor;

TEST_CASE("identity maps to identity", "[epimorphism]") {
  for (int n = 2; n <= 5; ++n) {
    const auto l = induced_map(ComplexMatrix::identity(static_cast<std::size_t>(n)), standard_basis(n));
    CHECK(max_abs_diff(l, FinsLinearMap::identity(n)) <= 1e-14);
  }
}

TEST_CASE("boost along z", "[epimorphism]") {
  const double t = 0.7;
  const ComplexMatrix d = ComplexMatrix::diagonal({std::exp(t / 2), std::exp(-t / 2)});
  const FinsLinearMap l = induced_map(d, standard_basis(2));
  RealMatrix want = RealMatrix::identity(4);
  want(0, 0) = want(3, 3) = std::cosh(t);
  want(0, 3) = want(3, 0) = std::sinh(t);
  CHECK(max_abs_diff(l.entries, want) <= 1e-14);
}

TEST_CASE("rotation about z", "[epimorphism]") {
  const double th = 1.1;
  const ComplexMatrix d = ComplexMatrix::diagonal({std::polar(1.0, th / 2), std::polar(1.0, -th / 2)});
  const FinsLinearMap l = induced_map(d, standard_basis(2));
  RealMatrix want = RealMatrix::identity(4);
  want(1, 1) = want(2, 2) = std::cos(th);
  want(1, 2) = std::sin(th);
  want(2, 1) = -std::sin(th);
  CHECK(max_abs_diff(l.entries, want) <= 1e-14);
}

TEST_CASE("induced map acts by conjugation", "[epimorphism][property]") {
  const Tolerance tol;
  for (int n = 2; n <= 5; ++n) {
    const HermBasis basis = standard_basis(n);
    Rng rng(50 + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 40; ++trial) {
      const ComplexMatrix d = random_sl(static_cast<std::size_t>(n), substream_seed(7, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial)));
      const ComplexMatrix x = random_hermitian(n, rng);
      const HermVector lhs = apply(induced_map(d, basis), pack(x, basis, tol));
      const ComplexMatrix moved = d * x * hermitian_adjoint(d);
      const HermVector rhs = pack(moved, basis, tol);
      CHECK(max_abs_diff(lhs, rhs) <= 1e-9 * std::max(1.0, max_abs(moved)));
    }
  }
}

TEST_CASE("homomorphism and inverses", "[epimorphism][property]") {
  for (int n = 2; n <= 5; ++n) {
    const HermBasis basis = standard_basis(n);
    const auto un = static_cast<std::size_t>(n);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const ComplexMatrix b = random_sl(un, substream_seed(seed, 1, static_cast<std::uint64_t>(n)));
      const ComplexMatrix c = random_sl(un, substream_seed(seed, 2, static_cast<std::uint64_t>(n)));
      const FinsLinearMap lb = induced_map(b, basis);
      const FinsLinearMap lbc = induced_map(b * c, basis);
      const double scale = std::max(1.0, max_abs(lbc.entries));
      CHECK(check_homomorphism(b, c, basis) <= 1e-9 * scale);
      const FinsLinearMap linv = induced_map(inverse(b), basis);
      CHECK(max_abs_diff(lb * linv, FinsLinearMap::identity(n)) <= 1e-9 * std::max(1.0, max_abs(lb.entries) * max_abs(linv.entries)));
    }
  }
}

TEST_CASE("kernel consists of the scalar roots of unity", "[epimorphism]") {
  for (int n = 2; n <= 6; ++n) {
    const auto roots = kernel_elements(n);
    CHECK(roots.size() == static_cast<std::size_t>(n));
    for (const auto& r : roots) {
      CHECK(std::abs(det(r) - 1.0) <= 1e-12);
      CHECK(max_abs_diff(induced_map(r, standard_basis(n)), FinsLinearMap::identity(n)) <= 1e-12);
    }
  }
  // -1 lies in the kernel for n = 2, a unipotent shear does not.
  const ComplexMatrix minus = ComplexMatrix::identity(2) * Complex(-1.0);
  CHECK(max_abs_diff(induced_map(minus, standard_basis(2)), FinsLinearMap::identity(2)) <= 1e-15);
  const ComplexMatrix shear{{1.0, 0.5}, {0.0, 1.0}};
  CHECK(max_abs_diff(induced_map(shear, standard_basis(2)), FinsLinearMap::identity(2)) > 1e-6);
  CHECK_THROWS_AS(kernel_elements(1), DomainError);
}

TEST_CASE("induced map rejects invalid input", "[epimorphism]") {
  CHECK_THROWS_AS(induced_map(ComplexMatrix::diagonal({2.0, 1.0}), standard_basis(2)), GroupMembershipError);
  CHECK_THROWS_AS(induced_map(ComplexMatrix::identity(3), standard_basis(2)), DimensionError);
  CHECK_THROWS_AS(apply(FinsLinearMap::identity(2), HermVector::zero(3)), DimensionError);
  CHECK_THROWS_AS(FinsLinearMap::identity(2) * FinsLinearMap::identity(3), DimensionError);
}

TEST_CASE("induced map preserves the determinant", "[epimorphism][property]") {
  for (int n = 2; n <= 4; ++n) {
    const HermBasis basis = standard_basis(n);
    Rng rng(900 + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 30; ++trial) {
      const auto l = induced_map(random_sl(static_cast<std::size_t>(n), substream_seed(7, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial))), basis);
      const HermVector x = random_herm_vector(n, rng);
      const HermVector y = apply(l, x);
      const double dx = det_invariant(x, basis);
      CHECK(std::abs(det_invariant(y, basis) - dx) <= 1e-9 * std::max({1.0, std::abs(dx), std::pow(max_abs(l.entries), n)}));
    }
  }
}
