#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "finspinor/sampling.hpp"
#include "finspinor/special_n2.hpp"

using namespace finspinor;

namespace {

double minkowski_defect(const RealMatrix& l) {
  RealMatrix eta = RealMatrix::diagonal({1.0, -1.0, -1.0, -1.0});
  return max_abs_diff(transpose(l) * eta * l, eta);
}

double max_abs_diff(const MajoranaSpinor& a, const MajoranaSpinor& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < 4; ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

}  // namespace

TEST_CASE("explicit L matrix examples", "[n2]") {
  CHECK(max_abs_diff(explicit_l_matrix(ComplexMatrix::identity(2)), FinsLinearMap::identity(2)) == 0.0);

  const double t = 0.4;
  const auto boost = explicit_l_matrix(ComplexMatrix::diagonal({std::exp(t / 2), std::exp(-t / 2)}));
  CHECK(boost(0, 0) == Catch::Approx(std::cosh(t)));
  CHECK(boost(0, 3) == Catch::Approx(std::sinh(t)));
  CHECK(boost(3, 0) == Catch::Approx(std::sinh(t)));
  CHECK(boost(1, 1) == Catch::Approx(1.0));
  CHECK(boost(2, 2) == Catch::Approx(1.0));
  CHECK_THROWS_AS(explicit_l_matrix(ComplexMatrix::diagonal({2.0, 2.0})), GroupMembershipError);
  CHECK_THROWS_AS(explicit_l_matrix(ComplexMatrix::identity(3)), DimensionError);
}

TEST_CASE("explicit L matrix agrees with the trace formula", "[n2][property]") {
  const HermBasis basis = standard_basis(2);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ComplexMatrix d = random_sl(2, seed);
    const auto generic = induced_map(d, basis);
    CHECK(max_abs_diff(explicit_l_matrix(d), generic) <= 1e-10 * std::max(1.0, max_abs(generic.entries)));
  }
}

TEST_CASE("images are proper orthochronous Lorentz transformations", "[n2][property]") {
  const HermBasis basis = standard_basis(2);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto l = induced_map(random_sl(2, seed), basis).entries;
    const double scale = max_abs(l) * max_abs(l);
    CHECK(minkowski_defect(l) <= 1e-9 * std::max(1.0, scale));
    CHECK(std::abs(det(l) - 1.0) <= 1e-9 * std::max(1.0, scale * scale));
    CHECK(l(0, 0) >= 1.0 - 1e-12);
  }
}

TEST_CASE("realify and complexify", "[n2]") {
  CHECK(realify(Spinor{1.0, 0.0}) == MajoranaSpinor{1.0, 0.0, 0.0, 0.0});
  CHECK(realify(Spinor{Complex(0.0, -1.0), 0.0}) == MajoranaSpinor{0.0, 1.0, 0.0, 0.0});
  CHECK(realify(Spinor{0.0, Complex(2.0, -3.0)}) == MajoranaSpinor{0.0, 0.0, 2.0, 3.0});
  const MajoranaSpinor x{0.5, -1.5, 2.5, 3.0};
  CHECK(realify(complexify(x)) == x);
  CHECK_THROWS_AS(realify(Spinor{1.0, 0.0, 0.0}), ShapeError);
}

TEST_CASE("Majorana matrix examples", "[n2]") {
  CHECK(majorana_matrix(ComplexMatrix::identity(2)) == RealMatrix::identity(4));
  const double th = 0.3;
  const ComplexMatrix d = ComplexMatrix::diagonal({std::polar(1.0, th), std::polar(1.0, -th)});
  const double c = std::cos(th), s = std::sin(th);
  const RealMatrix want{{c, s, 0.0, 0.0}, {-s, c, 0.0, 0.0}, {0.0, 0.0, c, -s}, {0.0, 0.0, s, c}};
  CHECK(max_abs_diff(majorana_matrix(d), want) <= 1e-15);
}

TEST_CASE("Majorana matrix intertwines and multiplies", "[n2][property]") {
  Rng rng(31);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ComplexMatrix d = random_sl(2, seed);
    const ComplexMatrix e = random_sl(2, seed + 1000);
    const Spinor xi = random_spinor(2, rng);
    const MajoranaSpinor lhs = realify(Spinor(d * xi.components));
    const MajoranaSpinor rhs = majorana_matrix(d) * realify(xi);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * std::max(1.0, max_abs(d)));
    const RealMatrix mde = majorana_matrix(d * e);
    CHECK(max_abs_diff(mde, majorana_matrix(d) * majorana_matrix(e)) <= 1e-10 * std::max(1.0, max_abs(mde)));
    CHECK(std::abs(det(majorana_matrix(d)) - 1.0) <= 1e-9 * std::max(1.0, std::pow(max_abs(d), 4)));
  }
}

TEST_CASE("gamma matrices satisfy the Clifford relations exactly", "[n2]") {
  const GammaSet g = gamma_set();
  const ComplexMatrix one = ComplexMatrix::identity(4);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      const ComplexMatrix anti = g.gamma[mu] * g.gamma[nu] + g.gamma[nu] * g.gamma[mu];
      const ComplexMatrix want = mu == nu ? one * Complex(2.0 * kMinkowski[mu]) : ComplexMatrix(4, 4);
      CHECK(anti == want);
    }
  CHECK(g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3] == g.gamma5);
  CHECK(g.gamma5 * g.gamma5 == one * Complex(-1.0));
  for (const auto& gm : g.gamma) CHECK(g.gamma5 * gm == gm * g.gamma5 * Complex(-1.0));
  // Majorana representation: every gamma^mu is purely imaginary.
  for (const auto& gm : g.gamma)
    for (Complex z : gm.data()) CHECK(z.real() == 0.0);
}

TEST_CASE("symplectic product through gamma matrices", "[n2]") {
  const MajoranaSpinor e1 = realify(Spinor{1.0, 0.0});
  const MajoranaSpinor e2 = realify(Spinor{0.0, 1.0});
  CHECK(symplectic_via_gamma(e1, e2) == Complex(1.0));
  CHECK(symplectic_via_gamma(e2, e1) == Complex(-1.0));

  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Spinor xi = random_spinor(2, rng);
    const Spinor eta = random_spinor(2, rng);
    const MajoranaSpinor rx = realify(xi), re = realify(eta);
    CHECK(std::abs(symplectic_via_gamma(rx, rx)) <= 1e-12);
    const Complex want = xi[0] * eta[1] - xi[1] * eta[0];
    CHECK(std::abs(symplectic_via_gamma(rx, re) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    CHECK(std::abs(scalar_n_product({xi, eta}) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}
