#pragma once

// Randomized property suites behind `finspinor verify`. Each property runs
// `trials` seeded draws; trial i of property k uses substream_seed(seed, k, i)
// so the report does not depend on evaluation order.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "finspinor/epimorphism.hpp"
#include "finspinor/herm.hpp"
#include "finspinor/numeric.hpp"
#include "finspinor/rng.hpp"
#include "finspinor/sampling.hpp"
#include "finspinor/special_n2.hpp"
#include "finspinor/special_n3.hpp"
#include "finspinor/spinor.hpp"
#include "finspinor/version.hpp"

namespace finspinor {

enum class OutputFormat { Json, Csv, Pretty };

struct RunConfig {
  int n = 2;
  std::uint64_t seed = 1;
  int trials = 100;
  double tol_abs = 1e-10;
  double tol_rel = 1e-9;
  OutputFormat format = OutputFormat::Json;

  Tolerance tolerance() const { return {tol_abs, tol_rel}; }
};

inline void validate(const RunConfig& c) {
  if (c.n < 2) throw DomainError("n must be at least 2");
  if (c.trials < 1) throw DomainError("trials must be positive");
  validate(c.tolerance());
}

/// How a property's statistic is compared with its threshold.
enum class Comparison { AtMost, Above };

struct PropertyRecord {
  std::string name;
  int trials = 0;
  /// Worst value over trials: the maximum for AtMost, the minimum for Above.
  double max_deviation = 0.0;
  double threshold = 0.0;
  Comparison comparison = Comparison::AtMost;
  bool pass = false;
  bool skipped = false;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  RunConfig config;
  std::string generator{kGeneratorId};
  std::string version{kVersion};
  std::vector<PropertyRecord> records;

  bool pass() const {
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.skipped || r.pass; });
  }
};

namespace detail {

class SuiteRunner {
 public:
  explicit SuiteRunner(const RunConfig& cfg) : cfg_(cfg) {}

  /// Runs `trial(rng, i) -> deviation` for each trial and records the worst.
  void check(const std::string& name, double threshold, const std::function<double(Rng&, int)>& trial,
             int trials = -1, Comparison cmp = Comparison::AtMost) {
    const std::uint64_t stream = next_stream_++;
    if (trials < 0) trials = cfg_.trials;
    PropertyRecord r;
    r.name = name;
    r.trials = trials;
    r.max_deviation = cmp == Comparison::AtMost ? 0.0 : std::numeric_limits<double>::infinity();
    r.threshold = threshold;
    r.comparison = cmp;
    try {
      for (int i = 0; i < trials; ++i) {
        Rng rng(substream_seed(cfg_.seed, stream, static_cast<std::uint64_t>(i)));
        const double dev = trial(rng, i);
        if (std::isnan(dev)) {
          r.max_deviation = std::numeric_limits<double>::quiet_NaN();
          break;
        }
        r.max_deviation = cmp == Comparison::AtMost ? std::max(r.max_deviation, dev) : std::min(r.max_deviation, dev);
      }
      r.pass = cmp == Comparison::AtMost ? r.max_deviation <= threshold : r.max_deviation > threshold;
    } catch (const std::exception& e) {
      r.pass = false;
      r.note = e.what();
    }
    records_.push_back(std::move(r));
  }

  void skip(const std::string& name, const std::string& why) {
    ++next_stream_;
    PropertyRecord r;
    r.name = name;
    r.skipped = true;
    r.note = why;
    records_.push_back(std::move(r));
  }

  /// Seed for auxiliary draws that must not collide with property streams.
  std::uint64_t seed(std::uint64_t stream, std::uint64_t i) const { return substream_seed(cfg_.seed, stream, i); }

  std::vector<PropertyRecord> take() { return std::move(records_); }

 private:
  const RunConfig& cfg_;
  std::uint64_t next_stream_ = 1;
  std::vector<PropertyRecord> records_;
};

inline double rel_dev(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline ComplexMatrix sl_from(Rng& rng, int n) {
  return random_sl(n, static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53));
}

}  // namespace detail

/// Runs every property suite that applies to config.n.
inline VerificationReport run_verification(const RunConfig& cfg) {
  validate(cfg);
  const int n = cfg.n;
  const Tolerance tol = cfg.tolerance();
  const HermBasis basis = standard_basis(n);
  detail::SuiteRunner s(cfg);
  using detail::rel_dev;
  using detail::sl_from;

  // numeric_core
  s.check("random_sl_unimodular", 1e-12, [&](Rng& rng, int) { return std::abs(det(sl_from(rng, n)) - 1.0); });

  // spinor_core
  s.check("scalar_product_antisymmetry", 1e-12, [&](Rng& rng, int) {
    std::vector<Spinor> sp;
    for (int i = 0; i < n; ++i) sp.push_back(random_spinor(n, rng));
    const Complex p = scalar_n_product(sp);
    std::swap(sp[0], sp[static_cast<std::size_t>(n - 1)]);
    return std::abs(scalar_n_product(sp) + p) / std::max(1.0, std::abs(p));
  });
  s.check("scalar_product_invariance", 1e-10, [&](Rng& rng, int) {
    const BasisChange change(sl_from(rng, n), tol);
    std::vector<Spinor> sp, moved;
    for (int i = 0; i < n; ++i) {
      sp.push_back(random_spinor(n, rng));
      moved.emplace_back(change.d() * sp.back().components);
    }
    const Complex p = scalar_n_product(sp);
    return std::abs(scalar_n_product(moved) - p) / std::max(1.0, std::abs(p));
  });
  s.check("spintensor_functoriality", 1e-10, [&](Rng& rng, int) {
    const BasisChange c1(sl_from(rng, n), tol);
    const BasisChange c2(sl_from(rng, n), tol);
    SpinTensor t(n, {1, 1, 1, 0});
    for (auto& z : t.data()) z = Complex(rng.normal(), rng.normal());
    const SpinTensor twice = transform_components(transform_components(t, c1), c2);
    const SpinTensor once = transform_components(t, c1.then(c2, tol));
    double scale = 0.0;
    for (const auto& z : once.data()) scale = std::max(scale, std::abs(z));
    return twice.max_abs_diff(once) / std::max(1.0, scale);
  });
  s.check("dual_contraction", 1e-10, [&](Rng&, int) {
    double worst = 0.0;
    for (int a = 0; a < basis.dim(); ++a)
      for (int b = 0; b < basis.dim(); ++b) {
        const auto t = tensor_product(SpinTensor::lower_pair(basis.e_upper[static_cast<std::size_t>(a)]),
                                      SpinTensor::upper_pair(basis.e_lower[static_cast<std::size_t>(b)]));
        worst = std::max(worst, std::abs(full_contraction(t).value() - Complex(a == b ? 1.0 : 0.0)));
      }
    return worst;
  }, 1);

  // herm_space
  s.check("dual_pairing", 1e-10, [&](Rng&, int) { return pairing_residual(basis); }, 1);
  s.check("basis_hermitian", 1e-12, [&](Rng&, int) {
    double worst = 0.0;
    for (const auto& e : basis.e_lower) worst = std::max(worst, hermitian_asymmetry(e));
    return worst;
  }, 1);
  s.check("pack_unpack_roundtrip", 1e-10, [&](Rng& rng, int) {
    const ComplexMatrix x = random_hermitian(n, rng);
    return max_abs_diff(unpack(pack(x, basis, tol), basis), x);
  });
  const FormTensor form = form_tensor(basis);
  s.check("form_det_agreement", 1e-9, [&](Rng& rng, int) {
    const HermVector v = random_herm_vector(n, rng);
    return rel_dev(finsler_length_power(v, form), det_invariant(v, basis));
  });

  // epimorphism
  s.check("homomorphism", 1e-9, [&](Rng& rng, int) {
    const auto b = sl_from(rng, n);
    return check_homomorphism(b, sl_from(rng, n), basis, tol);
  });
  s.check("inverse_map", 1e-9, [&](Rng& rng, int) {
    const auto c = sl_from(rng, n);
    const auto lc = induced_map(c, basis, tol);
    return max_abs_diff(induced_map(inverse(c, tol), basis, tol) * lc, FinsLinearMap::identity(n));
  });
  const auto kernel = kernel_elements(n);
  s.check("kernel_identity", 1e-12, [&](Rng&, int i) {
    return max_abs_diff(induced_map(kernel[static_cast<std::size_t>(i)], basis, tol), FinsLinearMap::identity(n));
  }, n);
  s.check("kernel_nontrivial", 1e-6, [&](Rng& rng, int) {
    ComplexMatrix c = sl_from(rng, n);
    while (distance_to_set(c, kernel) <= 1e-3) c = sl_from(rng, n);
    return max_abs_diff(induced_map(c, basis, tol), FinsLinearMap::identity(n));
  }, -1, Comparison::Above);
  s.check("conjugation_action", 1e-9, [&](Rng& rng, int) {
    const auto d = sl_from(rng, n);
    const ComplexMatrix x = random_hermitian(n, rng);
    const HermVector lhs = apply(induced_map(d, basis, tol), pack(x, basis, tol));
    const HermVector rhs = pack(d * x * hermitian_adjoint(d), basis, tol);
    double scale = 1.0;
    for (double c : rhs.coords) scale = std::max(scale, std::abs(c));
    return max_abs_diff(lhs, rhs) / scale;
  });
  s.check("forminvariance", 1e-9, [&](Rng& rng, int) {
    const auto l = induced_map(sl_from(rng, n), basis, tol);
    const HermVector v = random_herm_vector(n, rng);
    return rel_dev(finsler_length_power(apply(l, v), form), finsler_length_power(v, form));
  });

  // special_n2
  const std::vector<std::string> n2_names{"minkowski_coefficients", "explicit_l_oracle", "lorentz_image",
                                          "majorana_intertwining", "majorana_homomorphism", "clifford_relations",
                                          "gamma5_product", "symplectic_rewrite"};
  if (n == 2) {
    s.check("minkowski_coefficients", 1e-12, [&](Rng&, int) {
      double worst = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          worst = std::max(worst, std::abs(form.coefficient({a, b}) - (a == b ? kMinkowski[static_cast<std::size_t>(a)] : 0.0)));
      return worst;
    }, 1);
    s.check("explicit_l_oracle", 1e-10, [&](Rng& rng, int) {
      const auto d = sl_from(rng, 2);
      return max_abs_diff(explicit_l_matrix(d), induced_map(d, basis, tol));
    });
    s.check("lorentz_image", 1e-9, [&](Rng& rng, int) {
      const auto l = induced_map(sl_from(rng, 2), basis, tol).entries;
      const RealMatrix eta = RealMatrix::diagonal({1.0, -1.0, -1.0, -1.0});
      double dev = max_abs_diff(transpose(l) * eta * l, eta);
      dev = std::max(dev, std::abs(det(l) - 1.0));
      dev = std::max(dev, std::max(0.0, 1.0 - l(0, 0)));
      return dev;
    });
    s.check("majorana_intertwining", 1e-12, [&](Rng& rng, int) {
      const auto d = sl_from(rng, 2);
      const Spinor xi = random_spinor(2, rng);
      const MajoranaSpinor lhs = realify(Spinor(d * xi.components));
      const MajoranaSpinor rhs = majorana_matrix(d) * realify(xi);
      double worst = 0.0;
      for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
      return worst;
    });
    s.check("majorana_homomorphism", 1e-10, [&](Rng& rng, int) {
      const auto d1 = sl_from(rng, 2);
      const auto d2 = sl_from(rng, 2);
      return max_abs_diff(majorana_matrix(d1 * d2), majorana_matrix(d1) * majorana_matrix(d2));
    });
    s.check("clifford_relations", 0.0, [&](Rng&, int) {
      const GammaSet g = gamma_set();
      double worst = 0.0;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
          const ComplexMatrix anti = g.gamma[a] * g.gamma[b] + g.gamma[b] * g.gamma[a];
          const ComplexMatrix want = ComplexMatrix::identity(4) * Complex(a == b ? 2.0 * kMinkowski[a] : 0.0);
          worst = std::max(worst, max_abs_diff(anti, want));
        }
      return worst;
    }, 1);
    s.check("gamma5_product", 0.0, [&](Rng&, int) {
      const GammaSet g = gamma_set();
      return max_abs_diff(g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3], g.gamma5);
    }, 1);
    s.check("symplectic_rewrite", 1e-12, [&](Rng& rng, int) {
      const Spinor xi = random_spinor(2, rng);
      const Spinor eta = random_spinor(2, rng);
      return std::abs(symplectic_via_gamma(realify(xi), realify(eta)) - scalar_n_product({xi, eta}));
    });
  } else {
    for (const auto& name : n2_names) s.skip(name, "requires n = 2");
  }

  // special_n3
  const std::vector<std::string> n3_names{
      "lambda_duals_match_gram", "cubic_form_det", "cubic_form_tensor", "closing_identity",
      "decomposition_reconstruction", "decomposition_unimodular", "decomposition_pipeline", "subgroup_51_oracle",
      "subgroup_52_oracle", "subgroup_53_oracle", "subgroup_54_oracle", "subgroup_52_additive",
      "subgroup_53_additive", "cubic_invariance"};
  if (n == 3) {
    s.check("lambda_duals_match_gram", 1e-12, [&](Rng&, int) {
      const auto gram = gram_dual(basis.e_lower);
      double worst = 0.0;
      for (std::size_t a = 0; a < gram.size(); ++a) worst = std::max(worst, max_abs_diff(gram[a], basis.e_upper[a]));
      return worst;
    }, 1);
    s.check("cubic_form_det", 1e-10, [&](Rng& rng, int) {
      const HermVector v = random_herm_vector(3, rng);
      return std::abs(cubic_form(v) - det_invariant(v, basis));
    });
    s.check("cubic_form_tensor", 1e-10, [&](Rng& rng, int) {
      const HermVector v = random_herm_vector(3, rng);
      return std::abs(cubic_form(v) - finsler_length_power(v, form));
    });
    s.check("closing_identity", 1e-10, [&](Rng& rng, int) {
      const HermVector v = random_herm_vector(3, rng);
      return std::abs(cubic_form(v) - cubic_form_spinor_split(v));
    });
    s.check("decomposition_reconstruction", 1e-10, [&](Rng& rng, int) {
      const auto m = random_sl3_decomposable(static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53));
      return decompose_sl3(m, tol).reconstruction_residual;
    });
    s.check("decomposition_unimodular", 1e-10, [&](Rng& rng, int) {
      const auto f = decompose_sl3(random_sl3_decomposable(static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53)), tol);
      double worst = 0.0;
      for (const auto* m : {&f.d1, &f.d2, &f.d3, &f.d4}) worst = std::max(worst, std::abs(det(*m) - 1.0));
      return worst;
    });
    s.check("decomposition_pipeline", 1e-9, [&](Rng& rng, int) {
      const auto m = random_sl3_decomposable(static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53));
      const HermVector v = random_herm_vector(3, rng);
      return max_abs_diff(compose_via_decomposition(m, v, tol), apply(induced_map(m, basis, tol), v));
    });
    s.check("subgroup_51_oracle", 1e-10, [&](Rng& rng, int) {
      const auto block = sl_from(rng, 2);
      const HermVector v = random_herm_vector(3, rng);
      return max_abs_diff(subgroup_51(v, block), apply(induced_map(embed_sl2(block), basis, tol), v));
    });
    s.check("subgroup_52_oracle", 1e-10, [&](Rng& rng, int) {
      const auto eps = random_real4(rng);
      const HermVector v = random_herm_vector(3, rng);
      return max_abs_diff(subgroup_52(v, eps), apply(induced_map(upper_translation(eps), basis, tol), v));
    });
    s.check("subgroup_53_oracle", 1e-10, [&](Rng& rng, int) {
      const auto kappa = random_real4(rng);
      const HermVector v = random_herm_vector(3, rng);
      return max_abs_diff(subgroup_53(v, kappa), apply(induced_map(lower_translation(kappa), basis, tol), v));
    });
    s.check("subgroup_54_oracle", 1e-10, [&](Rng& rng, int) {
      const double mod = rng.uniform(0.5, 2.0);
      const double phi = rng.uniform(-std::numbers::pi, std::numbers::pi);
      const HermVector v = random_herm_vector(3, rng);
      return max_abs_diff(subgroup_54(v, mod, phi), apply(induced_map(scaling_matrix(mod, phi), basis, tol), v));
    });
    s.check("subgroup_52_additive", 1e-12, [&](Rng& rng, int) {
      const auto e1 = random_real4(rng);
      const auto e2 = random_real4(rng);
      std::array<double, 4> sum{};
      for (std::size_t i = 0; i < 4; ++i) sum[i] = e1[i] + e2[i];
      const HermVector v = random_herm_vector(3, rng);
      return max_abs_diff(subgroup_52(subgroup_52(v, e1), e2), subgroup_52(v, sum));
    });
    s.check("subgroup_53_additive", 1e-12, [&](Rng& rng, int) {
      const auto k1 = random_real4(rng);
      const auto k2 = random_real4(rng);
      std::array<double, 4> sum{};
      for (std::size_t i = 0; i < 4; ++i) sum[i] = k1[i] + k2[i];
      const HermVector v = random_herm_vector(3, rng);
      return max_abs_diff(subgroup_53(subgroup_53(v, k1), k2), subgroup_53(v, sum));
    });
    s.check("cubic_invariance", 1e-9, [&](Rng& rng, int) {
      const HermVector v = random_herm_vector(3, rng);
      const double base = cubic_form(v);
      double worst = rel_dev(cubic_form(subgroup_51(v, sl_from(rng, 2))), base);
      worst = std::max(worst, rel_dev(cubic_form(subgroup_52(v, random_real4(rng))), base));
      worst = std::max(worst, rel_dev(cubic_form(subgroup_53(v, random_real4(rng))), base));
      worst = std::max(worst, rel_dev(cubic_form(subgroup_54(v, rng.uniform(0.5, 2.0), rng.uniform(-3.0, 3.0))), base));
      return worst;
    });
  } else {
    for (const auto& name : n3_names) s.skip(name, "requires n = 3");
  }

  VerificationReport report;
  report.suite = "finspinor-properties";
  report.config = cfg;
  report.records = s.take();
  return report;
}

}  // namespace finspinor
