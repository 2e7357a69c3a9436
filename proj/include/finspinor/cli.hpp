#pragma once

// Command-line front end. Exit codes:
//   0 success, 1 failed verification (or unexpected error), 2 parse/usage
//   error, 3 matrix not unimodular, 4 decomposition domain error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "finspinor/epimorphism.hpp"
#include "finspinor/herm.hpp"
#include "finspinor/io.hpp"
#include "finspinor/special_n3.hpp"
#include "finspinor/verify.hpp"
#include "finspinor/version.hpp"

namespace finspinor::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kParseError = 2, kNotUnimodular = 3, kDomainError = 4 };

inline io::Json config_json(const RunConfig& c) {
  static const char* names[] = {"json", "csv", "pretty"};
  return io::Json{{"n", c.n},
                  {"seed", c.seed},
                  {"trials", c.trials},
                  {"tol_abs", c.tol_abs},
                  {"tol_rel", c.tol_rel},
                  {"format", names[static_cast<int>(c.format)]}};
}

inline io::Json to_json(const VerificationReport& r) {
  io::Json records = io::Json::array();
  for (const auto& p : r.records) {
    io::Json j{{"name", p.name}};
    if (p.skipped) {
      j["status"] = "skipped";
    } else {
      j["status"] = p.pass ? "pass" : "fail";
      j["trials"] = p.trials;
      j["max_deviation"] = p.max_deviation;  // NaN/inf serialize as null
      j["threshold"] = p.threshold;
      j["comparison"] = p.comparison == Comparison::AtMost ? "<=" : ">";
      j["pass"] = p.pass;
    }
    if (!p.note.empty()) j["note"] = p.note;
    records.push_back(std::move(j));
  }
  return io::Json{{"suite", r.suite},
                  {"artifact_version", r.version},
                  {"generator", r.generator},
                  {"config", config_json(r.config)},
                  {"records", records},
                  {"pass", r.pass()}};
}

/// Max relative |form - det| over `samples` seeded vectors.
inline double form_det_check(const FormTensor& g, const HermBasis& b, std::uint64_t seed, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    Rng rng(substream_seed(seed, 0xF0F0, static_cast<std::uint64_t>(i)));
    const HermVector v = random_herm_vector(g.n, rng);
    const double d = det_invariant(v, b);
    worst = std::max(worst, std::abs(finsler_length_power(v, g) - d) / std::max(1.0, std::abs(d)));
  }
  return worst;
}

namespace detail {

inline std::string pretty(Complex z) {
  std::ostringstream os;
  os << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

inline void pretty_matrix(std::ostream& os, const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : " ") << pretty(m(i, j));
    os << " ]\n";
  }
}

inline void pretty_matrix(std::ostream& os, const RealMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : " ") << std::setw(12) << std::setprecision(6) << m(i, j);
    os << " ]\n";
  }
}

}  // namespace detail

inline std::string render_basis(const HermBasis& b, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Json:
      os << io::to_json(b).dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      os << "kind,alpha,row,col,re,im\n";
      for (std::size_t a = 0; a < b.e_lower.size(); ++a) io::append_csv(os, "lower," + std::to_string(a), b.e_lower[a]);
      for (std::size_t a = 0; a < b.e_upper.size(); ++a) io::append_csv(os, "upper," + std::to_string(a), b.e_upper[a]);
      break;
    case OutputFormat::Pretty:
      os << "Herm(" << b.n << ") basis, pairing residual " << pairing_residual(b) << '\n';
      for (std::size_t a = 0; a < b.e_lower.size(); ++a) {
        os << "E_" << a << ":\n";
        detail::pretty_matrix(os, b.e_lower[a]);
        os << "E^" << a << ":\n";
        detail::pretty_matrix(os, b.e_upper[a]);
      }
      break;
  }
  return os.str();
}

inline std::string render_map(const FinsLinearMap& l, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return io::to_json(l).dump(2) + '\n';
    case OutputFormat::Csv:
      return io::to_csv(l.entries);
    case OutputFormat::Pretty: {
      std::ostringstream os;
      os << "L (" << l.entries.rows() << "x" << l.entries.cols() << "):\n";
      detail::pretty_matrix(os, l.entries);
      return os.str();
    }
  }
  return {};
}

inline std::string render_form(const FormTensor& g, double det_check, int samples, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Json: {
      io::Json j = io::to_json(g);
      j["det_check"] = io::Json{{"samples", samples}, {"max_relative_deviation", det_check}};
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "index,coefficient\n";
      for (const auto& [idx, c] : g.coeffs) os << '"' << io::form_key(idx) << "\"," << io::num(c) << '\n';
      break;
    case OutputFormat::Pretty:
      os << "degree-" << g.degree << " form on Herm(" << g.n << "), " << g.coeffs.size() << " nonzero coefficients\n";
      for (const auto& [idx, c] : g.coeffs) os << "  G[" << io::form_key(idx) << "] = " << std::setprecision(12) << c << '\n';
      os << "det check: max relative deviation " << det_check << " over " << samples << " samples\n";
      break;
  }
  return os.str();
}

inline std::string render_decomposition(const SL3Decomposition& d, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Json:
      os << io::to_json(d).dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      os << "factor,row,col,re,im\n";
      io::append_csv(os, "d1", d.d1);
      io::append_csv(os, "d2", d.d2);
      io::append_csv(os, "d3", d.d3);
      io::append_csv(os, "d4", d.d4);
      break;
    case OutputFormat::Pretty:
      os << "d = " << detail::pretty(d.d) << " (" << SL3Decomposition::kBranch << ")\n";
      for (const auto& [name, m] : {std::pair{"d1", &d.d1}, {"d2", &d.d2}, {"d3", &d.d3}, {"d4", &d.d4}}) {
        os << name << ":\n";
        detail::pretty_matrix(os, *m);
      }
      os << "reconstruction residual " << d.reconstruction_residual << '\n';
      break;
  }
  return os.str();
}

inline std::string render_report(const VerificationReport& r, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Json:
      os << to_json(r).dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      os << "name,status,trials,max_deviation,comparison,threshold\n";
      for (const auto& p : r.records) {
        if (p.skipped) {
          os << p.name << ",skipped,,,,\n";
          continue;
        }
        os << p.name << ',' << (p.pass ? "pass" : "fail") << ',' << p.trials << ',' << io::num(p.max_deviation) << ','
           << (p.comparison == Comparison::AtMost ? "<=" : ">") << ',' << io::num(p.threshold) << '\n';
      }
      break;
    case OutputFormat::Pretty:
      os << r.suite << " v" << r.version << "  n=" << r.config.n << " seed=" << r.config.seed
         << " trials=" << r.config.trials << "  [" << r.generator << "]\n";
      for (const auto& p : r.records) {
        os << "  " << std::left << std::setw(32) << p.name;
        if (p.skipped) {
          os << "SKIP  (" << p.note << ")\n";
          continue;
        }
        os << (p.pass ? "PASS" : "FAIL") << "  " << std::setw(12) << std::setprecision(3) << p.max_deviation
           << (p.comparison == Comparison::AtMost ? " <= " : " > ") << p.threshold;
        if (!p.note.empty()) os << "  (" << p.note << ")";
        os << '\n';
      }
      os << (r.pass() ? "ALL PASS" : "FAILURES PRESENT") << '\n';
      break;
  }
  return os.str();
}

/// Parses argv and runs one subcommand. Documents go to `out` unless --out
/// names a file; diagnostics go to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finslerian N-spinor algebra: bases, induced maps, forms, SL(3,C) factorization, verification"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::string matrix_path;
  std::string out_path = "-";

  auto add_common = [&](CLI::App* sub, bool with_matrix) {
    sub->add_option("--n", cfg.n, "spinor dimension N")->check(CLI::Range(2, 64));
    sub->add_option("--seed", cfg.seed, "base seed");
    sub->add_option("--trials", cfg.trials, "random trials per property")->check(CLI::PositiveNumber);
    sub->add_option("--tol-abs", cfg.tol_abs, "absolute tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--tol-rel", cfg.tol_rel, "relative tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--out", out_path, "output path ('-' for stdout)");
    if (with_matrix) sub->add_option("--matrix", matrix_path, "JSON matrix file: rows of [re, im] entries")->required();
  };

  CLI::App* basis_cmd = app.add_subcommand("basis", "print the Herm(N) basis and its trace dual");
  CLI::App* lmap_cmd = app.add_subcommand("lmap", "induced real map L(D) of an SL(N,C) matrix");
  CLI::App* form_cmd = app.add_subcommand("form", "coefficients of the degree-N determinant form");
  CLI::App* decompose_cmd = app.add_subcommand("decompose", "four-factor decomposition of an SL(3,C) matrix");
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the randomized property suites");
  add_common(basis_cmd, false);
  add_common(lmap_cmd, true);
  add_common(form_cmd, false);
  add_common(decompose_cmd, true);
  add_common(verify_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  cfg.format = format == "csv" ? OutputFormat::Csv : format == "pretty" ? OutputFormat::Pretty : OutputFormat::Json;

  auto emit = [&](const std::string& doc) {
    if (out_path == "-") {
      out << doc;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError("cannot open output file '" + out_path + "'");
    f << doc;
  };

  auto n_flag_given = [](CLI::App* sub) { return sub->get_option("--n")->count() > 0; };

  try {
    validate(cfg);
    if (basis_cmd->parsed()) {
      emit(render_basis(standard_basis(cfg.n), cfg.format));
      return kOk;
    }
    if (form_cmd->parsed()) {
      const HermBasis b = standard_basis(cfg.n);
      const FormTensor g = form_tensor(b);
      constexpr int kSamples = 100;
      emit(render_form(g, form_det_check(g, b, cfg.seed, kSamples), kSamples, cfg.format));
      return kOk;
    }
    if (lmap_cmd->parsed()) {
      const ComplexMatrix m = io::read_complex_matrix(matrix_path);
      const int n = static_cast<int>(m.rows());
      if (n < 2) throw ParseError("matrix must be at least 2x2");
      if (n_flag_given(lmap_cmd) && cfg.n != n)
        throw ParseError("--n " + std::to_string(cfg.n) + " does not match the " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix");
      emit(render_map(induced_map(m, standard_basis(n), cfg.tolerance()), cfg.format));
      return kOk;
    }
    if (decompose_cmd->parsed()) {
      const ComplexMatrix m = io::read_complex_matrix(matrix_path);
      if (m.rows() != 3) throw ParseError("decompose expects a 3x3 matrix");
      emit(render_decomposition(decompose_sl3(m, cfg.tolerance()), cfg.format));
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const VerificationReport report = run_verification(cfg);
      emit(render_report(report, cfg.format));
      return report.pass() ? kOk : kVerifyFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const GroupMembershipError& e) {
    err << "error: " << e.what() << '\n';
    return kNotUnimodular;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return decompose_cmd->parsed() ? kDomainError : kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kParseError;
}

}  // namespace finspinor::cli
