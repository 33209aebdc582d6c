#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with argument vectors and captured streams.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse/domain error,
// 3 numerical non-convergence.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qeuler/qeuler.hpp"

namespace qeuler::cli {

enum class Format { text, csv, json };

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNonConvergence = 3 };

/// Parses "a", "a+bi", "a-bi" or "bi" with decimal literals.
inline complex parse_complex(const std::string& text) {
  static const std::string num = R"((?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex real_only("^\\s*([+-]?" + num + ")\\s*$");
  static const std::regex imag_only("^\\s*([+-]?" + num + ")i\\s*$");
  static const std::regex both("^\\s*([+-]?" + num + ")([+-])(" + num + ")i\\s*$");
  std::smatch m;
  if (std::regex_match(text, m, real_only)) return {std::stod(m[1].str()), 0.0};
  if (std::regex_match(text, m, imag_only)) return {0.0, std::stod(m[1].str())};
  if (std::regex_match(text, m, both)) {
    const double im = std::stod(m[3].str());
    return {std::stod(m[1].str()), m[2].str() == "-" ? -im : im};
  }
  throw ParseError("cannot parse complex number '" + text + "'");
}

struct RangeSpec {
  double min = 0.0;
  double max = 0.0;
  double step = 0.0;
};

/// "min:max:step", inclusive endpoints.
inline RangeSpec parse_range(const std::string& text) {
  static const std::string num = R"([+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex pattern("^\\s*(" + num + "):(" + num + "):(" + num + ")\\s*$");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ParseError("range must look like min:max:step, got '" + text + "'");
  RangeSpec r{std::stod(m[1].str()), std::stod(m[2].str()), std::stod(m[3].str())};
  if (!(r.step > 0.0)) throw ParseError("range step must be positive");
  if (r.min > r.max) throw ParseError("range min must not exceed max");
  return r;
}

/// 17 significant digits, enough to round-trip a binary64 value.
inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Shortest round-trip form, used for metadata.
inline std::string fmt_short(double v) {
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, r.ptr};
}

inline std::string fmt_short(complex z) {
  if (z.imag() == 0.0) return fmt_short(z.real());
  return fmt_short(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + fmt_short(std::abs(z.imag())) + "i";
}

inline std::string fmt(complex z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

namespace detail {

using nlohmann::json;

inline json complex_json(complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline json config_json(const EngineConfig& c) {
  return json{{"rel_tol", c.rel_tol}, {"max_terms", c.max_terms}, {"fd_step", c.fd_step}};
}

inline std::string config_comment(complex q, const EngineConfig& c) {
  return "# q = " + fmt_short(q) + ", rel_tol = " + fmt_short(c.rel_tol) + ", max_terms = " + std::to_string(c.max_terms) +
         ", fd_step = " + fmt_short(c.fd_step);
}

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ParseError("unknown format '" + s + "'");
}

struct Globals {
  std::string q_text;
  double tol = EngineConfig{}.rel_tol;
  std::size_t max_terms = EngineConfig{}.max_terms;
  std::string format = "text";

  [[nodiscard]] EngineConfig config() const {
    EngineConfig c;
    c.rel_tol = tol;
    c.max_terms = max_terms;
    c.validate();
    return c;
  }
};

inline void add_globals(CLI::App* sub, Globals& g, const std::string& default_format) {
  g.format = default_format;
  sub->set_help_flag("--help", "print this help and exit");
  sub->add_option("--q", g.q_text, "deformation parameter q, |q| < 1 (complex: a+bi)")->required();
  sub->add_option("--tol", g.tol, "relative truncation tolerance");
  sub->add_option("--max-terms", g.max_terms, "series term limit");
  sub->add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

inline void write_series(std::ostream& out, Format f, const std::string& command, complex q, const EngineConfig& c,
                         const nlohmann::json& inputs, const SeriesValue& v) {
  switch (f) {
    case Format::json: {
      json j{{"command", command}, {"q", complex_json(q)}, {"config", config_json(c)}, {"inputs", inputs},
             {"value", complex_json(v.value)}, {"error_bound", v.error_bound}, {"terms_used", v.terms_used},
             {"converged", v.converged}};
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "re,im,error_bound,terms_used,converged\n"
          << fmt(v.value.real()) << "," << fmt(v.value.imag()) << "," << fmt(v.error_bound) << "," << v.terms_used
          << "," << (v.converged ? "true" : "false") << "\n";
      break;
    case Format::text:
      out << config_comment(q, c) << "\n"
          << "value        " << fmt(v.value) << "\n"
          << "error_bound  " << fmt(v.error_bound) << "\n"
          << "terms_used   " << v.terms_used << "\n"
          << "converged    " << (v.converged ? "true" : "false") << "\n";
      break;
  }
}

inline std::size_t as_nonnegative_integer(complex x, const char* what) {
  if (!is_integer(x) || x.real() < 0.0) throw DomainError(std::string(what) + " must be a nonnegative integer for --exact");
  return static_cast<std::size_t>(x.real());
}

}  // namespace detail

/// One line of the verification report.
struct CheckResult {
  enum class Status { pass, fail, deviation };
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

inline const char* status_label(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::pass: return "PASS";
    case CheckResult::Status::fail: return "FAIL";
    case CheckResult::Status::deviation: return "DEVIATION";
  }
  return "?";
}

struct VerifyOptions {
  std::size_t max_n = 8;
  std::size_t max_k = 6;
  bool exact = true;
  bool numeric = true;
};

namespace detail {

inline double rel_err(complex a, complex b) {
  const double scale = std::abs(b);
  return scale > 0.0 ? std::abs(a - b) / scale : std::abs(a - b);
}

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

class Report {
 public:
  void check(std::string name, bool ok, std::string detail) {
    results_.push_back({std::move(name), ok ? CheckResult::Status::pass : CheckResult::Status::fail, std::move(detail)});
  }
  void deviation(std::string name, std::string detail) {
    results_.push_back({std::move(name), CheckResult::Status::deviation, std::move(detail)});
  }
  /// Runs `body`; a thrown library error becomes a FAIL line.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("error: ") + e.what());
    }
  }
  [[nodiscard]] const std::vector<CheckResult>& results() const { return results_; }

 private:
  std::vector<CheckResult> results_;
};

inline void exact_checks(Report& report, const QParameter& qp, const VerifyOptions& opt) {
  const std::size_t max_n = opt.max_n;
  report.guarded("exact: sum form = recurrence", [&] {
    bool ok = true;
    for (std::size_t n = 0; n <= max_n; ++n) ok = ok && verify_identity(Identity::sum_form_matches_recurrence, n, 0);
    report.check("exact: sum form = recurrence", ok, "n <= " + std::to_string(max_n));
  });
  report.guarded("exact: translation expansion", [&] {
    bool ok = true;
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (std::size_t x = 0; x <= 4; ++x) ok = ok && verify_identity(Identity::translation_expansion, n, x);
    }
    report.check("exact: translation expansion", ok, "n <= " + std::to_string(max_n) + ", x <= 4");
  });
  const std::pair<Identity, bool> shift_ids[] = {{Identity::even_shift_difference, true},
                                                 {Identity::even_shift_expanded, true},
                                                 {Identity::odd_shift_sum, false},
                                                 {Identity::odd_shift_expanded, false}};
  for (const auto& [id, even] : shift_ids) {
    const std::string name = "exact: " + to_string(id);
    report.guarded(name, [&, id = id, even = even] {
      bool ok = true;
      std::size_t largest_k = 0;
      for (std::size_t k = even ? 2 : 1; k <= opt.max_k; k += 2) {
        largest_k = k;
        for (std::size_t n = 0; n <= max_n; ++n) ok = ok && verify_identity(id, n, k);
      }
      report.check(name, ok, std::string(even ? "even" : "odd") + " k <= " + std::to_string(largest_k) +
                                 ", n <= " + std::to_string(max_n));
    });
  }
  report.guarded("exact: uncorrected even-shift sign rejected", [&] {
    const bool holds = verify_identity(Identity::even_shift_difference_uncorrected, 2, 2);
    report.check("exact: uncorrected even-shift sign rejected", !holds,
                 "sign (-1)^l instead of (-1)^(l-1) at n=2, k=2 must fail");
  });
  report.guarded("exact: q -> 1 limit is classical E_n", [&] {
    bool ok = true;
    for (std::size_t n = 0; n <= max_n; ++n) {
      ok = ok && exact_euler_number(n).evaluate(BigRational(1)) == classical_euler_number(n);
    }
    report.check("exact: q -> 1 limit is classical E_n", ok, "n <= " + std::to_string(max_n));
  });
  report.guarded("exact vs numeric E_{n,q}", [&] {
    double worst = 0.0;
    for (std::size_t n = 0; n <= max_n; ++n) {
      worst = std::max(worst, rel_err(exact_euler_number(n).evaluate(qp.value()), euler_number(n, qp)));
    }
    report.check("exact vs numeric E_{n,q}", worst <= 1e-11, "max rel err " + sci(worst) + " <= 1e-11");
  });
}

inline void numeric_checks(Report& report, const QParameter& qp, const EngineConfig& config, const VerifyOptions& opt) {
  const std::size_t max_n = opt.max_n;
  const complex q = qp.value();

  report.guarded("interpolation zeta(-n) = E_{n,q}", [&] {
    double worst = 0.0;
    for (std::size_t n = 1; n <= max_n; ++n) {
      worst = std::max(worst, rel_err(qzeta(-static_cast<double>(n), 0, qp, config).value, euler_number(n, qp)));
    }
    report.check("interpolation zeta(-n) = E_{n,q}", worst <= 1e-10, "max rel err " + sci(worst) + " <= 1e-10");
  });

  report.guarded("hurwitz interpolation", [&] {
    double worst = 0.0;
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (int x = 0; x <= 3; ++x) {
        for (int h = 0; h <= 2; ++h) {
          const SeriesValue z = qzeta_hurwitz({-static_cast<double>(n), static_cast<double>(x), h, qp, config});
          worst = std::max(worst, rel_err(z.value, euler_poly(n, static_cast<double>(x), h, qp)));
        }
      }
    }
    report.check("hurwitz interpolation", worst <= 1e-10, "max rel err " + sci(worst) + " <= 1e-10");
  });

  if (qp.is_real() && q.real() > 0.0) {
    report.guarded("series oracle vs explicit sum", [&] {
      double worst = 0.0;
      for (std::size_t n = 0; n <= max_n; ++n) {
        for (double x : {0.0, 0.5, 1.0, 2.0}) {
          const SeriesValue o = euler_poly_series_oracle(n, x, 0, qp, 2, config);
          worst = std::max(worst, std::abs(o.value - euler_poly(n, x, 0, qp)));
        }
      }
      report.check("series oracle vs explicit sum", worst <= 1e-8, "max abs err " + sci(worst) + " <= 1e-8");
    });
  }

  report.guarded("shift identities (numeric)", [&] {
    double worst = 0.0;
    const complex two_q = 1.0 + q;
    for (std::size_t k = 1; k <= opt.max_k; ++k) {
      for (std::size_t n = 0; n <= max_n; ++n) {
        complex rhs = 0.0;
        for (std::size_t l = 0; l < k; ++l) {
          const complex b = ipow(q_bracket(static_cast<double>(l), qp), static_cast<long long>(n));
          const bool plus = (k % 2 == 1) ? (l % 2 == 0) : (l % 2 == 1);
          rhs += plus ? b : -b;
        }
        rhs *= two_q;
        const complex shifted = euler_poly(n, static_cast<double>(k), 0, qp);
        const complex lhs = (k % 2 == 1) ? shifted + euler_number(n, qp) : shifted - euler_number(n, qp);
        worst = std::max(worst, rel_err(lhs, rhs));
      }
    }
    report.check("shift identities (numeric)", worst <= 1e-10, "max rel err " + sci(worst) + " <= 1e-10");
  });

  report.guarded("continuation at integer order", [&] {
    double worst = 0.0;
    for (std::size_t n = 0; n <= 3; ++n) {
      for (int i = 0; i <= 20; ++i) {
        const double w = -0.5 + 0.05 * i;
        worst = std::max(worst, std::abs(euler_poly_continuation(static_cast<double>(n), w, qp, config).value -
                                         euler_poly(n, w, 0, qp)));
      }
    }
    report.check("continuation at integer order", worst <= 1e-9, "max abs err " + sci(worst) + " <= 1e-9");
  });

  report.guarded("continuation continuity at s=3", [&] {
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      const double w = -0.5 + 0.05 * i;
      worst = std::max(worst, std::abs(euler_poly_continuation(3.0 - 1e-6, w, qp, config).value -
                                       euler_poly_continuation(3.0, w, qp, config).value));
    }
    report.check("continuation continuity at s=3", worst <= 1e-4, "max gap " + sci(worst) + " <= 1e-4");
  });

  report.guarded("derivatives vs finite differences", [&] {
    EngineConfig tight = config;
    tight.rel_tol = std::min(config.rel_tol, 1e-15);
    tight.max_terms = std::max<std::size_t>(config.max_terms, 100000);
    const double h = config.fd_step;
    double worst = 0.0;
    for (double s : {-3.0, -1.5, 0.5, 1.25, 2.5, 3.0}) {
      const complex fd = (qzeta(s + h, 0, qp, tight).value - qzeta(s - h, 0, qp, tight).value) / (2.0 * h);
      worst = std::max(worst, rel_err(qzeta_deriv(s, 0, qp, std::nullopt, tight).value, fd));
      const complex fd_e =
          (euler_continuation(s + h, qp, tight).value - euler_continuation(s - h, qp, tight).value) / (2.0 * h);
      worst = std::max(worst, rel_err(euler_continuation_deriv(s, qp, tight).value, fd_e));
    }
    report.check("derivatives vs finite differences", worst <= 1e-6, "max rel err " + sci(worst) + " <= 1e-6");
  });

  report.guarded("classical zeta_E(-n) = E_n", [&] {
    double worst = 0.0;
    for (std::size_t n = 1; n <= 10; ++n) {
      worst = std::max(worst, std::abs(classical_zeta_E(-static_cast<double>(n), std::nullopt, config).value -
                                       classical_euler_number(n).convert_to<double>()));
    }
    report.check("classical zeta_E(-n) = E_n", worst <= 1e-12, "max abs err " + sci(worst) + " <= 1e-12");
  });

  report.guarded("large-s limit -(1+q)", [&] {
    const SeriesValue z60 = qzeta(60.0, 0, qp, config);
    const complex limit = -(1.0 + q);
    const double gap = std::abs(z60.value - limit);
    report.check("large-s limit -(1+q)", gap <= 1e-6,
                 "|zeta(60) - (" + fmt_short(limit) + ")| = " + sci(gap) + " <= 1e-6");
    report.deviation("large-s limit constant",
                     "expected: the limit is -(1+q) = " + fmt_short(limit) + ", not the constant -2 (that holds only as q -> 1)");
  });
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(const QParameter& qp, const EngineConfig& config,
                                                 const VerifyOptions& opt) {
  detail::Report report;
  if (opt.exact) detail::exact_checks(report, qp, opt);
  if (opt.numeric) detail::numeric_checks(report, qp, config, opt);
  return report.results();
}

/// The whole CLI. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using nlohmann::json;
  CLI::App app{"q-Euler numbers, polynomials, zeta functions and their analytic continuation", "qeuler"};
  app.require_subcommand(1);

  detail::Globals g_numbers, g_poly, g_zeta, g_cont, g_curve, g_verify;

  std::size_t n_numbers = 0;
  bool exact_numbers = false;
  auto* numbers = app.add_subcommand("numbers", "q-Euler numbers E_{0,q}..E_{n,q}");
  detail::add_globals(numbers, g_numbers, "text");
  numbers->add_option("--n", n_numbers, "largest index")->required();
  numbers->add_flag("--exact", exact_numbers, "exact rational functions of q");

  std::size_t n_poly = 0;
  std::string x_poly = "0";
  long long h_poly = 0;
  bool exact_poly = false;
  auto* poly = app.add_subcommand("poly", "q-Euler polynomial E_n(x,h|q)");
  detail::add_globals(poly, g_poly, "text");
  poly->add_option("--n", n_poly, "degree")->required();
  poly->add_option("--x", x_poly, "argument x (complex)")->required();
  poly->add_option("--h", h_poly, "integer h >= 0");
  poly->add_flag("--exact", exact_poly, "exact rational function of q (integer x, h)");

  std::string s_zeta;
  std::optional<std::string> x_zeta;
  long long h_zeta = 0;
  bool deriv_zeta = false;
  auto* zeta = app.add_subcommand("zeta", "q-Euler zeta function (Hurwitz form with --x)");
  detail::add_globals(zeta, g_zeta, "text");
  zeta->add_option("--s", s_zeta, "complex s")->required();
  zeta->add_option("--x", x_zeta, "Hurwitz shift x (complex, Re x >= 0)");
  zeta->add_option("--h", h_zeta, "integer h >= 0");
  zeta->add_flag("--deriv", deriv_zeta, "d/ds instead of the value");

  double s_cont = 0.0;
  std::optional<std::string> w_cont;
  bool deriv_cont = false;
  auto* cont = app.add_subcommand("continue", "analytic continuation E_q(s) or E_q(s,w)");
  detail::add_globals(cont, g_cont, "text");
  cont->add_option("--s", s_cont, "real order s")->required();
  cont->add_option("--w", w_cont, "polynomial argument w (complex)");
  cont->add_flag("--deriv", deriv_cont, "d/ds E_q(s)");

  std::string s_range_text;
  std::string w_range_text;
  auto* curve = app.add_subcommand("curve", "sample E_q(s,w) on an (s,w) grid");
  detail::add_globals(curve, g_curve, "csv");
  curve->add_option("--s-range", s_range_text, "min:max:step (s >= 0)")->required();
  curve->add_option("--w-range", w_range_text, "min:max:step")->required();

  VerifyOptions vopt;
  bool exact_only = false;
  bool numeric_only = false;
  auto* verify = app.add_subcommand("verify", "run the identity and interpolation suite");
  detail::add_globals(verify, g_verify, "text");
  verify->add_option("--max-n", vopt.max_n, "largest index")->required();
  verify->add_option("--max-k", vopt.max_k, "largest shift k");
  auto* eo = verify->add_flag("--exact-only", exact_only, "exact checks only");
  verify->add_flag("--numeric-only", numeric_only, "numeric checks only")->excludes(eo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (numbers->parsed()) {
      const EngineConfig config = g_numbers.config();
      const QParameter qp(parse_complex(g_numbers.q_text));
      const Format f = detail::parse_format(g_numbers.format);
      const complex q = qp.value();
      if (f == Format::json) {
        json rows = json::array();
        for (std::size_t n = 0; n <= n_numbers; ++n) {
          json row{{"n", n}};
          if (exact_numbers) {
            row["exact"] = exact_euler_number(n).to_string();
          } else {
            const complex e = euler_number(n, qp);
            row["re"] = e.real();
            row["im"] = e.imag();
          }
          rows.push_back(row);
        }
        out << json{{"command", "numbers"}, {"q", detail::complex_json(q)}, {"config", detail::config_json(config)},
                    {"values", rows}}
                   .dump(2)
            << "\n";
      } else {
        if (f == Format::text) out << detail::config_comment(q, config) << "\n";
        out << (exact_numbers ? (f == Format::csv ? "n,exact\n" : "n  E_{n,q}\n")
                              : (f == Format::csv ? "n,re,im\n" : "n  E_{n,q}\n"));
        for (std::size_t n = 0; n <= n_numbers; ++n) {
          if (exact_numbers) {
            const std::string s = exact_euler_number(n).to_string();
            out << n << (f == Format::csv ? ",\"" + s + "\"" : "  " + s) << "\n";
          } else {
            const complex e = euler_number(n, qp);
            if (f == Format::csv) {
              out << n << "," << fmt(e.real()) << "," << fmt(e.imag()) << "\n";
            } else {
              out << n << "  " << fmt(e) << "\n";
            }
          }
        }
      }
      return kOk;
    }

    if (poly->parsed()) {
      const EngineConfig config = g_poly.config();
      const QParameter qp(parse_complex(g_poly.q_text));
      const Format f = detail::parse_format(g_poly.format);
      const complex x = parse_complex(x_poly);
      if (h_poly < 0) throw DomainError("--h must be >= 0");
      const json inputs{{"n", n_poly}, {"x", detail::complex_json(x)}, {"h", h_poly}};
      if (exact_poly) {
        const std::size_t xi = detail::as_nonnegative_integer(x, "--x");
        const std::string s = exact_euler_poly(n_poly, xi, static_cast<std::size_t>(h_poly)).to_string();
        if (f == Format::json) {
          out << json{{"command", "poly"}, {"inputs", inputs}, {"exact", s}}.dump(2) << "\n";
        } else if (f == Format::csv) {
          out << "exact\n\"" << s << "\"\n";
        } else {
          out << s << "\n";
        }
        return kOk;
      }
      SeriesValue v{euler_poly(n_poly, x, h_poly, qp), 0.0, n_poly + 1, true};
      detail::write_series(out, f, "poly", qp.value(), config, inputs, v);
      return kOk;
    }

    if (zeta->parsed()) {
      const EngineConfig config = g_zeta.config();
      const QParameter qp(parse_complex(g_zeta.q_text));
      const Format f = detail::parse_format(g_zeta.format);
      const complex s = parse_complex(s_zeta);
      json inputs{{"s", detail::complex_json(s)}, {"h", h_zeta}, {"deriv", deriv_zeta}};
      SeriesValue v;
      if (x_zeta) {
        const complex x = parse_complex(*x_zeta);
        inputs["x"] = detail::complex_json(x);
        v = deriv_zeta ? qzeta_deriv(s, h_zeta, qp, x, config) : qzeta_hurwitz({s, x, h_zeta, qp, config});
      } else {
        v = deriv_zeta ? qzeta_deriv(s, h_zeta, qp, std::nullopt, config) : qzeta(s, h_zeta, qp, config);
      }
      detail::write_series(out, f, "zeta", qp.value(), config, inputs, v);
      return kOk;
    }

    if (cont->parsed()) {
      const EngineConfig config = g_cont.config();
      const QParameter qp(parse_complex(g_cont.q_text));
      const Format f = detail::parse_format(g_cont.format);
      json inputs{{"s", s_cont}, {"deriv", deriv_cont}};
      SeriesValue v;
      if (w_cont) {
        if (deriv_cont) {
          err << "usage error: --deriv is only available for E_q(s) (omit --w)\n";
          return kUsage;
        }
        const complex w = parse_complex(*w_cont);
        inputs["w"] = detail::complex_json(w);
        v = euler_poly_continuation(s_cont, w, qp, config);
      } else {
        v = deriv_cont ? euler_continuation_deriv(s_cont, qp, config) : euler_continuation(s_cont, qp, config);
      }
      detail::write_series(out, f, "continue", qp.value(), config, inputs, v);
      return kOk;
    }

    if (curve->parsed()) {
      const EngineConfig config = g_curve.config();
      const QParameter qp(parse_complex(g_curve.q_text));
      const Format f = detail::parse_format(g_curve.format);
      const RangeSpec sr = parse_range(s_range_text);
      const RangeSpec wr = parse_range(w_range_text);
      if (sr.min < 0.0) throw DomainError("--s-range must start at s >= 0");
      const CurveGrid grid = curve_grid(sample_range(sr.min, sr.max, sr.step), sample_range(wr.min, wr.max, wr.step),
                                        qp, config);
      if (f == Format::json) {
        json samples = json::array();
        for (std::size_t i = 0; i < grid.s_values.size(); ++i) {
          for (std::size_t j = 0; j < grid.w_values.size(); ++j) {
            const complex v = grid.at(i, j);
            samples.push_back({{"s", grid.s_values[i]}, {"w", grid.w_values[j]}, {"re", v.real()}, {"im", v.imag()}});
          }
        }
        json cfg = detail::config_json(config);
        cfg["s_range"] = {{"min", sr.min}, {"max", sr.max}, {"step", sr.step}};
        cfg["w_range"] = {{"min", wr.min}, {"max", wr.max}, {"step", wr.step}};
        cfg["rows"] = grid.s_values.size();
        cfg["columns"] = grid.w_values.size();
        out << json{{"q", detail::complex_json(qp.value())}, {"config", cfg}, {"samples", samples}}.dump() << "\n";
      } else {
        if (f == Format::text) out << detail::config_comment(qp.value(), config) << "\n";
        out << "s,w,re,im\n";
        for (std::size_t i = 0; i < grid.s_values.size(); ++i) {
          for (std::size_t j = 0; j < grid.w_values.size(); ++j) {
            const complex v = grid.at(i, j);
            out << fmt(grid.s_values[i]) << "," << fmt(grid.w_values[j]) << "," << fmt(v.real()) << ","
                << fmt(v.imag()) << "\n";
          }
        }
      }
      return kOk;
    }

    if (verify->parsed()) {
      const EngineConfig config = g_verify.config();
      const QParameter qp(parse_complex(g_verify.q_text));
      const Format f = detail::parse_format(g_verify.format);
      vopt.exact = !numeric_only;
      vopt.numeric = !exact_only;
      const auto results = run_verification(qp, config, vopt);
      bool failed = false;
      for (const auto& r : results) failed = failed || r.status == CheckResult::Status::fail;
      if (f == Format::json) {
        json checks = json::array();
        for (const auto& r : results) {
          checks.push_back({{"name", r.name}, {"status", status_label(r.status)}, {"detail", r.detail}});
        }
        out << json{{"command", "verify"}, {"q", detail::complex_json(qp.value())},
                    {"config", detail::config_json(config)}, {"max_n", vopt.max_n}, {"max_k", vopt.max_k},
                    {"checks", checks}, {"failed", failed}}
                   .dump(2)
            << "\n";
      } else if (f == Format::csv) {
        out << "status,name,detail\n";
        for (const auto& r : results) out << status_label(r.status) << ",\"" << r.name << "\",\"" << r.detail << "\"\n";
      } else {
        out << detail::config_comment(qp.value(), config) << "\n";
        for (const auto& r : results) {
          char line[96];
          std::snprintf(line, sizeof line, "%-10s %-46s ", status_label(r.status), r.name.c_str());
          out << line << r.detail << "\n";
        }
        out << (failed ? "verification FAILED\n" : "verification passed\n");
      }
      return failed ? kVerifyFailed : kOk;
    }
  } catch (const NonConvergenceError& e) {
    err << "non-convergence: " << e.what() << "\n";
    return kNonConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "usage error: no subcommand\n";
  return kUsage;
}

}  // namespace qeuler::cli
