#pragma once

// q-Euler zeta functions
//
//   zeta_{E,q}(s,x|h) = [2]_q sum_{n>=0} (-1)^n q^{nh} / [n+x]_q^s
//   zeta_{E,q}(s|h)   = [2]_q sum_{n>=1} (-1)^n q^{nh} / [n]_q^s
//
// The defining series never converge for |q| < 1 (the terms tend to
// (-1)^n (1-q)^s q^{nh}). Expanding [n+x]_q^{-s} = (1-q)^s (1-q^{n+x})^{-s}
// binomially and summing each geometric n-series gives the k-series
//
//   zeta_{E,q}(s,x|h) = [2]_q (1-q)^s sum_k g(s,k) q^{xk} / (1 + q^{h+k}),
//   g(s,k) = Gamma(s+k) / (Gamma(s) k!),
//
// which converges geometrically for every complex s and terminates at
// s = -n. That series is the definition used here. The Hurwitz form is
// evaluated as the closed part (1-q^x)^{-s} plus a tail whose terms carry an
// extra factor q^{h+k}, so its ratio is |q^{x+1}| rather than |q^x|.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "qeuler/detail/double_double.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/numeric.hpp"
#include "qeuler/scalar_kernel.hpp"

namespace qeuler {

struct ZetaRequest {
  complex s{};
  complex x{};
  long long h = 0;
  QParameter q{0.5};
  EngineConfig config{};
};

namespace detail {

struct KernelResult {
  complex value{};
  complex deriv{};
  double value_bound = 0.0;
  double deriv_bound = 0.0;
  std::size_t terms = 0;
};

inline void check_h(long long h) {
  if (h < 0) throw DomainError("zeta: h must be a nonnegative integer");
}

/// Upper bound on |t_{k+1}/t_k| for every k >= K.
inline double ratio_bound(double zq_modulus, double q_modulus, complex s, long long h, std::size_t K) {
  const double kp1 = static_cast<double>(K) + 1.0;
  const double qhk = std::pow(q_modulus, static_cast<double>(h) + static_cast<double>(K));
  const double denom = 1.0 - qhk * q_modulus;
  if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
  return zq_modulus * (1.0 + std::abs(s - 1.0) / kp1) * (1.0 + qhk) / denom;
}

/// sum_k g(s,k) z^k (-q^{h+k} / (1 + q^{h+k})) and, when asked, its s-derivative
/// plus log_prefactor times the sum (the derivative of a prefactor exp(s*c)).
inline KernelResult tail_series(complex s, long long h, const QParameter& qp, complex z, complex log_prefactor,
                                bool want_deriv, const EngineConfig& config) {
  const complex q = qp.value();
  const CDD qd(q);
  const CDD zd(z);
  const CDD one(complex(1.0));
  const CDD sd(s);
  const double zq_modulus = std::abs(z) * std::abs(q);

  // s = -m terminates the value series at k = m.
  const bool pole_case = is_nonpositive_integer(s);
  const std::size_t m = pole_case ? static_cast<std::size_t>(-s.real()) : 0;
  if (pole_case && !want_deriv) {
    if (m + 1 > config.max_terms) throw NonConvergenceError("zeta: terminating series longer than max_terms");
  }

  KernelResult out;
  CDD value;
  CDD deriv;
  CDD g = one;       // g(s,k)
  CDD g_skip = one;  // product over j<k, j != m, of (s+j), divided by k!
  CDD log_sum;       // sum_{j<k} 1/(s+j), j != m
  CDD zk = one;
  CDD qhk = cdd_ipow(qd, h);
  const CDD lp(log_prefactor);

  for (std::size_t k = 0; k < config.max_terms; ++k) {
    const CDD c = -(qhk / (one + qhk)) * zk;
    const bool g_vanished = pole_case && k > m;
    const CDD term = g_vanished ? CDD() : g * c;
    value = value + term;
    CDD dterm;
    if (want_deriv) {
      dterm = g_vanished ? g_skip * c : term * (lp + log_sum);
      deriv = deriv + dterm;
    }
    out.terms = k + 1;

    if (pole_case && !want_deriv && k == m) {
      out.value = value.to_complex();
      return out;
    }

    const double rho = ratio_bound(zq_modulus, qp.modulus(), s, h, k);
    if (rho < 1.0) {
      const double geo = rho / (1.0 - rho);
      const double tail_value = std::abs(term.to_complex()) * geo;
      double tail_deriv = 0.0;
      bool deriv_ok = true;
      if (want_deriv) {
        if (g_vanished) {
          tail_deriv = std::abs(dterm.to_complex()) * geo;
        } else {
          const double gap = static_cast<double>(k) + 1.0 - std::abs(s);
          if (gap > 0.0) {
            const double a = std::abs(log_prefactor) + std::abs(log_sum.to_complex());
            const double delta = 1.0 / gap;
            tail_deriv = std::abs(term.to_complex()) * (a * geo + delta * rho / ((1.0 - rho) * (1.0 - rho)));
          } else {
            deriv_ok = false;
          }
        }
      }
      const double mag_value = std::abs(value.to_complex());
      const double mag_deriv = std::abs(deriv.to_complex());
      const bool value_done = tail_value <= config.rel_tol * mag_value || tail_value == 0.0;
      const bool deriv_done =
          !want_deriv || (deriv_ok && (tail_deriv <= config.rel_tol * mag_deriv || tail_deriv == 0.0));
      if (value_done && deriv_done && k >= 1 && (!pole_case || k > m)) {
        out.value = value.to_complex();
        out.deriv = deriv.to_complex();
        out.value_bound = tail_value;
        out.deriv_bound = tail_deriv;
        return out;
      }
    }

    // advance to k+1
    const CDD factor = sd + DD(static_cast<double>(k));
    const DD kp1(static_cast<double>(k) + 1.0);
    if (pole_case && k == m) {
      g_skip = g_skip / kp1;  // factor (s+m) = 0 is skipped
      g = CDD();
    } else {
      if (want_deriv) log_sum = log_sum + one / factor;
      g = g * factor / kp1;
      g_skip = g_skip * factor / kp1;
    }
    zk = zk * zd;
    qhk = qhk * qd;
  }
  throw NonConvergenceError("zeta: k-series did not converge within max_terms = " +
                            std::to_string(config.max_terms));
}

inline complex zeta_prefactor(complex s, const QParameter& qp) {
  const complex q = qp.value();
  return (1.0 + q) * std::exp(s * std::log(1.0 - q));
}

/// Finite k-series sum_{k<=m} g(-m,k) z^k / (1 + q^{h+k}) in double-double.
inline complex terminating_hurwitz_sum(std::size_t m, long long h, const QParameter& qp, complex x) {
  const CDD qd(qp.value());
  const CDD one(complex(1.0));
  const CDD z = cdd_qpow(qp.value(), x);
  CDD sum;
  CDD zk = one;
  CDD qhk = cdd_ipow(qd, h);
  for (std::size_t k = 0; k <= m; ++k) {
    const CDD term = zk / (one + qhk) * to_dd(binomial(m, k));
    sum = (k % 2 == 0) ? sum + term : sum - term;
    zk = zk * z;
    qhk = qhk * qd;
  }
  const CDD scale = (one + qd) / cdd_ipow(one - qd, static_cast<long long>(m));
  return (scale * sum).to_complex();
}

struct HurwitzClosedPart {
  complex value{};       // (1-q^x)^{-s}
  complex log_factor{};  // d/ds log of the closed part, relative to (1-q)^s already in the prefactor
  bool vanishes = false;
};

inline HurwitzClosedPart hurwitz_closed_part(complex s, complex z, bool x_is_zero) {
  if (!x_is_zero) {
    const complex log_one_minus_z = std::log(1.0 - z);
    return {std::exp(-s * log_one_minus_z), -log_one_minus_z, false};
  }
  // 0^{-s}
  if (s == complex(0.0, 0.0)) return {1.0, 0.0, false};
  if (s.real() < 0.0) return {0.0, 0.0, true};
  throw DomainError("zeta_hurwitz: x = 0 term 1/[0]_q^s is singular for Re(s) >= 0, s != 0");
}

inline complex validated_z(const ZetaRequest& req, bool& x_is_zero) {
  if (req.x.real() < 0.0) throw DomainError("zeta_hurwitz: x must satisfy Re(x) >= 0");
  x_is_zero = req.x == complex(0.0, 0.0);
  if (x_is_zero) return 1.0;
  const complex z = qpow(req.q.value(), req.x);
  if (!(std::abs(z) < 1.0)) throw DomainError("zeta_hurwitz: |q^x| must be < 1 for the k-series to converge");
  return z;
}

}  // namespace detail

/// zeta_{E,q}(s,x|h) through the k-series.
inline SeriesValue qzeta_hurwitz(const ZetaRequest& req) {
  req.config.validate();
  detail::check_h(req.h);
  bool x_is_zero = false;
  const complex z = detail::validated_z(req, x_is_zero);
  const complex s = req.s;

  if (is_nonpositive_integer(s)) {
    const auto m = static_cast<std::size_t>(-s.real());
    if (m + 1 > req.config.max_terms) throw NonConvergenceError("zeta: terminating series longer than max_terms");
    return {detail::terminating_hurwitz_sum(m, req.h, req.q, req.x), 0.0, m + 1, true};
  }

  const detail::HurwitzClosedPart closed = detail::hurwitz_closed_part(s, z, x_is_zero);
  const complex pref = detail::zeta_prefactor(s, req.q);
  const detail::KernelResult tail = detail::tail_series(s, req.h, req.q, z, 0.0, false, req.config);
  return {pref * (closed.value + tail.value), std::abs(pref) * tail.value_bound, tail.terms, true};
}

/// zeta_{E,q}(s|h) = [2]_q (1-q)^s sum_k g(s,k) (-q^{h+k} / (1 + q^{h+k})).
inline SeriesValue qzeta(complex s, long long h, const QParameter& q, const EngineConfig& config = {}) {
  config.validate();
  detail::check_h(h);
  const complex pref = detail::zeta_prefactor(s, q);
  const detail::KernelResult r = detail::tail_series(s, h, q, 1.0, 0.0, false, config);
  return {pref * r.value, std::abs(pref) * r.value_bound, r.terms, true};
}

/// d/ds of qzeta (x absent) or qzeta_hurwitz (x present), term by term.
inline SeriesValue qzeta_deriv(complex s, long long h, const QParameter& q, std::optional<complex> x = std::nullopt,
                               const EngineConfig& config = {}) {
  config.validate();
  detail::check_h(h);
  const complex pref = detail::zeta_prefactor(s, q);
  const complex log_one_minus_q = std::log(1.0 - q.value());
  complex z = 1.0;
  complex closed_deriv = 0.0;
  if (x) {
    bool x_is_zero = false;
    z = detail::validated_z(ZetaRequest{s, *x, h, q, config}, x_is_zero);
    if (x_is_zero && s == complex(0.0, 0.0)) {
      throw DomainError("zeta_hurwitz derivative: 0^{-s} is not differentiable at s = 0");
    }
    const detail::HurwitzClosedPart closed = detail::hurwitz_closed_part(s, z, x_is_zero);
    if (!closed.vanishes) closed_deriv = pref * closed.value * (log_one_minus_q + closed.log_factor);
  }
  const detail::KernelResult r = detail::tail_series(s, h, q, z, log_one_minus_q, true, config);
  return {closed_deriv + pref * r.deriv, std::abs(pref) * r.deriv_bound, r.terms, true};
}

namespace detail {

/// sum_{n>=0} (-1)^n (n+x)^{-s} with CVZ acceleration (Re s > 0, x > 0).
inline SeriesValue alternating_cvz(complex s, double x, const EngineConfig& config) {
  auto run = [&](std::size_t n_terms) {
    double d = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(n_terms));
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    complex sum(0.0, 0.0);
    const double N = static_cast<double>(n_terms);
    for (std::size_t k = 0; k < n_terms; ++k) {
      const double kk = static_cast<double>(k);
      c = b - c;
      sum += c * std::exp(-s * std::log(kk + x));
      b = (kk + N) * (kk - N) * b / ((kk + 0.5) * (kk + 1.0));
    }
    return sum / d;
  };
  const double base = std::log(2.0 / config.rel_tol) / std::log(3.0 + std::sqrt(8.0));
  std::size_t n = static_cast<std::size_t>(std::ceil(base + std::abs(s.imag()))) + 2;
  if (n + 8 > config.max_terms) throw NonConvergenceError("zeta_E: CVZ needs more than max_terms terms");
  const complex coarse = run(n);
  const complex fine = run(n + 8);
  const double err = std::abs(fine - coarse);
  if (err > config.rel_tol * std::max(std::abs(fine), std::numeric_limits<double>::min()) && err > 1e-300) {
    throw NonConvergenceError("zeta_E: CVZ estimates disagree beyond tolerance");
  }
  return {fine, err, n + 8, true};
}

/// sum_{n>=0} (-1)^n (n+x)^{-s} by the Euler transform sum_k (-1)^k Delta^k a_0 / 2^{k+1}
/// (Re s <= 0). Exact termination at nonpositive integer s.
inline SeriesValue alternating_euler_transform(complex s, double x, const EngineConfig& config) {
  const bool integer_case = is_nonpositive_integer(s);
  const auto p = integer_case ? static_cast<long long>(-s.real()) : 0LL;
  auto a = [&](std::size_t j) -> CDD {
    const double base = static_cast<double>(j) + x;
    if (base == 0.0) {
      if (s == complex(0.0, 0.0)) return CDD(complex(1.0));
      if (s.real() < 0.0) return CDD();
      throw DomainError("zeta_E: 0^{-s} is undefined here");
    }
    if (integer_case) return cdd_ipow(CDD(DD(base), DD(0.0)), p);
    return CDD(std::exp(-s * std::log(base)));
  };

  std::vector<CDD> diagonal;  // diagonal[i] = Delta^i a_{m-i}
  CDD sum;
  DD weight(0.5);
  double last = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < config.max_terms; ++m) {
    CDD carry = a(m);
    for (auto& entry : diagonal) {
      const CDD next = carry - entry;
      entry = carry;
      carry = next;
    }
    diagonal.push_back(carry);
    // carry = Delta^m a_0
    const CDD term = carry * weight;
    sum = (m % 2 == 0) ? sum + term : sum - term;
    weight = weight * DD(0.5);
    last = std::abs(term.to_complex());
    if (integer_case && static_cast<long long>(m) == p) return {sum.to_complex(), 0.0, m + 1, true};
    const double mag = std::abs(sum.to_complex());
    if (!integer_case && m >= 4 && last <= config.rel_tol * mag && previous <= config.rel_tol * mag) {
      return {sum.to_complex(), last, m + 1, true};
    }
    previous = last;
  }
  throw NonConvergenceError("zeta_E: Euler transform did not converge within max_terms");
}

}  // namespace detail

/// zeta_E(s) = 2 sum_{n>=1} (-1)^n n^{-s}, or zeta_E(s,x) = 2 sum_{n>=0} (-1)^n (n+x)^{-s}.
inline SeriesValue classical_zeta_E(complex s, std::optional<double> x = std::nullopt, const EngineConfig& config = {}) {
  config.validate();
  double shift = 1.0;
  double scale = -2.0;
  if (x) {
    if (!(*x >= 0.0 && *x < 1.0)) throw DomainError("zeta_E: x must lie in [0, 1)");
    if (*x == 0.0 && s.real() > 0.0) throw DomainError("zeta_E: x = 0 with Re(s) > 0 hits the 0^{-s} pole");
    shift = *x;
    scale = 2.0;
  }
  SeriesValue r = s.real() > 0.0 ? detail::alternating_cvz(s, shift, config)
                                 : detail::alternating_euler_transform(s, shift, config);
  r.value *= scale;
  r.error_bound *= std::abs(scale);
  return r;
}

}  // namespace qeuler
