#pragma once

// Scalar building blocks shared by every module: the validated deformation
// parameter, q-brackets, rising-factorial binomials, complex log-Gamma and
// the result/config types of the series engine.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "qeuler/errors.hpp"

namespace qeuler {

using complex = std::complex<double>;

/// Complex deformation parameter with |q| < 1.
class QParameter {
 public:
  explicit QParameter(complex q) : q_(q) {
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()) || !(std::abs(q) < 1.0)) {
      throw DomainError("q must satisfy |q| < 1");
    }
  }
  explicit QParameter(double q) : QParameter(complex(q, 0.0)) {}

  [[nodiscard]] complex value() const { return q_; }
  [[nodiscard]] double modulus() const { return std::abs(q_); }
  [[nodiscard]] bool is_real() const { return q_.imag() == 0.0; }

  friend bool operator==(const QParameter&, const QParameter&) = default;

 private:
  complex q_;
};

/// Numeric value together with its truncation bookkeeping.
struct SeriesValue {
  complex value{};
  double error_bound = 0.0;
  std::size_t terms_used = 0;
  bool converged = false;
};

struct EngineConfig {
  double rel_tol = 1e-12;
  std::size_t max_terms = 10000;
  double fd_step = 1e-5;

  void validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("rel_tol must lie in (0, 1)");
    if (max_terms < 16) throw DomainError("max_terms must be at least 16");
    if (!(fd_step > 0.0)) throw DomainError("fd_step must be positive");
  }
};

inline bool is_integer(complex s) {
  return s.imag() == 0.0 && std::isfinite(s.real()) && s.real() == std::floor(s.real());
}

inline bool is_nonpositive_integer(complex s) { return is_integer(s) && s.real() <= 0.0; }

/// z^n for integer n by repeated squaring.
inline complex ipow(complex z, long long n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  complex result(1.0, 0.0);
  complex base = z;
  auto e = static_cast<unsigned long long>(n);
  while (e != 0) {
    if (e & 1ULL) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

/// q^x on the principal branch, exact repeated products for integer x.
inline complex qpow(complex q, complex x) {
  if (is_integer(x) && std::abs(x.real()) < 9.0e15) {
    const auto n = static_cast<long long>(x.real());
    if (q == complex(0.0, 0.0)) {
      if (n == 0) return 1.0;
      if (n > 0) return 0.0;
      throw PoleError("0 raised to a negative power");
    }
    return ipow(q, n);
  }
  if (q == complex(0.0, 0.0)) {
    if (x.real() > 0.0) return 0.0;
    throw PoleError("0 raised to a power with nonpositive real part");
  }
  return std::exp(x * std::log(q));
}

/// [x]_q = (1 - q^x) / (1 - q); a finite geometric sum for integer x >= 0.
inline complex q_bracket(complex x, const QParameter& qp) {
  const complex q = qp.value();
  if (is_integer(x) && x.real() >= 0.0 && x.real() <= 4096.0) {
    const auto n = static_cast<int>(x.real());
    complex sum(0.0, 0.0);
    complex power(1.0, 0.0);
    for (int j = 0; j < n; ++j) {
      sum += power;
      power *= q;
    }
    return sum;
  }
  return (1.0 - qpow(q, x)) / (1.0 - q);
}

/// Gamma(s+k) / (Gamma(s) k!) as the finite product prod_{j<k} (s+j)/(j+1).
inline complex gen_binomial(complex s, unsigned k) {
  complex result(1.0, 0.0);
  for (unsigned j = 0; j < k; ++j) {
    const complex factor = s + static_cast<double>(j);
    if (factor == complex(0.0, 0.0)) return 0.0;
    result *= factor / static_cast<double>(j + 1);
  }
  return result;
}

/// sum_{j<k} 1/(s+j), the logarithmic s-derivative of gen_binomial.
inline complex gen_binomial_log_deriv(complex s, unsigned k) {
  complex sum(0.0, 0.0);
  for (unsigned j = 0; j < k; ++j) {
    const complex factor = s + static_cast<double>(j);
    if (factor == complex(0.0, 0.0)) {
      throw PoleError("gen_binomial_log_deriv: s + " + std::to_string(j) + " vanishes");
    }
    sum += 1.0 / factor;
  }
  return sum;
}

namespace detail {

// Lanczos coefficients, g = 7, n = 9.
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczos[9] = {
    0.99999999999980993227684700473478,  676.520368121885098567009190444019,
    -1259.13921672240287047156078755283, 771.3234287776530788486528258894,
    -176.61502916214059906584551354,     12.507343278686904814458936853,
    -0.13857109526572011689554707,       9.984369578019570859563e-6,
    1.50563273514931155834e-7};

}  // namespace detail

/// Principal-branch log Gamma via Lanczos, with reflection for Re(z) < 1/2.
inline complex log_gamma(complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at a nonpositive integer");
  constexpr double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  const complex zm = z - 1.0;
  complex series(detail::kLanczos[0], 0.0);
  for (int i = 1; i < 9; ++i) series += detail::kLanczos[i] / (zm + static_cast<double>(i));
  const complex t = zm + detail::kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (zm + 0.5) * std::log(t) - t + std::log(series);
}

/// 1 / (Gamma(1+s) Gamma(1-s)) = sin(pi s) / (pi s); 1 at 0, exactly 0 at other integers.
inline complex reciprocal_gamma_pair(complex s) {
  if (is_integer(s)) return s.real() == 0.0 ? complex(1.0) : complex(0.0);
  constexpr double pi = std::numbers::pi;
  const complex x = pi * s;
  if (std::abs(x) < 1e-4) {
    const complex x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

/// d/ds of reciprocal_gamma_pair.
inline complex reciprocal_gamma_pair_deriv(complex s) {
  constexpr double pi = std::numbers::pi;
  const complex x = pi * s;
  if (std::abs(x) < 1e-4) {
    const complex x2 = x * x;
    return pi * (-x / 3.0 + x * x2 / 30.0);
  }
  return pi * (x * std::cos(x) - std::sin(x)) / (x * x);
}

}  // namespace qeuler
