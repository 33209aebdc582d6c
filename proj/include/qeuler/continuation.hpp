#pragma once

// Analytic continuation of the q-Euler numbers, E_q(s), and of the q-Euler
// polynomials, E_q(s,w), plus grid sampling of E_q(s,w) for the
// degree-2 -> degree-3 deformation curves.
//
// E_q(s) = zeta_{E,q}(-s) + [2]_q / (Gamma(1+s) Gamma(1-s)).
//
// The second term restores the n = 0 term [2]_q [0]_q^s that the plain zeta
// sum omits: it equals [2]_q at s = 0 and vanishes at every other integer.
// Hence E_q(n) = E_{n,q} for n >= 0 and E_q(-n) = zeta_{E,q}(n) for n >= 1.

#include <cmath>
#include <complex>
#include <cstddef>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "qeuler/errors.hpp"
#include "qeuler/qzeta.hpp"
#include "qeuler/scalar_kernel.hpp"

namespace qeuler {

/// E_q(s) for complex s.
inline SeriesValue euler_continuation(complex s, const QParameter& q, const EngineConfig& config = {}) {
  SeriesValue r = qzeta(-s, 0, q, config);
  const complex correction = (1.0 + q.value()) * reciprocal_gamma_pair(s);
  if (correction != complex(0.0, 0.0)) r.value += correction;
  return r;
}

/// d/ds E_q(s) = -zeta'_{E,q}(-s) + [2]_q d/ds[sin(pi s)/(pi s)].
inline SeriesValue euler_continuation_deriv(complex s, const QParameter& q, const EngineConfig& config = {}) {
  SeriesValue r = qzeta_deriv(-s, 0, q, std::nullopt, config);
  r.value = -r.value + (1.0 + q.value()) * reciprocal_gamma_pair_deriv(s);
  return r;
}

/// The w-independent part of E_q(s,w) at one order s: for k = -1..floor(s),
/// the Gamma-ratio weight Gamma(1+s) / (Gamma(1+k+frac) Gamma(1+floor-k))
/// and the value E_q(k+frac).
class ContinuationOrder {
 public:
  ContinuationOrder(double s, const QParameter& q, const EngineConfig& config) : q_(q) {
    if (!std::isfinite(s) || s < 0.0) throw DomainError("E_q(s,w) is implemented for real s >= 0");
    floor_ = static_cast<long long>(std::floor(s));
    frac_ = s - static_cast<double>(floor_);
    const double log_gamma_top = log_gamma(1.0 + s).real();
    for (long long k = -1; k <= floor_; ++k) {
      // 1/Gamma(0) = 0 kills the k = -1 term at integer s.
      if (k == -1 && frac_ == 0.0) continue;
      const double order = static_cast<double>(k) + frac_;
      const double log_weight = log_gamma_top - log_gamma(1.0 + order).real() -
                                log_gamma(1.0 + static_cast<double>(floor_ - k)).real();
      const SeriesValue e = euler_continuation(order, q, config);
      terms_.push_back({k, order, std::exp(log_weight), e.value, e.error_bound, e.terms_used});
    }
  }

  [[nodiscard]] SeriesValue evaluate(complex w) const {
    const complex qv = q_.value();
    const complex bracket = q_bracket(w, q_);
    SeriesValue out;
    out.converged = true;
    for (const auto& t : terms_) {
      const complex factor = t.weight * qpow(qv, t.order * w) * ipow(bracket, floor_ - t.k);
      out.value += factor * t.value;
      out.error_bound += std::abs(factor) * t.error_bound;
      out.terms_used += t.terms_used;
    }
    return out;
  }

 private:
  struct Term {
    long long k;
    double order;
    double weight;
    complex value;
    double error_bound;
    std::size_t terms_used;
  };

  QParameter q_;
  long long floor_ = 0;
  double frac_ = 0.0;
  std::vector<Term> terms_;
};

/// E_q(s,w) = sum_{k=-1}^{[s]} Gamma(1+s) E_q(k+s-[s]) q^{(k+s-[s])w} [w]_q^{[s]-k}
///            / (Gamma(1+k+s-[s]) Gamma(1+[s]-k)),   [s] = floor(s).
inline SeriesValue euler_poly_continuation(double s, complex w, const QParameter& q, const EngineConfig& config = {}) {
  return ContinuationOrder(s, q, config).evaluate(w);
}

/// Inclusive grid min, min+step, ...; a final point past max is clamped to max.
inline std::vector<double> sample_range(double min, double max, double step) {
  if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step)) throw DomainError("range: non-finite value");
  if (!(step > 0.0)) throw DomainError("range: step must be positive");
  if (min > max) throw DomainError("range: min must not exceed max");
  const double span = (max - min) / step;
  const auto intervals = static_cast<std::size_t>(std::ceil(span - 1e-9));
  std::vector<double> out;
  out.reserve(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) out.push_back(min + static_cast<double>(i) * step);
  if (intervals > 0) out.back() = max;
  return out;
}

struct CurveGrid {
  QParameter q{0.5};
  std::vector<double> s_values;
  std::vector<double> w_values;
  std::vector<complex> values;  // row-major: s outer, w inner
  EngineConfig config;

  [[nodiscard]] const complex& at(std::size_t i, std::size_t j) const { return values[i * w_values.size() + j]; }
};

/// Samples E_q(s,w) over s_values x w_values. Rows are computed concurrently
/// and stored in grid order.
inline CurveGrid curve_grid(std::vector<double> s_values, std::vector<double> w_values, const QParameter& q,
                            const EngineConfig& config = {}) {
  config.validate();
  for (double s : s_values) {
    if (!(s >= 0.0)) throw DomainError("curve_grid: s values must be >= 0");
  }
  CurveGrid grid{q, std::move(s_values), std::move(w_values), {}, config};
  const std::size_t rows = grid.s_values.size();
  const std::size_t cols = grid.w_values.size();
  grid.values.assign(rows * cols, complex(0.0, 0.0));

  auto fill_rows = [&grid, &q, &config, cols](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::size_t j = 0;
      try {
        const ContinuationOrder order(grid.s_values[i], q, config);
        for (; j < cols; ++j) {
          const complex v = order.evaluate(grid.w_values[j]).value;
          if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw Error("non-finite sample");
          grid.values[i * cols + j] = v;
        }
      } catch (const NonConvergenceError& e) {
        throw NonConvergenceError("curve sample (s index " + std::to_string(i) + ", w index " + std::to_string(j) +
                                  "): " + e.what());
      } catch (const Error& e) {
        throw Error("curve sample (s index " + std::to_string(i) + ", w index " + std::to_string(j) + "): " +
                    e.what());
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), rows));
  if (workers <= 1) {
    fill_rows(0, rows);
    return grid;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (rows + workers - 1) / workers;
  for (std::size_t begin = 0; begin < rows; begin += chunk) {
    jobs.push_back(std::async(std::launch::async, fill_rows, begin, std::min(rows, begin + chunk)));
  }
  for (auto& job : jobs) job.get();
  return grid;
}

}  // namespace qeuler
