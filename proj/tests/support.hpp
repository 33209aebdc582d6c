#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qeuler/qeuler.hpp"

namespace qtest {

using qeuler::complex;

inline double rel_err(complex a, complex b) {
  const double scale = std::abs(b);
  return scale > 0.0 ? std::abs(a - b) / scale : std::abs(a - b);
}

/// Seeded generators for property tests; every suite picks its own seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
  }
  /// Uniform point in the disk |q| < radius.
  complex disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    const double t = uniform(0.0, 2.0 * M_PI);
    return std::polar(r, t);
  }

 private:
  std::mt19937_64 rng_;
};

/// [2]_q sum_{n>=first} (-1)^n q^{nh} [n+x]_q^{-s} for real q in (0,1) by
/// repeated averaging of partial sums, in long double. Independent of the
/// k-series.
inline long double averaged_zeta_oracle(long double s, long double q, long double x = 0.0L, int h = 0,
                                        int first = 1, int terms = 400, int depth = 60) {
  std::vector<long double> sums;
  sums.reserve(terms);
  long double partial = 0.0L;
  for (int n = first; n < first + terms; ++n) {
    const long double bracket = (1.0L - std::pow(q, n + x)) / (1.0L - q);
    const long double term = (1.0L + q) * std::pow(q, static_cast<long double>(n) * h) * std::pow(bracket, -s);
    partial += (n % 2 == 0) ? term : -term;
    sums.push_back(partial);
  }
  for (int r = 0; r < depth; ++r) {
    for (std::size_t i = 0; i + 1 < sums.size(); ++i) sums[i] = 0.5L * (sums[i] + sums[i + 1]);
    sums.pop_back();
  }
  return sums.back();
}

/// Stirling series for log Gamma after shifting Re z above 20.
inline complex stirling_log_gamma(complex z) {
  complex shift = 0.0;
  while (z.real() < 20.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const complex z2 = z * z;
  const complex series = 1.0 / (12.0 * z) - 1.0 / (360.0 * z * z2) + 1.0 / (1260.0 * z * z2 * z2) -
                         1.0 / (1680.0 * z * z2 * z2 * z2);
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * M_PI) + series - shift;
}

}  // namespace qtest
