#pragma once

// Numeric q-Euler numbers and polynomials for complex q, their classical
// (q -> 1) counterparts, and a summation oracle built directly on the
// generating-function series.

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qeuler/binomial.hpp"
#include "qeuler/detail/double_double.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/poly_z.hpp"
#include "qeuler/scalar_kernel.hpp"

namespace qeuler {

/// E_{0,q} .. E_{N,q} for one q, grown on demand by the recurrence.
class EulerTable {
 public:
  explicit EulerTable(QParameter q) : q_(q) { values_.push_back((1.0 + q.value()) / 2.0); }

  [[nodiscard]] const QParameter& q() const { return q_; }
  [[nodiscard]] const std::vector<complex>& values() const { return values_; }

  void extend_to(std::size_t n) {
    const complex q = q_.value();
    while (values_.size() <= n) {
      const std::size_t m = values_.size();
      complex sum(0.0, 0.0);
      complex qpow_l(1.0, 0.0);
      for (std::size_t l = 0; l < m; ++l) {
        sum += binomial_double(m, l) * qpow_l * values_[l];
        qpow_l *= q;
      }
      values_.push_back(-sum / (1.0 + ipow(q, static_cast<long long>(m))));
    }
  }

  complex operator[](std::size_t n) {
    extend_to(n);
    return values_[n];
  }

 private:
  QParameter q_;
  std::vector<complex> values_;
};

namespace detail {

class EulerTableCache {
 public:
  complex get(std::size_t n, const QParameter& q) {
    const Key key{std::bit_cast<std::uint64_t>(q.value().real()), std::bit_cast<std::uint64_t>(q.value().imag())};
    std::lock_guard lock(mutex_);
    auto it = tables_.find(key);
    if (it == tables_.end()) it = tables_.emplace(key, EulerTable(q)).first;
    return it->second[n];
  }

 private:
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  std::mutex mutex_;
  std::map<Key, EulerTable> tables_;
};

inline EulerTableCache& euler_table_cache() {
  static EulerTableCache cache;
  return cache;
}

inline DD to_dd(const BigInt& v) {
  const double hi = v.convert_to<double>();
  const BigInt rest = v - BigInt(hi);
  return {hi, rest.convert_to<double>()};
}

inline CDD cdd_ipow(const CDD& z, long long n) {
  if (n < 0) return CDD(complex(1.0)) / cdd_ipow(z, -n);
  CDD result(complex(1.0));
  CDD base = z;
  auto e = static_cast<unsigned long long>(n);
  while (e != 0) {
    if (e & 1ULL) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

/// q^x carried in double-double; exact products for integer x.
inline CDD cdd_qpow(complex q, complex x) {
  if (is_integer(x) && std::abs(x.real()) < 1e9) return cdd_ipow(CDD(q), static_cast<long long>(x.real()));
  return CDD(qpow(q, x));
}

}  // namespace detail

/// E_{n,q}, memoized per q (keyed by the bit pattern of q).
inline complex euler_number(std::size_t n, const QParameter& q) { return detail::euler_table_cache().get(n, q); }

/// E_n(x,h|q) = [2]_q/(1-q)^n sum_l C(n,l) (-1)^l q^{lx} / (1 + q^{l+h}).
inline complex euler_poly(std::size_t n, complex x, long long h, const QParameter& qp) {
  using detail::CDD;
  using detail::DD;
  const complex q = qp.value();
  const CDD qd(q);
  const CDD z = detail::cdd_qpow(q, x);
  const CDD one(complex(1.0));
  CDD sum;
  CDD zl = one;
  CDD qlh = detail::cdd_ipow(qd, h);
  for (std::size_t l = 0; l <= n; ++l) {
    CDD term = zl / (one + qlh) * detail::to_dd(binomial(n, l));
    sum = (l % 2 == 0) ? sum + term : sum - term;
    zl = zl * z;
    qlh = qlh * qd;
  }
  const CDD scale = (one + qd) / detail::cdd_ipow(one - qd, static_cast<long long>(n));
  return (scale * sum).to_complex();
}

namespace detail {

class ClassicalEulerTable {
 public:
  BigRational get(std::size_t n) {
    std::lock_guard lock(mutex_);
    if (values_.empty()) values_.emplace_back(1);
    while (values_.size() <= n) {
      const std::size_t m = values_.size();
      BigRational sum = 0;
      for (std::size_t l = 0; l < m; ++l) sum += BigRational(binomial(m, l)) * values_[l];
      values_.push_back(-sum / 2);
    }
    return values_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<BigRational> values_;
};

inline ClassicalEulerTable& classical_euler_table() {
  static ClassicalEulerTable table;
  return table;
}

}  // namespace detail

/// Classical Euler numbers of 2/(e^t+1): E_0 = 1, E_n = -(1/2) sum_{l<n} C(n,l) E_l.
inline BigRational classical_euler_number(std::size_t n) { return detail::classical_euler_table().get(n); }

/// E_n(x) = sum_k C(n,k) E_k x^{n-k}.
inline complex classical_euler_poly(std::size_t n, complex x) {
  complex sum(0.0, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    sum += binomial_double(n, k) * classical_euler_number(k).convert_to<double>() *
           ipow(x, static_cast<long long>(n - k));
  }
  return sum;
}

/// Euler-summed value of [2]_q sum_k (-1)^k q^{hk} [k+x]_q^n: partial sums,
/// then `depth` rounds of adjacent-pair averaging. error_bound is the last
/// difference in the deepest round.
inline SeriesValue euler_poly_series_oracle(std::size_t n, double x, long long h, const QParameter& qp,
                                            unsigned depth = 2, const EngineConfig& config = {}) {
  using detail::DD;
  config.validate();
  if (!qp.is_real() || !(qp.value().real() > 0.0)) throw DomainError("series oracle needs real q in (0, 1)");
  if (!(x >= 0.0)) throw DomainError("series oracle needs real x >= 0");
  if (h < 0) throw DomainError("series oracle needs h >= 0");
  if (depth == 0) throw DomainError("series oracle needs at least one averaging round");

  const double q = qp.value().real();
  const DD qd(q);
  const DD one(1.0);
  const DD qx = is_integer(x) ? detail::cdd_ipow(detail::CDD(complex(q)), static_cast<long long>(x)).re
                              : DD(std::pow(q, x));
  const DD q2 = one + qd;
  const DD one_minus_q = one - qd;
  const DD qh = detail::cdd_ipow(detail::CDD(complex(q)), h).re;

  // levels[r] holds the most recent value of averaging round r.
  std::vector<DD> levels(depth + 1);
  std::vector<bool> have(depth + 1, false);
  DD partial(0.0);
  DD qk = one;   // q^k
  DD qhk = one;  // q^{hk}
  DD previous_top(0.0);
  bool have_top = false;
  for (std::size_t k = 0; k < config.max_terms; ++k) {
    const DD bracket = (one - qk * qx) / one_minus_q;
    DD power = one;
    for (std::size_t i = 0; i < n; ++i) power = power * bracket;
    DD term = q2 * qhk * power;
    partial = (k % 2 == 0) ? partial + term : partial - term;

    DD carry = partial;
    bool carry_valid = true;
    for (unsigned r = 0; r <= depth && carry_valid; ++r) {
      const DD incoming = carry;
      if (have[r]) {
        carry = (levels[r] + incoming) * DD(0.5);
      } else {
        carry_valid = false;
      }
      levels[r] = incoming;
      have[r] = true;
    }
    if (have[depth]) {
      const DD top = levels[depth];
      if (have_top) {
        const double delta = std::abs((top - previous_top).to_double());
        const double magnitude = std::max(1.0, std::abs(top.to_double()));
        if (k >= depth + 8 && delta <= config.rel_tol * magnitude) {
          return {complex(top.to_double(), 0.0), delta, k + 1, true};
        }
      }
      previous_top = top;
      have_top = true;
    }
    qk = qk * qd;
    qhk = qhk * qh;
  }
  throw NonConvergenceError("series oracle: oscillation persists past max_terms");
}

}  // namespace qeuler
