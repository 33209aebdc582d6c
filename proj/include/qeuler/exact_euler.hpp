#pragma once

// Exact q-Euler numbers and polynomials in Q(q), and symbolic checks of the
// shift / translation identities they satisfy.

#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include "qeuler/binomial.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/poly_z.hpp"
#include "qeuler/rational_q.hpp"

namespace qeuler {

namespace detail {

class ExactEulerTable {
 public:
  RationalQ get(std::size_t n) {
    std::lock_guard lock(mutex_);
    if (values_.empty()) values_.emplace_back(PolyZ{1, 1}, PolyZ{2});
    while (values_.size() <= n) {
      const std::size_t m = values_.size();
      RationalQ sum;
      for (std::size_t l = 0; l < m; ++l) {
        sum += RationalQ(PolyZ::monomial(l, binomial(m, l))) * values_[l];
      }
      values_.push_back(-sum / RationalQ(poly::one_plus_q_power(m)));
    }
    return values_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<RationalQ> values_;
};

inline ExactEulerTable& exact_euler_table() {
  static ExactEulerTable table;
  return table;
}

inline RationalQ bracket_power(std::size_t l, std::size_t n) {
  // [l]_q^n with [0]_q^0 = 1.
  return RationalQ(poly::power(poly::bracket(l), n));
}

}  // namespace detail

/// E_{n,q} from E_{0,q} = (1+q)/2 and
/// E_{n,q} = -(1/(1+q^n)) sum_{l<n} C(n,l) q^l E_{l,q}.
inline RationalQ exact_euler_number(std::size_t n) { return detail::exact_euler_table().get(n); }

/// E_n(x,h|q) = [2]_q/(1-q)^n sum_{l=0}^{n} C(n,l) (-1)^l q^{lx} / (1 + q^{l+h}).
inline RationalQ exact_euler_poly(std::size_t n, std::size_t x, std::size_t h) {
  RationalQ sum;
  for (std::size_t l = 0; l <= n; ++l) {
    BigInt c = binomial(n, l);
    if (l % 2 == 1) c = -c;
    sum += RationalQ(PolyZ::monomial(l * x, c), poly::one_plus_q_power(l + h));
  }
  const PolyZ one_minus_q{1, -1};
  RationalQ result = RationalQ(PolyZ{1, 1}) * sum / RationalQ(poly::power(one_minus_q, n));
  if (result.denominator().evaluate(BigRational(1)) == 0) {
    throw Error("exact_euler_poly: (1-q)^n failed to cancel");
  }
  return result;
}

/// The identities checked exactly in Q(q). Shift index k (or translation x = k).
enum class Identity {
  /// Explicit binomial sum at x = h = 0 equals the recurrence values.
  sum_form_matches_recurrence,
  /// E_{m,q}(x) = sum_l C(m,l) q^{xl} E_{l,q} [x]_q^{m-l}, integer x = k >= 0.
  translation_expansion,
  /// k even: E_{n,q}(k) - E_{n,q} = [2]_q sum_{l<k} (-1)^{l-1} [l]_q^n.
  even_shift_difference,
  /// k odd: E_{n,q}(k) + E_{n,q} = [2]_q sum_{l<k} (-1)^l [l]_q^n.
  odd_shift_sum,
  /// k even: [2] sum_{l<k} (-1)^{l-1}[l]^n = (q^{kn}-1) E_n + sum_{l<n} C(n,l) q^{kl} E_l [k]^{n-l}.
  even_shift_expanded,
  /// k odd: [2] sum_{l<k} (-1)^l [l]^n = (q^{kn}+1) E_n + sum_{l<n} C(n,l) q^{kl} E_l [k]^{n-l}.
  odd_shift_expanded,
  /// Even-k difference with sign (-1)^l on the right; false in general, kept as a negative check.
  even_shift_difference_uncorrected,
};

inline std::string to_string(Identity id) {
  switch (id) {
    case Identity::sum_form_matches_recurrence: return "sum-form-matches-recurrence";
    case Identity::translation_expansion: return "translation-expansion";
    case Identity::even_shift_difference: return "even-shift-difference";
    case Identity::odd_shift_sum: return "odd-shift-sum";
    case Identity::even_shift_expanded: return "even-shift-expanded";
    case Identity::odd_shift_expanded: return "odd-shift-expanded";
    case Identity::even_shift_difference_uncorrected: return "even-shift-difference-uncorrected";
  }
  return "unknown";
}

namespace detail {

inline RationalQ alternating_bracket_sum(std::size_t k, std::size_t n, int sign_offset) {
  // [2]_q sum_{l<k} (-1)^{l+sign_offset} [l]_q^n
  RationalQ sum;
  for (std::size_t l = 0; l < k; ++l) {
    const RationalQ term = bracket_power(l, n);
    if ((l + static_cast<std::size_t>(sign_offset)) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return RationalQ(PolyZ{1, 1}) * sum;
}

inline RationalQ partial_translation_sum(std::size_t n, std::size_t k, std::size_t upper) {
  // sum_{l<upper} C(n,l) q^{kl} E_{l,q} [k]_q^{n-l}
  RationalQ sum;
  for (std::size_t l = 0; l < upper && l <= n; ++l) {
    sum += RationalQ(PolyZ::monomial(k * l, binomial(n, l))) * exact_euler_number(l) * bracket_power(k, n - l);
  }
  return sum;
}

inline void require_parity(std::size_t k, bool even, Identity id) {
  if (k == 0 || (k % 2 == 0) != even) {
    throw ParityError(to_string(id) + " needs a positive " + (even ? "even" : "odd") + " k, got " +
                      std::to_string(k));
  }
}

}  // namespace detail

/// Exact test of one identity at index n and shift k.
inline bool verify_identity(Identity id, std::size_t n, std::size_t k) {
  using detail::alternating_bracket_sum;
  using detail::partial_translation_sum;
  switch (id) {
    case Identity::sum_form_matches_recurrence:
      return exact_euler_poly(n, 0, 0) == exact_euler_number(n);
    case Identity::translation_expansion:
      return exact_euler_poly(n, k, 0) == partial_translation_sum(n, k, n + 1);
    case Identity::even_shift_difference:
      detail::require_parity(k, true, id);
      return exact_euler_poly(n, k, 0) - exact_euler_number(n) == alternating_bracket_sum(k, n, 1);
    case Identity::even_shift_difference_uncorrected:
      detail::require_parity(k, true, id);
      return exact_euler_poly(n, k, 0) - exact_euler_number(n) == alternating_bracket_sum(k, n, 0);
    case Identity::odd_shift_sum:
      detail::require_parity(k, false, id);
      return exact_euler_poly(n, k, 0) + exact_euler_number(n) == alternating_bracket_sum(k, n, 0);
    case Identity::even_shift_expanded: {
      detail::require_parity(k, true, id);
      const RationalQ qkn_minus_1(PolyZ::monomial(k * n) - PolyZ{1});
      return alternating_bracket_sum(k, n, 1) ==
             qkn_minus_1 * exact_euler_number(n) + partial_translation_sum(n, k, n);
    }
    case Identity::odd_shift_expanded: {
      detail::require_parity(k, false, id);
      const RationalQ qkn_plus_1(PolyZ::monomial(k * n) + PolyZ{1});
      return alternating_bracket_sum(k, n, 0) ==
             qkn_plus_1 * exact_euler_number(n) + partial_translation_sum(n, k, n);
    }
  }
  throw Error("verify_identity: unknown identity");
}

}  // namespace qeuler
