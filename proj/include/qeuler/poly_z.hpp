#pragma once

// Dense polynomials in q with arbitrary-precision integer coefficients.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qeuler/errors.hpp"

namespace qeuler {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }
  PolyZ(std::initializer_list<long long> coefficients) {
    c_.reserve(coefficients.size());
    for (long long v : coefficients) c_.emplace_back(v);
    trim();
  }

  static PolyZ constant(const BigInt& v) { return PolyZ(std::vector<BigInt>{v}); }

  static PolyZ monomial(std::size_t degree, const BigInt& coefficient = 1) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = coefficient;
    return PolyZ(std::move(c));
  }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const { return c_; }
  [[nodiscard]] const BigInt& leading() const { return c_.back(); }

  [[nodiscard]] BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  [[nodiscard]] BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) {
      g = boost::multiprecision::gcd(g, v);
      if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
  }

  [[nodiscard]] PolyZ primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    PolyZ r = *this;
    for (auto& v : r.c_) v /= g;
    return r;
  }

  PolyZ& operator+=(const PolyZ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  PolyZ& operator-=(const PolyZ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  PolyZ& operator*=(const BigInt& k) {
    if (k == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= k;
    return *this;
  }

  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator-(PolyZ a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend PolyZ operator*(PolyZ a, const BigInt& k) { return a *= k; }

  friend PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyZ(std::move(r));
  }

  PolyZ& operator*=(const PolyZ& o) { return *this = *this * o; }

  friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.c_ == b.c_; }

  /// Divide every coefficient by k; the division must be exact.
  [[nodiscard]] PolyZ divide_exact(const BigInt& k) const {
    PolyZ r = *this;
    for (auto& v : r.c_) {
      if (v % k != 0) throw Error("PolyZ::divide_exact: inexact scalar division");
      v /= k;
    }
    return r;
  }

  /// Quotient of an exact division by d over Z[q]; throws if a remainder is left.
  [[nodiscard]] PolyZ divide_exact(const PolyZ& d) const {
    if (d.is_zero()) throw DivisionByZeroError("PolyZ: division by the zero polynomial");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw Error("PolyZ::divide_exact: nonzero remainder");
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> quot(static_cast<std::size_t>(degree() - d.degree() + 1));
    const auto dd = static_cast<std::size_t>(d.degree());
    for (std::size_t i = quot.size(); i-- > 0;) {
      BigInt& top = rem[i + dd];
      if (top == 0) continue;
      if (top % d.leading() != 0) throw Error("PolyZ::divide_exact: nonzero remainder");
      const BigInt f = top / d.leading();
      quot[i] = f;
      for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= f * d.c_[j];
    }
    for (const auto& v : rem) {
      if (v != 0) throw Error("PolyZ::divide_exact: nonzero remainder");
    }
    return PolyZ(std::move(quot));
  }

  /// lc(b)^(deg a - deg b + 1) * a mod b.
  [[nodiscard]] static PolyZ pseudo_remainder(const PolyZ& a, const PolyZ& b) {
    if (b.is_zero()) throw DivisionByZeroError("PolyZ: pseudo-remainder by zero");
    std::vector<BigInt> rem = a.c_;
    const long db = b.degree();
    long dr = a.degree();
    long steps = dr - db + 1;
    while (dr >= db && dr >= 0) {
      const BigInt top = rem[static_cast<std::size_t>(dr)];
      for (auto& v : rem) v *= b.leading();
      const auto shift = static_cast<std::size_t>(dr - db);
      for (std::size_t j = 0; j <= static_cast<std::size_t>(db); ++j) rem[shift + j] -= top * b.c_[j];
      --steps;
      PolyZ tmp(rem);
      rem = tmp.c_;
      dr = tmp.degree();
    }
    PolyZ r(std::move(rem));
    if (steps > 0) {
      BigInt f = boost::multiprecision::pow(b.leading(), static_cast<unsigned>(steps));
      r *= f;
    }
    return r;
  }

  /// Primitive gcd over Q[q] (positive leading coefficient), subresultant PRS.
  [[nodiscard]] static PolyZ gcd(PolyZ a, PolyZ b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    a = a.primitive_part();
    b = b.primitive_part();
    BigInt g = 1;
    BigInt h = 1;
    while (true) {
      const long delta = a.degree() - b.degree();
      PolyZ r = pseudo_remainder(a, b);
      if (r.is_zero()) break;
      if (r.degree() == 0) return PolyZ{1};
      a = b;
      const BigInt divisor = g * boost::multiprecision::pow(h, static_cast<unsigned>(delta));
      b = r.divide_exact(divisor);
      g = a.leading();
      if (delta == 0) {
        // h unchanged
      } else if (delta == 1) {
        h = g;
      } else {
        h = boost::multiprecision::pow(g, static_cast<unsigned>(delta)) /
            boost::multiprecision::pow(h, static_cast<unsigned>(delta - 1));
      }
    }
    return b.primitive_part();
  }

  [[nodiscard]] std::complex<double> evaluate(std::complex<double> q) const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i].convert_to<double>();
    return acc;
  }

  [[nodiscard]] BigRational evaluate(const BigRational& q) const {
    BigRational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + BigRational(c_[i]);
    return acc;
  }

  /// "c0 + c1*q + c2*q^2 ..." in ascending powers, zero terms omitted.
  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const BigInt& v = c_[i];
      if (v == 0) continue;
      const bool negative = v < 0;
      const std::string mag = BigInt(boost::multiprecision::abs(v)).str();
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      out += mag;
      if (i == 1) out += "*q";
      if (i > 1) out += "*q^" + std::to_string(i);
      first = false;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

namespace poly {

/// 1 + q + ... + q^{k-1}; zero for k = 0.
inline PolyZ bracket(std::size_t k) {
  std::vector<BigInt> c(k, BigInt(1));
  return PolyZ(std::move(c));
}

inline PolyZ power(const PolyZ& p, std::size_t e) {
  PolyZ result{1};
  PolyZ base = p;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

inline PolyZ one_plus_q_power(std::size_t m) {
  if (m == 0) return PolyZ{2};
  return PolyZ::monomial(m) + PolyZ{1};
}

}  // namespace poly

}  // namespace qeuler
