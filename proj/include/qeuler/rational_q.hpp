#pragma once

// Exact elements of Q(q), kept in canonical form:
//   gcd(num, den) = 1 over Q[q], lc(den) > 0, and the integer contents of
//   numerator and denominator are coprime.

#include <cctype>
#include <complex>
#include <string>
#include <string_view>
#include <utility>

#include "qeuler/errors.hpp"
#include "qeuler/poly_z.hpp"

namespace qeuler {

class RationalQ {
 public:
  RationalQ() : num_(), den_{1} {}
  RationalQ(long long v) : num_{v}, den_{1} {}  // NOLINT(google-explicit-constructor)
  explicit RationalQ(PolyZ num) : num_(std::move(num)), den_{1} {}
  RationalQ(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("RationalQ: zero denominator");
    canonicalize();
  }

  static RationalQ ratio(long long a, long long b) { return {PolyZ{a}, PolyZ{b}}; }

  [[nodiscard]] const PolyZ& numerator() const { return num_; }
  [[nodiscard]] const PolyZ& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  friend RationalQ operator+(const RationalQ& a, const RationalQ& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalQ operator-(const RationalQ& a, const RationalQ& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalQ operator-(const RationalQ& a) {
    RationalQ r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalQ operator*(const RationalQ& a, const RationalQ& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalQ operator/(const RationalQ& a, const RationalQ& b) {
    if (b.is_zero()) throw DivisionByZeroError("RationalQ: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalQ& operator+=(const RationalQ& o) { return *this = *this + o; }
  RationalQ& operator-=(const RationalQ& o) { return *this = *this - o; }
  RationalQ& operator*=(const RationalQ& o) { return *this = *this * o; }
  RationalQ& operator/=(const RationalQ& o) { return *this = *this / o; }

  /// Cross-multiplication test; independent of canonical form.
  friend bool operator==(const RationalQ& a, const RationalQ& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Structural equality of the stored representation.
  [[nodiscard]] bool identical(const RationalQ& o) const { return num_ == o.num_ && den_ == o.den_; }

  [[nodiscard]] std::complex<double> evaluate(std::complex<double> q0) const {
    const std::complex<double> d = den_.evaluate(q0);
    if (d == std::complex<double>(0.0, 0.0)) throw PoleError("RationalQ: denominator vanishes at evaluation point");
    return num_.evaluate(q0) / d;
  }

  [[nodiscard]] BigRational evaluate(const BigRational& q0) const {
    const BigRational d = den_.evaluate(q0);
    if (d == 0) throw PoleError("RationalQ: denominator vanishes at evaluation point");
    return num_.evaluate(q0) / d;
  }

  /// "(<numerator>)/(<denominator>)".
  [[nodiscard]] std::string to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

  /// Inverse of to_string(); also accepts bare "q" / "-q^2" style terms.
  static RationalQ parse(std::string_view text);

  /// Re-run the canonicalization; a no-op on any value built through the API.
  [[nodiscard]] RationalQ normalized() const {
    RationalQ r = *this;
    r.canonicalize();
    return r;
  }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = PolyZ{1};
      return;
    }
    if (den_.degree() > 0 && num_.degree() >= 0) {
      const PolyZ g = PolyZ::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
      }
    }
    const BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
    if (c > 1) {
      num_ = num_.divide_exact(c);
      den_ = den_.divide_exact(c);
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  PolyZ num_;
  PolyZ den_;
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  PolyZ parse_poly() {
    skip_ws();
    PolyZ result;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      skip_ws();
      result += parse_term(sign);
      first = false;
    }
    return result;
  }

  void expect(char c) {
    skip_ws();
    if (get() != c) fail(std::string("expected '") + c + "'");
  }

  [[nodiscard]] bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse rational function at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  PolyZ parse_term(int sign) {
    BigInt coefficient = 1;
    bool have_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      coefficient = parse_uint();
      have_coefficient = true;
      skip_ws();
      if (peek() != '*') return PolyZ::constant(sign * coefficient);
      get();
      skip_ws();
    }
    if (peek() != 'q') {
      if (have_coefficient) fail("expected 'q' after '*'");
      fail("expected a coefficient or 'q'");
    }
    get();
    std::size_t degree = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      degree = parse_uint().convert_to<std::size_t>();
    }
    return PolyZ::monomial(degree, sign * coefficient);
  }

  BigInt parse_uint() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek())) != 0) digits += get();
    if (digits.empty()) fail("expected digits");
    return BigInt(digits);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }
  [[nodiscard]] char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RationalQ RationalQ::parse(std::string_view text) {
  detail::PolyParser p(text);
  p.expect('(');
  PolyZ num = p.parse_poly();
  p.expect(')');
  p.expect('/');
  p.expect('(');
  PolyZ den = p.parse_poly();
  p.expect(')');
  if (!p.at_end()) p.fail("trailing characters");
  return {std::move(num), std::move(den)};
}

enum class ArithOp { add, sub, mul, div };

inline RationalQ ratq_arith(const RationalQ& a, const RationalQ& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw Error("ratq_arith: unknown operation");
}

inline std::complex<double> ratq_eval(const RationalQ& a, std::complex<double> q0) { return a.evaluate(q0); }

}  // namespace qeuler
