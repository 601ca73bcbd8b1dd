#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tv {

using Rational = mpq_class;

/// Canonicalized rational from a numerator/denominator pair.  mpq_class does
/// not canonicalize two-argument constructions on its own, and GMP arithmetic
/// and comparisons require canonical operands.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Result of evaluating a truncated series at a real point: the Horner value
/// of the kept coefficients plus a bound on the discarded tail.
struct EvalResult {
  long double value = 0.0L;
  long double tail_bound = 0.0L;
};

/// Formal power series in t over exact rationals, truncated at a fixed order.
/// Coefficients of t^m for m > order are discarded by every operation.
/// Values are immutable in spirit: all arithmetic returns new series.
class Series {
 public:
  explicit Series(int order) : coeffs_(static_cast<size_t>(check_order(order)) + 1) {}

  static Series constant(int order, Rational value) {
    Series s(order);
    value.canonicalize();
    s.coeffs_[0] = std::move(value);
    return s;
  }

  static Series one(int order) { return constant(order, 1); }

  /// coeff * t^degree (vanishes if degree > order).
  static Series monomial(int order, int degree, Rational coeff = Rational(1)) {
    Series s(order);
    if (degree < 0) throw std::invalid_argument("Series::monomial: negative degree");
    coeff.canonicalize();
    if (degree <= order) s.coeffs_[static_cast<size_t>(degree)] = std::move(coeff);
    return s;
  }

  /// Polynomial from (degree, coefficient) pairs; repeated degrees accumulate.
  static Series polynomial(int order, std::initializer_list<std::pair<int, Rational>> terms);

  /// 1 / (1 - t^m), the geometric series.
  static Series geometric_inverse(int order, int m);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int m) const { return coeffs_[static_cast<size_t>(m)]; }
  Rational& coeff(int m) { return coeffs_[static_cast<size_t>(m)]; }

  bool is_zero() const;
  bool operator==(const Series& rhs) const;

  Series operator-() const;
  Series operator+(const Series& rhs) const;
  Series operator-(const Series& rhs) const;
  Series operator*(const Series& rhs) const;
  Series& operator+=(const Series& rhs) { return *this = *this + rhs; }
  Series& operator-=(const Series& rhs) { return *this = *this - rhs; }
  Series& operator*=(const Series& rhs) { return *this = *this * rhs; }

  Series scaled(const Rational& c) const;
  Series pow(int n) const;

  /// Multiplicative inverse up to the truncation order.
  /// Throws std::domain_error("non-unit series") when the constant term is zero.
  Series inverse() const;

  /// Horner evaluation at t0 in [0,1).  The tail bound is
  /// |t0|^(order+1) * growth_bound / (1 - t0), i.e. the geometric majorant of the
  /// discarded coefficients under the caller-supplied bound |c_m| <= growth_bound.
  EvalResult eval_at(long double t0, long double growth_bound = 0.0L) const;

  /// Largest |coefficient| as a long double; handy for choosing growth bounds.
  long double max_abs_coeff() const;

  /// "p/q" strings, lowest degree first.
  std::vector<std::string> coeff_strings() const;
  static Series from_coeff_strings(const std::vector<std::string>& strs);

  std::string str(int max_terms = -1) const;

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
    return order;
  }
  void require_same_order(const Series& rhs) const {
    if (order() != rhs.order())
      throw std::invalid_argument("Series: truncation order mismatch");
  }

  std::vector<Rational> coeffs_;
};

}  // namespace tv
