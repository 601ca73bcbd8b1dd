#include "tverlinde/series.hpp"

#include <cmath>
#include <sstream>

namespace tv {

Series Series::polynomial(int order, std::initializer_list<std::pair<int, Rational>> terms) {
  Series s(order);
  for (auto [deg, c] : terms) {
    if (deg < 0) throw std::invalid_argument("Series::polynomial: negative degree");
    c.canonicalize();
    if (deg <= order) s.coeffs_[static_cast<size_t>(deg)] += c;
  }
  return s;
}

Series Series::geometric_inverse(int order, int m) {
  if (m <= 0) throw std::invalid_argument("Series::geometric_inverse: m must be positive");
  Series s(order);
  for (int d = 0; d <= order; d += m) s.coeffs_[static_cast<size_t>(d)] = 1;
  return s;
}

bool Series::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Series::operator==(const Series& rhs) const {
  return order() == rhs.order() && coeffs_ == rhs.coeffs_;
}

Series Series::operator-() const {
  Series out(order());
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

Series Series::operator+(const Series& rhs) const {
  require_same_order(rhs);
  Series out(order());
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
  return out;
}

Series Series::operator-(const Series& rhs) const {
  require_same_order(rhs);
  Series out(order());
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
  return out;
}

Series Series::operator*(const Series& rhs) const {
  require_same_order(rhs);
  Series out(order());
  const int n = order();
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j + i <= n; ++j) {
      if (rhs.coeffs_[static_cast<size_t>(j)] == 0) continue;
      out.coeffs_[static_cast<size_t>(i + j)] +=
          coeffs_[static_cast<size_t>(i)] * rhs.coeffs_[static_cast<size_t>(j)];
    }
  }
  return out;
}

Series Series::scaled(const Rational& c) const {
  Rational cc = c;
  cc.canonicalize();
  Series out(order());
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * cc;
  return out;
}

Series Series::pow(int n) const {
  if (n < 0) throw std::invalid_argument("Series::pow: negative exponent");
  Series out = one(order());
  Series base = *this;
  while (n > 0) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

Series Series::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("non-unit series");
  const int n = order();
  Series out(n);
  out.coeffs_[0] = 1 / coeffs_[0];
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int j = 1; j <= m; ++j)
      acc += coeffs_[static_cast<size_t>(j)] * out.coeffs_[static_cast<size_t>(m - j)];
    out.coeffs_[static_cast<size_t>(m)] = -acc / coeffs_[0];
  }
  return out;
}

EvalResult Series::eval_at(long double t0, long double growth_bound) const {
  if (t0 < 0.0L || t0 >= 1.0L) throw std::domain_error("outside convergence guard");
  long double v = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    v = v * t0 + static_cast<long double>(it->get_d());
  EvalResult r;
  r.value = v;
  r.tail_bound = growth_bound * powl(t0, static_cast<long double>(order() + 1)) / (1.0L - t0);
  return r;
}

long double Series::max_abs_coeff() const {
  long double m = 0.0L;
  for (const auto& c : coeffs_) {
    long double a = fabsl(static_cast<long double>(c.get_d()));
    if (a > m) m = a;
  }
  return m;
}

std::vector<std::string> Series::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

Series Series::from_coeff_strings(const std::vector<std::string>& strs) {
  if (strs.empty()) throw std::invalid_argument("Series::from_coeff_strings: empty");
  Series s(static_cast<int>(strs.size()) - 1);
  for (size_t i = 0; i < strs.size(); ++i) {
    Rational c(strs[i]);
    c.canonicalize();
    s.coeffs_[i] = c;
  }
  return s;
}

std::string Series::str(int max_terms) const {
  std::ostringstream os;
  bool first = true;
  int emitted = 0;
  for (int m = 0; m <= order(); ++m) {
    const Rational& c = coeffs_[static_cast<size_t>(m)];
    if (c == 0) continue;
    if (max_terms >= 0 && emitted >= max_terms) {
      os << " + ...";
      break;
    }
    if (!first) os << " + ";
    os << c.get_str();
    if (m > 0) os << "*t^" << m;
    first = false;
    ++emitted;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace tv
