#include "fanchar/exact/qpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "fanchar/error.hpp"

namespace fanchar {

QPoly::QPoly(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

QPoly::QPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::linear_power(const Rational& root, std::size_t power) {
  return pow(QPoly(std::vector<Rational>{-root, Rational(1)}), power);
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational QPoly::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QPoly QPoly::reversed(std::size_t d) const {
  if (degree() > static_cast<long>(d)) throw PreconditionError("reversal degree below polynomial degree");
  std::vector<Rational> v(d + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[d - i] = coeffs_[i];
  return QPoly(std::move(v));
}

bool QPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

bool QPoly::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.sign() >= 0; });
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string QPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || !mag.is_one()) os << mag;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::vector<std::string> QPoly::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

QPolyDivision poly_divmod(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dd = d.size() - 1;
  if (rem.size() < d.size()) return {QPoly(), num};
  std::vector<Rational> quot(rem.size() - dd);
  const Rational lead_inv = d.back().inverse();
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Rational q = rem[k] * lead_inv;
    quot[k - dd] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d[j];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly poly_exact_div(const QPoly& num, const QPoly& den) {
  auto res = poly_divmod(num, den);
  if (!res.remainder.is_zero()) {
    throw DivisibilityError("inexact polynomial division: (" + num.str() + ") / (" + den.str() +
                            ") leaves remainder " + res.remainder.str());
  }
  return res.quotient;
}

bool poly_is_palindromic(const QPoly& p, std::size_t d) {
  if (p.degree() > static_cast<long>(d)) return false;
  for (std::size_t i = 0; i <= d; ++i) {
    if (p.coeff(i) != p.coeff(d - i)) return false;
  }
  return true;
}

std::vector<Rational> series_inverse(const QPoly& p, std::size_t n) {
  const Rational c0 = p.coeff(0);
  if (c0.is_zero()) throw PreconditionError("series inverse needs nonzero constant term");
  const Rational inv0 = c0.inverse();
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = (k == 0) ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= k && static_cast<long>(j) <= p.degree(); ++j) acc -= p.coeff(j) * out[k - j];
    out[k] = acc * inv0;
  }
  return out;
}

QPoly pow(const QPoly& p, std::size_t e) {
  QPoly result = QPoly::constant(1);
  for (std::size_t i = 0; i < e; ++i) result = result * p;
  return result;
}

}  // namespace fanchar
