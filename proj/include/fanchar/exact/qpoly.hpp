#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "fanchar/exact/rational.hpp"

namespace fanchar {

/// Univariate polynomial in t with rational coefficients, stored ascending
/// (coefficient i multiplies t^i) with trailing zeros trimmed.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<long> ascending);
  explicit QPoly(std::vector<Rational> ascending);
  static QPoly constant(const Rational& c);
  static QPoly monomial(std::size_t degree, const Rational& c = Rational(1));
  /// (t - root)^power.
  static QPoly linear_power(const Rational& root, std::size_t power);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^i (zero beyond the degree).
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& t) const;
  /// t^d · p(1/t); requires degree ≤ d.
  QPoly reversed(std::size_t d) const;
  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& s, QPoly p) { return p *= s; }
  QPoly operator-() const;

  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// "1 + 2t + t^2" style.
  std::string str() const;
  std::vector<std::string> coefficient_strings() const;
  friend std::ostream& operator<<(std::ostream& os, const QPoly& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct QPolyDivision {
  QPoly quotient;
  QPoly remainder;
};

QPolyDivision poly_divmod(const QPoly& num, const QPoly& den);

/// Quotient num/den; throws DivisibilityError on nonzero remainder.
QPoly poly_exact_div(const QPoly& num, const QPoly& den);

/// True iff coefficient i equals coefficient d−i for all 0 ≤ i ≤ d.
bool poly_is_palindromic(const QPoly& p, std::size_t d);

/// First n coefficients of the power series 1/p; p(0) must be nonzero.
std::vector<Rational> series_inverse(const QPoly& p, std::size_t n);

QPoly pow(const QPoly& p, std::size_t e);

}  // namespace fanchar
