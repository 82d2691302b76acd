#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fanchar/exact/rational.hpp"

namespace fanchar {

using QVector = std::vector<Rational>;

QVector make_vector(std::initializer_list<long> entries);
QVector unit_vector(std::size_t dim, std::size_t i);
QVector zero_vector(std::size_t dim);

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& s, const QVector& v);
QVector operator-(const QVector& v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);

/// Positive rescaling of a nonzero vector to coprime integer entries. Two
/// vectors span the same ray iff their primitive forms coincide.
QVector primitive_direction(const QVector& v);

/// Multiplies by the positive lcm of denominators so every entry is integral.
QVector clear_denominators(const QVector& v);

std::string to_string(const QVector& v);

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const QVector& diag);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  QVector row_vector(std::size_t r) const;
  QVector column(std::size_t c) const;

  QMatrix transpose() const;
  Rational trace() const;
  QMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, QMatrix m);
  friend QVector operator*(const QMatrix& m, const QVector& v);

  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;
  /// Lexicographic on (rows, cols, entries); used for element lookup tables.
  friend std::strong_ordering operator<=>(const QMatrix& a, const QMatrix& b);

  const std::vector<Rational>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const QMatrix& m);
std::ostream& operator<<(std::ostream& os, const QMatrix& m);

/// ⟨u, v⟩ = uᵀ · gram · v.
Rational inner(const QMatrix& gram, const QVector& u, const QVector& v);

}  // namespace fanchar
