#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "triplekit/scalar.hpp"

namespace triplekit {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;

  /// this * v
  Vector apply(const Vector& v) const;

  /// this * v accumulated into out with coefficient a (out += a * this * v).
  void apply_add(const Scalar& a, const Vector& v, Vector& out) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix m);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Block matrix [[a, b], [c, d]]; shapes must tile.
Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

}  // namespace triplekit
