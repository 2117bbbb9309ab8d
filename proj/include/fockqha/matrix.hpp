#pragma once

#include "fockqha/integer.hpp"

#include <cstddef>
#include <vector>

namespace fockqha {

/// Dense matrix over exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, Matrix m);

  bool operator==(const Matrix&) const = default;

  bool is_zero() const;
  bool is_diagonal() const;
  /// Largest |entry|; zero for an empty matrix.
  Rational max_abs_entry() const;
  std::size_t rank() const;
  Matrix power(unsigned exponent) const;
  /// Rows and columns restricted to the given indices, in order.
  Matrix compress(const std::vector<std::size_t>& indices) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace fockqha
