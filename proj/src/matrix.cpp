#include "fockqha/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace fockqha {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& lhs = a(r, k);
      if (lhs == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (b(k, c) != 0) out(r, c) += lhs * b(k, c);
      }
    }
  }
  return out;
}

Matrix operator*(const Rational& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

Rational Matrix::max_abs_entry() const {
  Rational best = 0;
  for (const auto& x : data_) {
    const Rational a = x < 0 ? Rational(-x) : x;
    if (a > best) best = a;
  }
  return best;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(m(pivot, k), m(rank, k));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m(r, c) == 0) continue;
      const Rational factor = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < cols_; ++k) m(r, k) -= factor * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

Matrix Matrix::power(unsigned exponent) const {
  if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
  Matrix result = identity(rows_);
  for (unsigned k = 0; k < exponent; ++k) result = result * *this;
  return result;
}

Matrix Matrix::compress(const std::vector<std::size_t>& indices) const {
  Matrix out(indices.size(), indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < indices.size(); ++c) out(r, c) = (*this)(indices[r], indices[c]);
  return out;
}

}  // namespace fockqha
