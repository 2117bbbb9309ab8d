#pragma once

// Integer polynomials in the three commuting variables u, v, w used by the
// quiver Hecke relations: Q_{i,j}(u, v) and its divided difference in u, w.

#include "fockqha/integer.hpp"
#include "fockqha/matrix.hpp"

#include <array>
#include <map>
#include <string>

namespace fockqha {

class QPoly {
 public:
  /// Powers of (u, v, w).
  using Exponents = std::array<int, 3>;
  using Terms = std::map<Exponents, BigInt>;

  QPoly() = default;
  static QPoly constant(const BigInt& c);
  static QPoly monomial(const BigInt& c, int pu, int pv, int pw = 0);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(int pu, int pv, int pw = 0) const;
  void add_term(const BigInt& c, const Exponents& e);

  /// Q(v, u); w untouched.
  QPoly swap_uv() const;
  /// Q(w, v); only meaningful for polynomials free of w.
  QPoly substitute_u_by_w() const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  bool operator==(const QPoly&) const = default;

  /// Evaluation at pairwise commuting square matrices.
  Matrix evaluate(const Matrix& u, const Matrix& v, const Matrix& w) const;

  /// "u^2 + v", "-3*u*w^2", "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// (Q(u,v) - Q(w,v)) / (u - w) by long division in u. Throws std::logic_error
/// on a nonzero remainder.
QPoly divided_difference(const QPoly& q);

}  // namespace fockqha
