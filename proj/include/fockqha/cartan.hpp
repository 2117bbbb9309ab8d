#pragma once

// Cartan datum of affine type A^(2)_{2l}, its root lattice and the level-one
// weights Lambda_0 - beta on which every algorithm in this library operates.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fockqha {

class CartanDatum {
 public:
  /// Throws std::invalid_argument unless ell >= 1.
  explicit CartanDatum(int ell);

  int ell() const noexcept { return ell_; }
  /// |I| = ell + 1.
  int rank() const noexcept { return ell_ + 1; }
  /// h = 2 ell + 1, the length of the residue pattern and |delta|.
  int period() const noexcept { return 2 * ell_ + 1; }

  int a(int i, int j) const;
  int d(int i) const;
  /// (alpha_i | alpha_j) = d_i a_ij.
  int form(int i, int j) const { return d(i) * a(i, j); }

  void check_index(int i) const;

  bool operator==(const CartanDatum& other) const noexcept { return ell_ == other.ell_; }

 private:
  int ell_;
  std::vector<int> matrix_;
  std::vector<int> symmetrizer_;
};

/// Element of the root lattice sum_i k_i alpha_i.
class RootElement {
 public:
  using Coeff = std::int64_t;

  RootElement() = default;
  explicit RootElement(std::vector<Coeff> coeffs) : k_(std::move(coeffs)) {}

  static RootElement zero(int rank) { return RootElement(std::vector<Coeff>(rank, 0)); }
  static RootElement simple(int rank, int i);

  const std::vector<Coeff>& coeffs() const noexcept { return k_; }
  int size() const noexcept { return static_cast<int>(k_.size()); }
  Coeff operator[](int i) const { return k_.at(i); }
  Coeff& operator[](int i) { return k_.at(i); }

  Coeff height() const;
  /// All coefficients non-negative, i.e. the element lies in Q^+.
  bool is_positive() const;

  RootElement& operator+=(const RootElement& other);
  RootElement& operator-=(const RootElement& other);
  friend RootElement operator+(RootElement lhs, const RootElement& rhs) { return lhs += rhs; }
  friend RootElement operator-(RootElement lhs, const RootElement& rhs) { return lhs -= rhs; }
  friend RootElement operator*(Coeff scale, RootElement r) {
    for (auto& c : r.k_) c *= scale;
    return r;
  }

  auto operator<=>(const RootElement&) const = default;

  /// "2,2,1"
  std::string to_string() const;

 private:
  std::vector<Coeff> k_;
};

/// Level-one weight Lambda_0 - sum_i c_i alpha_i.
class Weight {
 public:
  Weight() = default;
  explicit Weight(RootElement deficit) : c_(std::move(deficit)) {}

  static Weight lambda0(int rank) { return Weight(RootElement::zero(rank)); }

  /// The c_i, i.e. beta when the weight is Lambda_0 - beta.
  const RootElement& deficit() const noexcept { return c_; }

  auto operator<=>(const Weight&) const = default;

  /// "L0 - 4a0 - 2a1 - a2"
  std::string to_string() const;

 private:
  RootElement c_;
};

/// <h_i, w>.
std::int64_t pairing_h(const CartanDatum& datum, int i, const Weight& w);
/// <d, w>.
std::int64_t pairing_d(const Weight& w);
/// (x | y) on the root lattice.
std::int64_t bilinear(const CartanDatum& datum, const RootElement& x, const RootElement& y);
/// r_i w = w - <h_i, w> alpha_i.
Weight reflect(const CartanDatum& datum, int i, const Weight& w);
/// delta = 2 alpha_0 + ... + 2 alpha_{l-1} + alpha_l.
RootElement null_root(const CartanDatum& datum);

}  // namespace fockqha
