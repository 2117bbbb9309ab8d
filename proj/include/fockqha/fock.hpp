#pragma once

// Fock space on shifted diagrams with the Chevalley action of type A^(2)_{2l}
// given by adding and removing boxes.

#include "fockqha/cartan.hpp"
#include "fockqha/integer.hpp"
#include "fockqha/shifted.hpp"

#include <map>
#include <string>
#include <vector>

namespace fockqha {

/// Finitely supported integer combination of basis vectors |lambda>.
class FockVector {
 public:
  using Terms = std::map<ShiftedDiagram, BigInt>;

  FockVector() = default;
  static FockVector basis(ShiftedDiagram lambda);
  /// |0>, the empty diagram.
  static FockVector vacuum() { return basis(ShiftedDiagram{}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const ShiftedDiagram& lambda) const;

  /// Adds c |lambda>, erasing the term if it cancels.
  void add(const ShiftedDiagram& lambda, const BigInt& c);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const BigInt& c, const FockVector& v);

  bool operator==(const FockVector&) const = default;

  /// "2*(3,1) + (4)"; the zero vector is "0" and |0> is "()".
  std::string to_string() const;

 private:
  Terms terms_;
};

FockVector apply_f(const CartanDatum& datum, int i, const FockVector& v);
/// Removal of an i-box carries multiplicity 2 when i = 0 and the depth is kept.
FockVector apply_e(const CartanDatum& datum, int i, const FockVector& v);

Weight weight(const CartanDatum& datum, const ShiftedDiagram& lambda);

/// Coefficient c with e_{nu_1} ... e_{nu_n} |lambda> = c |0> (e_{nu_n} acts first).
/// Throws std::invalid_argument if |nu| != |lambda| and std::logic_error if the
/// result is supported away from |0>.
BigInt apply_e_word(const CartanDatum& datum, const ResidueSequence& nu,
                    const ShiftedDiagram& lambda);

/// f_{nu_n} ... f_{nu_1} |0> (f_{nu_1} acts first).
FockVector apply_f_word(const CartanDatum& datum, const ResidueSequence& nu);

struct CommutatorDefect {
  ShiftedDiagram shape;
  int i;
  int j;
};

/// Pairs (i, j) for which (e_i f_j - f_j e_i)|lambda> differs from
/// delta_ij <h_i, wt(lambda)> |lambda>.
std::vector<CommutatorDefect> commutator_defects(const CartanDatum& datum,
                                                 const ShiftedDiagram& lambda);

/// Serial sweep of commutator_defects over every lambda with |lambda| <= max_n.
std::vector<CommutatorDefect> sl2_sweep(const CartanDatum& datum, int max_n);

}  // namespace fockqha
