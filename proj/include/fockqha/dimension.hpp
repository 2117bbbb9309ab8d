#pragma once

// Closed dimension formulas for the finite quiver Hecke algebras R^{Lambda_0}(beta):
//
//   dim e(nu') R(n) e(nu) = sum_lambda 2^{k_0(lambda) - l(lambda)} K(lambda,nu') K(lambda,nu)
//   dim R(beta)           = sum_{content(lambda) = beta} 2^{k_0 - l} |ST(lambda)|^2
//
// where k_0(lambda) = -<d, wt(lambda)> counts the 0-boxes of lambda.

#include "fockqha/cartan.hpp"
#include "fockqha/integer.hpp"
#include "fockqha/shifted.hpp"

#include <string>
#include <vector>

namespace fockqha {

struct DimTerm {
  ShiftedDiagram shape;
  int exponent;
  /// |ST(lambda)| for a block, K(lambda,nu') K(lambda,nu) for a pair.
  BigInt count;
  BigInt contribution;
};

struct DimReport {
  RootElement beta;
  BigInt dim;
  std::vector<DimTerm> terms;
};

/// k_0(lambda) - l(lambda). Throws std::logic_error if negative.
int dim_exponent(const CartanDatum& datum, const ShiftedDiagram& lambda);

/// Zero when nu and nu' have different content. Throws std::invalid_argument
/// when the lengths differ.
BigInt dim_pair(const CartanDatum& datum, const ResidueSequence& nu_left,
                const ResidueSequence& nu_right);
DimReport dim_pair_report(const CartanDatum& datum, const ResidueSequence& nu_left,
                          const ResidueSequence& nu_right);

DimReport dim_block(const CartanDatum& datum, const RootElement& beta);
BigInt dim_level(const CartanDatum& datum, int n);

struct IdentityCheck {
  bool holds;
  BigInt expected;
  BigInt actual;
  std::string detail;
  explicit operator bool() const noexcept { return holds; }
};

/// n! == sum_{|beta| = n} 2^{n - k_0(beta)} dim R(beta), beta grouped from the
/// contents of shifted diagrams of size n.
IdentityCheck factorial_identity(const CartanDatum& datum, int n);

/// nu^k: nu_delta followed by its own first k labels, 1 <= k <= h.
ResidueSequence spherical_sequence(const CartanDatum& datum, int k);
/// 0 1 ... l ... 1 0.
ResidueSequence delta_sequence(const CartanDatum& datum);

}  // namespace fockqha
