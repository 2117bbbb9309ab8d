#pragma once

// Representation type of R^{Lambda_0}(beta) through the decomposition
// Lambda_0 - beta = kappa - k delta with kappa in the Weyl orbit of Lambda_0,
// and the Brauer tree data of R^{Lambda_0}(delta).

#include "fockqha/cartan.hpp"
#include "fockqha/integer.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fockqha {

/// No Tame alternative: that type never occurs for these algebras.
enum class TypeKind { ZeroAlgebra, Simple, FiniteNotSemisimple, Wild };

std::string_view to_string(TypeKind kind);

struct TypeVerdict {
  TypeKind kind;
  std::optional<int> defect;
  std::string note;
};

/// k with Lambda_0 - beta = kappa - k delta, or nullopt if Lambda_0 - beta is not
/// a weight of V(Lambda_0). Uses k = (2 k_0 - (beta|beta)) / 4; throws
/// std::logic_error if that value is not a non-negative integer on a supported beta.
std::optional<int> defect(const CartanDatum& datum, const RootElement& beta);

TypeVerdict classify(const CartanDatum& datum, const RootElement& beta);

struct BrauerData {
  int ell;
  /// Edge labels along the line, S_0 first; the exceptional vertex of
  /// multiplicity exceptional_multiplicity sits at the S_0 end.
  std::vector<std::string> edges;
  int exceptional_multiplicity;
  std::vector<BigInt> simple_dims;
  /// cartan[i][j] = [F_i L_i : S_j].
  std::vector<std::vector<int>> cartan;

  /// dim P_i = sum_j cartan[i][j] dim S_j.
  std::vector<BigInt> projective_dims() const;
};

BrauerData brauer_data(const CartanDatum& datum);

struct Reconciliation {
  bool holds;
  /// dim R(delta) from the shifted-tableau sum.
  BigInt formula_side;
  /// sum_i dim S_i dim P_i from the Brauer data.
  BigInt brauer_side;
  explicit operator bool() const noexcept { return holds; }
};

Reconciliation reconcile_delta_dim(const CartanDatum& datum);

}  // namespace fockqha
