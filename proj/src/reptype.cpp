#include "fockqha/reptype.hpp"

#include <stdexcept>

#include "fockqha/crystal.hpp"
#include "fockqha/dimension.hpp"

namespace fockqha {

std::string_view to_string(TypeKind kind) {
  switch (kind) {
    case TypeKind::ZeroAlgebra: return "ZeroAlgebra";
    case TypeKind::Simple: return "Simple";
    case TypeKind::FiniteNotSemisimple: return "FiniteNotSemisimple";
    case TypeKind::Wild: return "Wild";
  }
  return "?";
}

std::optional<int> defect(const CartanDatum& datum, const RootElement& beta) {
  if (beta.size() != datum.rank()) throw std::invalid_argument("beta rank does not match datum");
  if (!beta.is_positive()) throw std::invalid_argument("beta must lie in Q^+");
  if (count_simples(datum, beta) == 0) return std::nullopt;
  const auto numerator = 2 * beta[0] - bilinear(datum, beta, beta);
  if (numerator < 0 || numerator % 4 != 0) {
    throw std::logic_error("defect formula gives a non-integral or negative value for beta=(" +
                           beta.to_string() + ")");
  }
  return static_cast<int>(numerator / 4);
}

TypeVerdict classify(const CartanDatum& datum, const RootElement& beta) {
  const auto k = defect(datum, beta);
  if (!k) return {TypeKind::ZeroAlgebra, std::nullopt, "Lambda0 - beta is not a weight of V(Lambda0)"};
  switch (*k) {
    case 0: return {TypeKind::Simple, k, "simple algebra"};
    case 1:
      return {TypeKind::FiniteNotSemisimple, k,
              "Brauer tree algebra; stable AR quiver ZA_" + std::to_string(2 * datum.ell()) +
                  "/<tau^" + std::to_string(datum.ell()) + ">"};
    default: return {TypeKind::Wild, k, "wild"};
  }
}

std::vector<BigInt> BrauerData::projective_dims() const {
  std::vector<BigInt> out(simple_dims.size(), 0);
  for (std::size_t i = 0; i < cartan.size(); ++i)
    for (std::size_t j = 0; j < cartan.size(); ++j) out[i] += cartan[i][j] * simple_dims[j];
  return out;
}

BrauerData brauer_data(const CartanDatum& datum) {
  const int ell = datum.ell();
  const int h = datum.period();
  BrauerData data{ell, {}, 2, {}, std::vector<std::vector<int>>(ell, std::vector<int>(ell, 0))};
  for (int i = 0; i < ell; ++i) {
    data.edges.push_back("S" + std::to_string(i));
    data.simple_dims.push_back(binomial(h - 2, i) - binomial(h - 2, i - 1));
    for (int j = 0; j < ell; ++j) {
      if (i == j) data.cartan[i][j] = i == 0 ? 3 : 2;
      else if (i - j == 1 || j - i == 1) data.cartan[i][j] = 1;
    }
  }
  return data;
}

Reconciliation reconcile_delta_dim(const CartanDatum& datum) {
  const BigInt formula = dim_block(datum, null_root(datum)).dim;
  const BrauerData data = brauer_data(datum);
  const auto projective = data.projective_dims();
  BigInt brauer = 0;
  for (std::size_t i = 0; i < projective.size(); ++i) brauer += data.simple_dims[i] * projective[i];
  return {formula == brauer, formula, brauer};
}

}  // namespace fockqha
