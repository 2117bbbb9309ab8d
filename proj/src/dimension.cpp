#include "fockqha/dimension.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace fockqha {

int dim_exponent(const CartanDatum& datum, const ShiftedDiagram& lambda) {
  const auto k0 = content(datum, lambda)[0];
  const auto e = k0 - lambda.depth();
  if (e < 0) {
    throw std::logic_error("negative 2-exponent for shape " + lambda.to_string() +
                           ": residue pattern is inconsistent");
  }
  return static_cast<int>(e);
}

DimReport dim_pair_report(const CartanDatum& datum, const ResidueSequence& nu_left,
                          const ResidueSequence& nu_right) {
  if (nu_left.size() != nu_right.size()) {
    throw std::invalid_argument("residue sequences must have equal length");
  }
  DimReport report{nu_right.content(datum), 0, {}};
  if (nu_left.content(datum) != report.beta) return report;
  for (auto& lambda : diagrams_with_content(datum, report.beta)) {
    const BigInt k_left = kostka_count(datum, lambda, nu_left);
    if (k_left == 0) continue;
    const BigInt k_right = nu_left == nu_right ? k_left : kostka_count(datum, lambda, nu_right);
    if (k_right == 0) continue;
    const int e = dim_exponent(datum, lambda);
    const BigInt count = k_left * k_right;
    BigInt contribution = pow2(e) * count;
    report.dim += contribution;
    report.terms.push_back({std::move(lambda), e, count, std::move(contribution)});
  }
  return report;
}

BigInt dim_pair(const CartanDatum& datum, const ResidueSequence& nu_left,
                const ResidueSequence& nu_right) {
  return dim_pair_report(datum, nu_left, nu_right).dim;
}

DimReport dim_block(const CartanDatum& datum, const RootElement& beta) {
  if (!beta.is_positive()) throw std::invalid_argument("beta must lie in Q^+");
  DimReport report{beta, 0, {}};
  for (auto& lambda : diagrams_with_content(datum, beta)) {
    const int e = dim_exponent(datum, lambda);
    BigInt st = hook_count(lambda);
    BigInt contribution = pow2(e) * st * st;
    report.dim += contribution;
    report.terms.push_back({std::move(lambda), e, std::move(st), std::move(contribution)});
  }
  return report;
}

BigInt dim_level(const CartanDatum& datum, int n) {
  BigInt total = 0;
  for (const auto& lambda : enumerate_diagrams(n)) {
    const BigInt st = hook_count(lambda);
    total += pow2(dim_exponent(datum, lambda)) * st * st;
  }
  return total;
}

IdentityCheck factorial_identity(const CartanDatum& datum, int n) {
  std::map<RootElement, int> blocks;
  for (const auto& lambda : enumerate_diagrams(n)) blocks.emplace(content(datum, lambda), 0);
  BigInt actual = 0;
  std::ostringstream detail;
  for (const auto& [beta, unused] : blocks) {
    const BigInt dim = dim_block(datum, beta).dim;
    const auto exponent = n - beta[0];
    if (exponent < 0) throw std::logic_error("k_0(beta) exceeds n");
    actual += pow2(static_cast<unsigned>(exponent)) * dim;
    detail << "beta=(" << beta.to_string() << ") dim=" << dim << "; ";
  }
  const BigInt expected = factorial(static_cast<unsigned>(n));
  const bool holds = actual == expected;
  return {holds, expected, actual, holds ? std::string{} : detail.str()};
}

ResidueSequence delta_sequence(const CartanDatum& datum) {
  std::vector<int> e;
  for (int i = 0; i <= datum.ell(); ++i) e.push_back(i);
  for (int i = datum.ell() - 1; i >= 0; --i) e.push_back(i);
  return ResidueSequence(std::move(e));
}

ResidueSequence spherical_sequence(const CartanDatum& datum, int k) {
  if (k < 1 || k > datum.period()) {
    throw std::out_of_range("spherical index k must lie in 1..h");
  }
  const auto nu_delta = delta_sequence(datum);
  return nu_delta.concatenated(nu_delta.prefix(k));
}

}  // namespace fockqha
