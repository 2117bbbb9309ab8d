#pragma once

// Consistency battery bundling every module: each check is an exact identity
// between two independent computations.

#include "fockqha/cartan.hpp"
#include "fockqha/qharep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fockqha {

/// max{ j : count_simples(beta - j delta) > 0 }, nullopt when no j qualifies.
std::optional<int> defect_by_simples(const CartanDatum& datum, const RootElement& beta);

/// Every beta in Q^+ with |beta| <= max_height, ordered by height then coefficients.
std::vector<RootElement> contents_up_to(int rank, int max_height);

struct VerifyLimits {
  int max_n = 8;
  /// Corrupts one psi entry of L_0 before the relation check.
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<CheckResult> run_verification(const CartanDatum& datum, const VerifyLimits& limits,
                                          const QTable& table);

/// Relation, dimension, eigenspace and restriction checks on L_i and S_i.
/// Returns human-readable failure lines; empty when everything holds.
std::vector<std::string> homogeneous_failures(const CartanDatum& datum, const QTable& table,
                                              bool inject_fault = false);

}  // namespace fockqha
