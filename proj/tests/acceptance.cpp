// Acceptance criteria: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "fockqha/crystal.hpp"
#include "fockqha/dimension.hpp"
#include "fockqha/parallel.hpp"
#include "fockqha/qharep.hpp"
#include "fockqha/reptype.hpp"
#include "fockqha/shifted.hpp"
#include "fockqha/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace fockqha;

namespace {

constexpr int kRanks[] = {1, 2, 3};

// Runtime targets in seconds; absent means no target.
constexpr double kFactorialLimit = 10.0;
constexpr double kHomogeneousLimit = 5.0;
constexpr double kDefectLimit = 30.0;

struct Criterion {
  int id;
  std::string name;
  std::optional<double> limit;
  std::function<void(std::ostringstream&)> body;
};

void factorial_identity_criterion(std::ostringstream& fail) {
  for (const int ell : kRanks) {
    const CartanDatum datum(ell);
    for (int n = 0; n <= 10; ++n) {
      const auto check = factorial_identity(datum, n);
      if (!check) fail << "l=" << ell << " n=" << n << ": " << check.actual << " != " << check.expected << "; ";
    }
  }
}

void hook_formula_criterion(std::ostringstream& fail) {
  for (const auto& m : parallel::hook_sweep(11)) {
    fail << "(" << m.shape.to_string() << ") hook " << m.hook << " vs " << m.enumerated << "; ";
  }
  for (int n = 0; n <= 10; ++n) {
    BigInt total = 0;
    for (const auto& lambda : enumerate_diagrams(n)) {
      const BigInt st = enumerate_standard(lambda).size();
      total += pow2(static_cast<unsigned>(n - lambda.depth())) * st * st;
    }
    if (total != factorial(static_cast<unsigned>(n))) fail << "n=" << n << ": square sum " << total << "; ";
  }
}

void spherical_criterion(std::ostringstream& fail) {
  for (const int ell : kRanks) {
    const CartanDatum datum(ell);
    const int h = datum.period();
    for (int k = 1; k <= h; ++k) {
      const auto nu = spherical_sequence(datum, k);
      const BigInt d = dim_pair(datum, nu, nu);
      const BigInt expected = k == h ? 36 : 12;
      if (d != expected) fail << "l=" << ell << " k=" << k << ": " << d << "; ";
    }
  }
}

void homogeneous_criterion(std::ostringstream& fail) {
  for (const int ell : kRanks) {
    const CartanDatum datum(ell);
    for (const auto& line : homogeneous_failures(datum, QTable(datum))) fail << "l=" << ell << " " << line << "; ";
  }
}

void fock_criterion(std::ostringstream& fail) {
  for (const int ell : kRanks) {
    const CartanDatum datum(ell);
    for (const auto& d : parallel::sl2_sweep(datum, 9)) {
      fail << "l=" << ell << " (" << d.shape.to_string() << ") i=" << d.i << " j=" << d.j << "; ";
    }
    for (const auto& m : parallel::e_word_sweep(datum, 8)) {
      fail << "l=" << ell << " (" << m.shape.to_string() << ") nu=" << m.nu.to_string() << "; ";
    }
  }
}

void crystal_criterion(std::ostringstream& fail) {
  for (const int ell : kRanks) {
    const CartanDatum datum(ell);
    const auto n = count_simples(datum, null_root(datum));
    if (n != static_cast<std::size_t>(ell)) fail << "l=" << ell << ": |RP(delta)| = " << n << "; ";
    for (const auto& beta : contents_up_to(datum.rank(), 10)) {
      if ((count_simples(datum, beta) > 0) != (dim_block(datum, beta).dim > 0)) {
        fail << "l=" << ell << " support differs at (" << beta.to_string() << "); ";
      }
    }
  }
  const auto gallery = wall_gallery(CartanDatum(2));
  const std::vector<std::string> names = {"Y1", "Y2", "Y3", "Y4", "Y5"};
  const std::vector<std::vector<int>> parts = {{1, 1}, {3, 3, 1}, {7, 5}, {5, 5, 1}, {6, 1}};
  const std::vector<bool> strict = {false, false, true, true, true};
  const std::vector<bool> restricted = {false, false, false, true, true};
  const std::vector<std::string> weights = {"L0 - 2a0", "L0 - 3a0 - 2a1 - 2a2", "L0 - 5a0 - 5a1 - 2a2",
                                            "L0 - 5a0 - 4a1 - 2a2", "L0 - 4a0 - 2a1 - a2"};
  if (gallery.size() != names.size()) {
    fail << "gallery has " << gallery.size() << " walls; ";
    return;
  }
  for (std::size_t k = 0; k < gallery.size(); ++k) {
    const auto& g = gallery[k];
    const bool ok = g.name == names[k] && g.partition.parts() == parts[k] && g.strict == strict[k] &&
                    g.restricted == restricted[k] && g.weight.to_string() == weights[k];
    if (!ok) fail << names[k] << " mismatch; ";
  }
}

void defect_criterion(std::ostringstream& fail) {
  for (const int ell : kRanks) {
    const CartanDatum datum(ell);
    for (const auto& beta : contents_up_to(datum.rank(), 12)) {
      if (count_simples(datum, beta) == 0) continue;
      const auto closed = defect(datum, beta);
      const auto oracle = defect_by_simples(datum, beta);
      if (closed != oracle) fail << "l=" << ell << " beta=(" << beta.to_string() << "); ";
    }
    const RootElement delta = null_root(datum);
    if (classify(datum, delta).kind != TypeKind::FiniteNotSemisimple) fail << "l=" << ell << " delta; ";
    for (const int k : {2, 3}) {
      if (classify(datum, k * delta).kind != TypeKind::Wild) fail << "l=" << ell << " " << k << "delta; ";
    }
    if (classify(datum, RootElement::simple(datum.rank(), 0)).kind != TypeKind::Simple) fail << "l=" << ell << " alpha0; ";
  }
}

void brauer_criterion(std::ostringstream& fail) {
  const int expected[] = {3, 15, 133};
  for (const int ell : kRanks) {
    const auto r = reconcile_delta_dim(CartanDatum(ell));
    if (!r || r.formula_side != expected[ell - 1]) {
      fail << "l=" << ell << ": formula " << r.formula_side << " Brauer " << r.brauer_side << "; ";
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "factorial identity, l in {1,2,3}, n <= 10", kFactorialLimit, factorial_identity_criterion},
      {2, "hook formula n <= 11 and square sum n <= 10", std::nullopt, hook_formula_criterion},
      {3, "spherical dimensions 12 and 36", std::nullopt, spherical_criterion},
      {4, "homogeneous representations L_i, S_i", kHomogeneousLimit, homogeneous_criterion},
      {5, "Fock sl2 checks n <= 9 and e-word identity n <= 8", std::nullopt, fock_criterion},
      {6, "simple counts, Y1-Y5 gallery, support agreement", std::nullopt, crystal_criterion},
      {7, "defect oracle |beta| <= 12 and classification", kDefectLimit, defect_criterion},
      {8, "Brauer reconciliation 3, 15, 133", std::nullopt, brauer_criterion},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream fail;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(fail);
    } catch (const std::exception& e) {
      fail << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit && seconds >= *c.limit) fail << "runtime " << seconds << " s exceeds " << *c.limit << " s; ";
    const std::string detail = fail.str();
    const bool pass = detail.empty();
    failures += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << seconds << " s";
    if (c.limit) std::cout << ", limit " << *c.limit << " s";
    std::cout << ")";
    if (!pass) std::cout << " -- " << detail;
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
