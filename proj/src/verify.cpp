#include "fockqha/verify.hpp"

#include "fockqha/crystal.hpp"
#include "fockqha/dimension.hpp"
#include "fockqha/parallel.hpp"
#include "fockqha/reptype.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace fockqha {

std::optional<int> defect_by_simples(const CartanDatum& datum, const RootElement& beta) {
  const RootElement delta = null_root(datum);
  std::optional<int> best;
  RootElement rest = beta;
  for (int j = 0; rest.is_positive(); ++j, rest -= delta) {
    if (count_simples(datum, rest) > 0) best = j;
  }
  return best;
}

std::vector<RootElement> contents_up_to(int rank, int max_height) {
  std::vector<RootElement> out;
  std::vector<RootElement::Coeff> k(rank, 0);
  for (int height = 0; height <= max_height; ++height) {
    std::function<void(int, int)> fill = [&](int i, int left) {
      if (i == rank - 1) {
        k[i] = left;
        out.emplace_back(k);
        return;
      }
      for (int c = left; c >= 0; --c) {
        k[i] = c;
        fill(i + 1, left - c);
      }
    };
    fill(0, height);
  }
  return out;
}

std::vector<std::string> homogeneous_failures(const CartanDatum& datum, const QTable& table, bool inject_fault) {
  std::vector<std::string> failures;
  const int h = datum.period();
  for (int i = 0; i < datum.ell(); ++i) {
    const std::string tag = "_" + std::to_string(i);
    MatrixRep l = build_L(datum, i);
    if (inject_fault && i == 0 && l.n >= 2) l.psi[0](0, 0) += 1;
    const MatrixRep s = build_S(datum, i);

    for (const auto& v : check_relations(datum, l, table)) failures.push_back("L" + tag + ": " + v.to_string());
    for (const auto& v : check_relations(datum, s, table)) failures.push_back("S" + tag + ": " + v.to_string());
    for (const auto& v : degree_defects(datum, l)) failures.push_back("L" + tag + ": " + v.to_string());
    for (const auto& v : degree_defects(datum, s)) failures.push_back("S" + tag + ": " + v.to_string());

    const BigInt expected = binomial(h - 2, i) - binomial(h - 2, i - 1);
    if (BigInt(l.dim) != expected) {
      failures.push_back("L" + tag + ": dim " + std::to_string(l.dim) + " != " + to_decimal(expected));
    }
    for (const auto& [nu, e] : l.idempotents) {
      if (e.rank() > 1) failures.push_back("L" + tag + ": e(" + nu.to_string() + ") eigenspace has dim > 1");
    }
    for (int j = 0; j < datum.rank(); ++j) {
      const MatrixRep r = restrict_last(s, j);
      if (j != i && r.dim != 0) {
        failures.push_back("S" + tag + ": E_" + std::to_string(j) + " is nonzero");
      }
      if (j == i) {
        const MatrixRep base = build_L(datum, i);
        const bool same = r.n == base.n && r.dim == base.dim && r.idempotents == base.idempotents &&
                          r.x == base.x && r.psi == base.psi;
        if (!same) failures.push_back("S" + tag + ": E_" + std::to_string(i) + " differs from L" + tag);
      }
    }
  }
  return failures;
}

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name, const std::function<std::string()>& body) {
  const auto start = Clock::now();
  CheckResult result{name, false, {}, 0.0};
  try {
    result.detail = body();
    result.passed = result.detail.empty();
  } catch (const std::exception& err) {
    result.detail = std::string("exception: ") + err.what();
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace

std::vector<CheckResult> run_verification(const CartanDatum& datum, const VerifyLimits& limits,
                                          const QTable& table) {
  const int max_n = limits.max_n;
  std::vector<CheckResult> results;

  results.push_back(timed("factorial identity", [&] {
    std::ostringstream out;
    for (int n = 0; n <= max_n; ++n) {
      const auto check = factorial_identity(datum, n);
      if (!check) out << "n=" << n << ": " << check.actual << " != " << check.expected << "; ";
    }
    return out.str();
  }));

  results.push_back(timed("hook formula", [&] {
    std::ostringstream out;
    for (const auto& m : parallel::hook_sweep(max_n)) {
      out << "(" << m.shape.to_string() << "): hook " << m.hook << " vs " << m.enumerated << "; ";
    }
    for (int n = 0; n <= max_n; ++n) {
      BigInt total = 0;
      for (const auto& lambda : enumerate_diagrams(n)) {
        const BigInt st = hook_count(lambda);
        total += pow2(static_cast<unsigned>(n - lambda.depth())) * st * st;
      }
      if (total != factorial(static_cast<unsigned>(n))) out << "n=" << n << ": square sum " << total << "; ";
    }
    return out.str();
  }));

  results.push_back(timed("sl2 commutators", [&] {
    std::ostringstream out;
    for (const auto& d : parallel::sl2_sweep(datum, max_n)) {
      out << "(" << d.shape.to_string() << ") i=" << d.i << " j=" << d.j << "; ";
    }
    return out.str();
  }));

  results.push_back(timed("e-word identity", [&] {
    std::ostringstream out;
    for (const auto& m : parallel::e_word_sweep(datum, max_n)) {
      out << "(" << m.shape.to_string() << ") nu=" << m.nu.to_string() << ": " << m.coefficient
          << " != " << m.expected << "; ";
    }
    return out.str();
  }));

  results.push_back(timed("spherical dimensions", [&] {
    std::ostringstream out;
    for (int k = 1; k <= datum.period(); ++k) {
      const auto nu = spherical_sequence(datum, k);
      const BigInt d = dim_pair(datum, nu, nu);
      const BigInt expected = k == datum.period() ? 36 : 12;
      if (d != expected) out << "k=" << k << ": " << d << " != " << expected << "; ";
    }
    return out.str();
  }));

  results.push_back(timed("homogeneous representations", [&] {
    std::ostringstream out;
    for (const auto& line : homogeneous_failures(datum, table, limits.inject_fault)) out << line << "; ";
    return out.str();
  }));

  results.push_back(timed("simple counts", [&] {
    std::ostringstream out;
    const auto delta = null_root(datum);
    if (count_simples(datum, delta) != static_cast<std::size_t>(datum.ell())) {
      out << "|RP(delta)| = " << count_simples(datum, delta) << "; ";
    }
    for (const auto& beta : contents_up_to(datum.rank(), max_n)) {
      const bool simples = count_simples(datum, beta) > 0;
      const bool nonzero = dim_block(datum, beta).dim > 0;
      if (simples != nonzero) out << "support differs at (" << beta.to_string() << "); ";
    }
    return out.str();
  }));

  results.push_back(timed("defect oracle", [&] {
    std::ostringstream out;
    for (const auto& beta : contents_up_to(datum.rank(), max_n)) {
      const auto closed = defect(datum, beta);
      const auto oracle = defect_by_simples(datum, beta);
      if (closed != oracle) out << "(" << beta.to_string() << "); ";
    }
    return out.str();
  }));

  results.push_back(timed("Brauer reconciliation", [&] {
    const auto r = reconcile_delta_dim(datum);
    if (r) return std::string();
    return "formula " + to_decimal(r.formula_side) + " vs Brauer " + to_decimal(r.brauer_side);
  }));

  return results;
}

}  // namespace fockqha
