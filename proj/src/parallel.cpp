#include "fockqha/parallel.hpp"

#include "fockqha/dimension.hpp"

#include <omp.h>

#include <set>

namespace fockqha {

namespace {

std::vector<ShiftedDiagram> diagrams_up_to(int max_n) {
  std::vector<ShiftedDiagram> all;
  for (int n = 0; n <= max_n; ++n) {
    auto level = enumerate_diagrams(n);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

BigInt level_term(const CartanDatum& datum, const ShiftedDiagram& lambda) {
  const BigInt st = hook_count(lambda);
  return pow2(dim_exponent(datum, lambda)) * st * st;
}

std::vector<HookMismatch> hook_check(const ShiftedDiagram& lambda) {
  const BigInt hook = hook_count(lambda);
  const BigInt enumerated = enumerate_standard(lambda).size();
  if (hook == enumerated) return {};
  return {{lambda, hook, enumerated}};
}

std::vector<EWordMismatch> e_word_check(const CartanDatum& datum, const ShiftedDiagram& lambda) {
  std::set<ResidueSequence> sequences;
  for (const auto& t : enumerate_standard(lambda)) sequences.insert(residue_sequence(datum, t));
  const BigInt scale = pow2(dim_exponent(datum, lambda));
  std::vector<EWordMismatch> out;
  for (const auto& nu : sequences) {
    const BigInt coefficient = apply_e_word(datum, nu, lambda);
    const BigInt expected = scale * kostka_count(datum, lambda, nu);
    if (coefficient != expected) out.push_back({lambda, nu, coefficient, expected});
  }
  return out;
}

// Per-shape results land in their own slot, then concatenate in shape order.
template <typename Result, typename Fn>
std::vector<Result> run_each(const std::vector<ShiftedDiagram>& shapes, Fn fn, bool threaded) {
  std::vector<std::vector<Result>> slots(shapes.size());
  const auto count = static_cast<long>(shapes.size());
  if (threaded) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) slots[k] = fn(shapes[k]);
  } else {
    for (long k = 0; k < count; ++k) slots[k] = fn(shapes[k]);
  }
  std::vector<Result> out;
  for (auto& slot : slots) out.insert(out.end(), slot.begin(), slot.end());
  return out;
}

}  // namespace

namespace serial {

BigInt dim_level(const CartanDatum& datum, int n) { return fockqha::dim_level(datum, n); }

std::vector<CommutatorDefect> sl2_sweep(const CartanDatum& datum, int max_n) {
  return fockqha::sl2_sweep(datum, max_n);
}

std::vector<HookMismatch> hook_sweep(int max_n) {
  return run_each<HookMismatch>(diagrams_up_to(max_n), hook_check, false);
}

std::vector<EWordMismatch> e_word_sweep(const CartanDatum& datum, int max_n) {
  return run_each<EWordMismatch>(
      diagrams_up_to(max_n), [&](const ShiftedDiagram& lambda) { return e_word_check(datum, lambda); }, false);
}

}  // namespace serial

namespace parallel {

int max_threads() { return omp_get_max_threads(); }

BigInt dim_level(const CartanDatum& datum, int n) {
  const auto shapes = enumerate_diagrams(n);
  std::vector<BigInt> terms(shapes.size());
  const auto count = static_cast<long>(shapes.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) terms[k] = level_term(datum, shapes[k]);
  BigInt total = 0;
  for (const auto& t : terms) total += t;
  return total;
}

std::vector<CommutatorDefect> sl2_sweep(const CartanDatum& datum, int max_n) {
  return run_each<CommutatorDefect>(
      diagrams_up_to(max_n), [&](const ShiftedDiagram& lambda) { return commutator_defects(datum, lambda); }, true);
}

std::vector<HookMismatch> hook_sweep(int max_n) {
  return run_each<HookMismatch>(diagrams_up_to(max_n), hook_check, true);
}

std::vector<EWordMismatch> e_word_sweep(const CartanDatum& datum, int max_n) {
  return run_each<EWordMismatch>(
      diagrams_up_to(max_n), [&](const ShiftedDiagram& lambda) { return e_word_check(datum, lambda); }, true);
}

}  // namespace parallel

}  // namespace fockqha
