#pragma once

// Sweeps over all shifted diagrams up to a size bound. Each kernel exists in
// a serial reference form and an OpenMP form; both return identical results
// in identical order.

#include "fockqha/cartan.hpp"
#include "fockqha/fock.hpp"
#include "fockqha/integer.hpp"
#include "fockqha/shifted.hpp"

#include <vector>

namespace fockqha {

/// A shape whose hook count disagrees with the enumerated tableaux.
struct HookMismatch {
  ShiftedDiagram shape;
  BigInt hook;
  BigInt enumerated;
};

/// e-word coefficient differing from 2^{k_0 - l} K(lambda, nu).
struct EWordMismatch {
  ShiftedDiagram shape;
  ResidueSequence nu;
  BigInt coefficient;
  BigInt expected;
};

namespace serial {

BigInt dim_level(const CartanDatum& datum, int n);
std::vector<CommutatorDefect> sl2_sweep(const CartanDatum& datum, int max_n);
std::vector<HookMismatch> hook_sweep(int max_n);
/// nu runs over the residue sequences of ST(lambda), every lambda with |lambda| <= max_n.
std::vector<EWordMismatch> e_word_sweep(const CartanDatum& datum, int max_n);

}  // namespace serial

namespace parallel {

int max_threads();
BigInt dim_level(const CartanDatum& datum, int n);
std::vector<CommutatorDefect> sl2_sweep(const CartanDatum& datum, int max_n);
std::vector<HookMismatch> hook_sweep(int max_n);
std::vector<EWordMismatch> e_word_sweep(const CartanDatum& datum, int max_n);

}  // namespace parallel

}  // namespace fockqha
