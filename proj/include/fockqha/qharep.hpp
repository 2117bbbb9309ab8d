#pragma once

// Matrix models of the homogeneous modules L_i, S_i over the cyclotomic
// quiver Hecke algebra at level Lambda_0, and a checker for its defining
// relations.

#include "fockqha/cartan.hpp"
#include "fockqha/matrix.hpp"
#include "fockqha/qpoly.hpp"
#include "fockqha/shifted.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fockqha {

/// Default Q_{i,j}: u^{-a_ij} + v^{-a_ji} off the diagonal, 0 on it.
QPoly q_polynomial(const CartanDatum& datum, int i, int j);

/// One monomial t * u^p * v^q of a Q_{i,j} override.
struct QTerm {
  int p = 0;
  int q = 0;
  BigInt t;
};

class QTable {
 public:
  explicit QTable(const CartanDatum& datum);

  /// Overrides keyed by (i, j). An override given for (i, j) alone is
  /// mirrored to (j, i). Throws std::invalid_argument on any violation of
  /// symmetry, weight homogeneity, the leading coefficient or Q_{i,i} = 0.
  static QTable with_overrides(const CartanDatum& datum,
                               const std::map<std::pair<int, int>, std::vector<QTerm>>& overrides);
  /// JSON object {"i,j": [[p, q, t], ...]}; t may be a number or a decimal string.
  static QTable from_json(const CartanDatum& datum, const std::string& text);
  static QTable from_file(const CartanDatum& datum, const std::string& path);

  const QPoly& operator()(int i, int j) const;
  int rank() const noexcept { return rank_; }

 private:
  int rank_ = 0;
  std::vector<QPoly> table_;
};

/// Throws std::invalid_argument if the table breaks any structural constraint.
void validate_q_table(const CartanDatum& datum, const QTable& table);

struct MatrixRep {
  int ell = 0;
  int n = 0;
  std::size_t dim = 0;
  /// Empty for hand-built representations.
  std::vector<StandardTableau> basis;
  /// Absent sequences act by zero.
  std::map<ResidueSequence, Matrix> idempotents;
  /// x[k-1] is x_k.
  std::vector<Matrix> x;
  /// psi[l-1] is psi_l.
  std::vector<Matrix> psi;

  Matrix e(const ResidueSequence& nu) const;
  /// Residue sequence carried by basis vector b; needs diagonal 0/1 idempotents.
  std::optional<ResidueSequence> label(std::size_t b) const;
};

/// lambda(i) = (h - i - 1, i).
ShiftedDiagram homogeneous_shape(const CartanDatum& datum, int i);

/// L_i on ST(lambda(i)), n = h - 1. Throws std::out_of_range unless 0 <= i < l.
MatrixRep build_L(const CartanDatum& datum, int i);
/// S_i: L_i extended by the label i; x_h and psi_{h-1} act by zero.
MatrixRep build_S(const CartanDatum& datum, int i);

/// e(beta, j) rep on the basis vectors whose residue sequence ends in j.
/// Throws std::invalid_argument if n = 0 or an idempotent is not diagonal.
MatrixRep restrict_last(const MatrixRep& rep, int j);

struct Violation {
  std::string relation;
  ResidueSequence nu;
  /// Which generator indices, e.g. "k=2 l=3".
  std::string where;
  Rational max_residual;

  std::string to_string() const;
};

std::vector<Violation> check_relations(const CartanDatum& datum, const MatrixRep& rep,
                                       const QTable& table);
std::vector<Violation> check_relations(const CartanDatum& datum, const MatrixRep& rep);

enum class Generator { E, X, Psi };

/// index is k for x_k and l for psi_l (1-based); ignored for e.
int generator_degree(const CartanDatum& datum, Generator gen, int index, const ResidueSequence& nu);

/// Nonzero blocks psi_l e(nu) of nonzero degree; empty on a homogeneous module.
std::vector<Violation> degree_defects(const CartanDatum& datum, const MatrixRep& rep);

}  // namespace fockqha
