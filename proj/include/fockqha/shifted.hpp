#pragma once

// Shifted Young diagrams, their standard tableaux and residue combinatorics.
// Boxes use 1-based (row, column) coordinates; row i starts in column i.

#include "fockqha/cartan.hpp"
#include "fockqha/integer.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fockqha {

struct Box {
  int row;
  int col;
  auto operator<=>(const Box&) const = default;
};

/// Strict partition lambda_1 > lambda_2 > ... > lambda_l > 0.
class ShiftedDiagram {
 public:
  ShiftedDiagram() = default;
  /// Throws std::invalid_argument unless parts are positive and strictly decreasing.
  explicit ShiftedDiagram(std::vector<int> parts);

  /// Comma-separated parts, "4,1". The empty string denotes the empty diagram.
  static ShiftedDiagram parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int depth() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  bool contains(Box b) const;
  /// Row-major.
  std::vector<Box> boxes() const;
  /// Box positions at which adding keeps a shifted diagram, top row first.
  std::vector<Box> addable_boxes() const;
  std::vector<Box> removable_boxes() const;
  ShiftedDiagram with_box(Box b) const;
  ShiftedDiagram without_box(Box b) const;

  std::string to_string() const;

  auto operator<=>(const ShiftedDiagram&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

class ResidueSequence {
 public:
  ResidueSequence() = default;
  explicit ResidueSequence(std::vector<int> entries) : entries_(std::move(entries)) {}

  /// Comma-separated labels, "0,1,2,1,0".
  static ResidueSequence parse(std::string_view text);

  const std::vector<int>& entries() const noexcept { return entries_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }
  /// 0-based.
  int operator[](int k) const { return entries_.at(k); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Multiset of labels as an element of Q^+; throws if a label is outside I.
  RootElement content(const CartanDatum& datum) const;
  ResidueSequence appended(int label) const;
  ResidueSequence concatenated(const ResidueSequence& tail) const;
  ResidueSequence prefix(int length) const;
  ResidueSequence without_last() const;
  /// s_l with 1-based l: exchanges entries l and l+1.
  ResidueSequence swapped(int l) const;

  std::string to_string() const;

  auto operator<=>(const ResidueSequence&) const = default;

 private:
  std::vector<int> entries_;
};

/// Standard tableau stored as its growth sequence: order()[k-1] holds entry k.
class StandardTableau {
 public:
  /// Throws std::invalid_argument unless every prefix of order is a shifted
  /// diagram and the full sequence fills shape exactly.
  StandardTableau(ShiftedDiagram shape, std::vector<Box> order);

  const ShiftedDiagram& shape() const noexcept { return shape_; }
  const std::vector<Box>& order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(order_.size()); }

  /// Entry written in box b.
  int entry(Box b) const;
  /// filling()[r][c] is the entry of the c-th box of row r+1.
  std::vector<std::vector<int>> filling() const;
  /// s_l T (exchange entries l and l+1), when it is again standard.
  std::optional<StandardTableau> swapped(int l) const;

  /// Rows separated by " / ": "1 2 3 4 / 5".
  std::string to_string() const;

  auto operator<=>(const StandardTableau&) const = default;

 private:
  ShiftedDiagram shape_;
  std::vector<Box> order_;
};

/// Residue of box (row, col): 0 1 ... l ... 1 0 repeated along each row.
int residue(const CartanDatum& datum, int row, int col);
RootElement content(const CartanDatum& datum, const ShiftedDiagram& lambda);

/// Throws std::invalid_argument if sizes differ.
bool dominates(const ShiftedDiagram& lambda, const ShiftedDiagram& mu);

/// All strict partitions of n in descending lexicographic order.
std::vector<ShiftedDiagram> enumerate_diagrams(int n);
/// The diagrams of enumerate_diagrams(|beta|) whose content is beta.
std::vector<ShiftedDiagram> diagrams_with_content(const CartanDatum& datum,
                                                  const RootElement& beta);

std::vector<StandardTableau> enumerate_standard(const ShiftedDiagram& lambda);

int hook_length(const ShiftedDiagram& lambda, int row, int col);
/// n! / prod of hook lengths. Throws std::logic_error if the division is inexact.
BigInt hook_count(const ShiftedDiagram& lambda);

ResidueSequence residue_sequence(const CartanDatum& datum, const StandardTableau& t);

/// K(lambda, nu): standard tableaux of shape lambda with residue sequence nu.
BigInt kostka_count(const CartanDatum& datum, const ShiftedDiagram& lambda,
                    const ResidueSequence& nu);

StandardTableau canonical_tableau(const ShiftedDiagram& lambda);

struct CellChainEntry {
  ShiftedDiagram shape;
  ResidueSequence idempotent;
};

/// Diagrams of content beta in the fixed linear extension of dominance, each
/// with the residue sequence of its canonical tableau.
std::vector<CellChainEntry> cell_chain(const CartanDatum& datum, const RootElement& beta);

}  // namespace fockqha
