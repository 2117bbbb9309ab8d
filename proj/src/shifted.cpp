#include "fockqha/shifted.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fockqha {
namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> values;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return values;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw std::invalid_argument("malformed " + std::string(what) + " '" + std::string(text) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

std::string join(const std::vector<int>& values) {
  std::ostringstream out;
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << values[k];
  return out.str();
}

}  // namespace

// ShiftedDiagram

ShiftedDiagram::ShiftedDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] <= 0) throw std::invalid_argument("shifted diagram parts must be positive");
    if (r > 0 && parts_[r] >= parts_[r - 1]) {
      throw std::invalid_argument("shifted diagram parts must be strictly decreasing: " +
                                  join(parts_));
    }
    size_ += parts_[r];
  }
}

ShiftedDiagram ShiftedDiagram::parse(std::string_view text) {
  return ShiftedDiagram(parse_int_list(text, "shape"));
}

bool ShiftedDiagram::contains(Box b) const {
  if (b.row < 1 || b.row > depth()) return false;
  return b.col >= b.row && b.col <= b.row + parts_[b.row - 1] - 1;
}

std::vector<Box> ShiftedDiagram::boxes() const {
  std::vector<Box> out;
  out.reserve(size_);
  for (int i = 1; i <= depth(); ++i)
    for (int j = i; j < i + parts_[i - 1]; ++j) out.push_back({i, j});
  return out;
}

std::vector<Box> ShiftedDiagram::addable_boxes() const {
  std::vector<Box> out;
  const int l = depth();
  for (int i = 1; i <= l; ++i) {
    if (i == 1 || parts_[i - 2] > parts_[i - 1] + 1) out.push_back({i, i + parts_[i - 1]});
  }
  if (l == 0 || parts_[l - 1] > 1) out.push_back({l + 1, l + 1});
  return out;
}

std::vector<Box> ShiftedDiagram::removable_boxes() const {
  std::vector<Box> out;
  const int l = depth();
  for (int i = 1; i <= l; ++i) {
    const int next = i < l ? parts_[i] : 0;
    if (parts_[i - 1] - 1 > next || i == l) out.push_back({i, i + parts_[i - 1] - 1});
  }
  return out;
}

ShiftedDiagram ShiftedDiagram::with_box(Box b) const {
  std::vector<int> parts = parts_;
  if (b.row == depth() + 1 && b.col == b.row) {
    parts.push_back(1);
  } else if (b.row >= 1 && b.row <= depth() && b.col == b.row + parts_[b.row - 1]) {
    ++parts[b.row - 1];
  } else {
    throw std::invalid_argument("box is not at the end of a row");
  }
  return ShiftedDiagram(std::move(parts));
}

ShiftedDiagram ShiftedDiagram::without_box(Box b) const {
  if (b.row < 1 || b.row > depth() || b.col != b.row + parts_[b.row - 1] - 1) {
    throw std::invalid_argument("box is not the last box of a row");
  }
  std::vector<int> parts = parts_;
  if (--parts[b.row - 1] == 0) parts.erase(parts.begin() + (b.row - 1));
  return ShiftedDiagram(std::move(parts));
}

std::string ShiftedDiagram::to_string() const { return join(parts_); }

// ResidueSequence

ResidueSequence ResidueSequence::parse(std::string_view text) {
  auto values = parse_int_list(text, "residue sequence");
  for (int v : values)
    if (v < 0) throw std::invalid_argument("residue labels must be non-negative");
  return ResidueSequence(std::move(values));
}

RootElement ResidueSequence::content(const CartanDatum& datum) const {
  RootElement c = RootElement::zero(datum.rank());
  for (int label : entries_) {
    datum.check_index(label);
    ++c[label];
  }
  return c;
}

ResidueSequence ResidueSequence::appended(int label) const {
  auto e = entries_;
  e.push_back(label);
  return ResidueSequence(std::move(e));
}

ResidueSequence ResidueSequence::concatenated(const ResidueSequence& tail) const {
  auto e = entries_;
  e.insert(e.end(), tail.entries_.begin(), tail.entries_.end());
  return ResidueSequence(std::move(e));
}

ResidueSequence ResidueSequence::prefix(int length) const {
  if (length < 0 || length > size()) throw std::out_of_range("prefix length out of range");
  return ResidueSequence(std::vector<int>(entries_.begin(), entries_.begin() + length));
}

ResidueSequence ResidueSequence::without_last() const {
  if (empty()) throw std::out_of_range("empty residue sequence");
  return prefix(size() - 1);
}

ResidueSequence ResidueSequence::swapped(int l) const {
  if (l < 1 || l >= size()) throw std::out_of_range("swap position out of range");
  auto e = entries_;
  std::swap(e[l - 1], e[l]);
  return ResidueSequence(std::move(e));
}

std::string ResidueSequence::to_string() const { return join(entries_); }

// StandardTableau

StandardTableau::StandardTableau(ShiftedDiagram shape, std::vector<Box> order)
    : shape_(std::move(shape)), order_(std::move(order)) {
  ShiftedDiagram grown;
  for (const Box& b : order_) {
    const auto addable = grown.addable_boxes();
    if (std::find(addable.begin(), addable.end(), b) == addable.end()) {
      throw std::invalid_argument("growth sequence is not standard");
    }
    grown = grown.with_box(b);
  }
  if (grown != shape_) throw std::invalid_argument("growth sequence does not fill the shape");
}

int StandardTableau::entry(Box b) const {
  const auto it = std::find(order_.begin(), order_.end(), b);
  if (it == order_.end()) throw std::out_of_range("box not in tableau");
  return static_cast<int>(it - order_.begin()) + 1;
}

std::vector<std::vector<int>> StandardTableau::filling() const {
  std::vector<std::vector<int>> rows(shape_.depth());
  for (int r = 0; r < shape_.depth(); ++r) rows[r].assign(shape_.parts()[r], 0);
  for (int k = 0; k < size(); ++k) {
    const Box& b = order_[k];
    rows[b.row - 1][b.col - b.row] = k + 1;
  }
  return rows;
}

std::optional<StandardTableau> StandardTableau::swapped(int l) const {
  if (l < 1 || l >= size()) throw std::out_of_range("swap position out of range");
  const Box& a = order_[l - 1];
  const Box& b = order_[l];
  // Exchanging l and l+1 breaks standardness exactly when the boxes are
  // row- or column-adjacent.
  if ((a.row == b.row && b.col == a.col + 1) || (a.col == b.col && b.row == a.row + 1)) {
    return std::nullopt;
  }
  auto order = order_;
  std::swap(order[l - 1], order[l]);
  return StandardTableau(shape_, std::move(order));
}

std::string StandardTableau::to_string() const {
  std::ostringstream out;
  const auto rows = filling();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out << " / ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) out << (c ? " " : "") << rows[r][c];
  }
  return out.str();
}

// Free functions

int residue(const CartanDatum& datum, int row, int col) {
  if (row < 1 || col < row) {
    throw std::invalid_argument("box (" + std::to_string(row) + "," + std::to_string(col) +
                                ") lies outside the shifted region");
  }
  const int r = (col - row) % datum.period();
  return r <= datum.ell() ? r : 2 * datum.ell() - r;
}

RootElement content(const CartanDatum& datum, const ShiftedDiagram& lambda) {
  RootElement c = RootElement::zero(datum.rank());
  for (const Box& b : lambda.boxes()) ++c[residue(datum, b.row, b.col)];
  return c;
}

bool dominates(const ShiftedDiagram& lambda, const ShiftedDiagram& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominance needs equal sizes");
  const int rows = std::max(lambda.depth(), mu.depth());
  int sum_lambda = 0;
  int sum_mu = 0;
  for (int k = 0; k < rows; ++k) {
    sum_lambda += k < lambda.depth() ? lambda.parts()[k] : 0;
    sum_mu += k < mu.depth() ? mu.parts()[k] : 0;
    if (sum_lambda < sum_mu) return false;
  }
  return true;
}

std::vector<ShiftedDiagram> enumerate_diagrams(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<ShiftedDiagram> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, bound); p >= 1; --p) {
      // p + (p-1) + ... + 1 must be able to absorb the remainder.
      if (p * (p + 1) / 2 < remaining) break;
      parts.push_back(p);
      rec(remaining - p, p - 1);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<ShiftedDiagram> diagrams_with_content(const CartanDatum& datum,
                                                  const RootElement& beta) {
  if (beta.size() != datum.rank()) throw std::invalid_argument("beta rank does not match datum");
  std::vector<ShiftedDiagram> out;
  if (!beta.is_positive()) return out;
  for (auto& lambda : enumerate_diagrams(static_cast<int>(beta.height()))) {
    if (content(datum, lambda) == beta) out.push_back(std::move(lambda));
  }
  return out;
}

std::vector<StandardTableau> enumerate_standard(const ShiftedDiagram& lambda) {
  std::vector<StandardTableau> out;
  std::vector<Box> order;
  std::function<void(const ShiftedDiagram&)> grow = [&](const ShiftedDiagram& current) {
    if (current.size() == lambda.size()) {
      out.emplace_back(lambda, order);
      return;
    }
    for (const Box& b : current.addable_boxes()) {
      if (!lambda.contains(b)) continue;
      order.push_back(b);
      grow(current.with_box(b));
      order.pop_back();
    }
  };
  grow(ShiftedDiagram{});
  return out;
}

int hook_length(const ShiftedDiagram& lambda, int row, int col) {
  if (!lambda.contains({row, col})) throw std::invalid_argument("box not in diagram");
  const auto& p = lambda.parts();
  int arm = row + p[row - 1] - col;  // boxes (row, j') with j' >= col
  int leg = 0;
  for (int r = row + 1; r <= std::min(col, lambda.depth()); ++r) {
    if (lambda.contains({r, col})) ++leg;
  }
  const int shifted_row = col + 1 <= lambda.depth() ? p[col] : 0;  // all of row col+1
  return arm + leg + shifted_row;
}

BigInt hook_count(const ShiftedDiagram& lambda) {
  BigInt denominator = 1;
  for (const Box& b : lambda.boxes()) denominator *= hook_length(lambda, b.row, b.col);
  const BigInt numerator = factorial(static_cast<unsigned>(lambda.size()));
  if (numerator % denominator != 0) {
    throw std::logic_error("hook product does not divide n! for shape " + lambda.to_string());
  }
  return numerator / denominator;
}

ResidueSequence residue_sequence(const CartanDatum& datum, const StandardTableau& t) {
  std::vector<int> e;
  e.reserve(t.size());
  for (const Box& b : t.order()) e.push_back(residue(datum, b.row, b.col));
  return ResidueSequence(std::move(e));
}

BigInt kostka_count(const CartanDatum& datum, const ShiftedDiagram& lambda,
                    const ResidueSequence& nu) {
  if (nu.size() != lambda.size()) throw std::invalid_argument("|nu| must equal |lambda|");
  // Paths in the lattice of subdiagrams of lambda; a partial filling dies as
  // soon as no addable box inside lambda carries the next residue.
  std::function<std::uint64_t(const ShiftedDiagram&, int)> count =
      [&](const ShiftedDiagram& current, int step) -> std::uint64_t {
    if (step == nu.size()) return 1;
    std::uint64_t total = 0;
    for (const Box& b : current.addable_boxes()) {
      if (!lambda.contains(b) || residue(datum, b.row, b.col) != nu[step]) continue;
      total += count(current.with_box(b), step + 1);
    }
    return total;
  };
  return BigInt(count(ShiftedDiagram{}, 0));
}

StandardTableau canonical_tableau(const ShiftedDiagram& lambda) {
  return StandardTableau(lambda, lambda.boxes());
}

std::vector<CellChainEntry> cell_chain(const CartanDatum& datum, const RootElement& beta) {
  std::vector<CellChainEntry> chain;
  for (auto& lambda : diagrams_with_content(datum, beta)) {
    auto e = residue_sequence(datum, canonical_tableau(lambda));
    chain.push_back({std::move(lambda), std::move(e)});
  }
  return chain;
}

}  // namespace fockqha
