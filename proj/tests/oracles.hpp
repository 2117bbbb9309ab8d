#pragma once

// Brute-force reference computations used only by the tests. None of them
// call the library's enumeration or counting code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

/// Strict partitions of n: all weak partitions filtered for distinct parts.
inline std::vector<Parts> strict_partitions(int n) {
  std::vector<Parts> weak;
  Parts current;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      weak.push_back(current);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      current.push_back(p);
      self(self, left - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  std::vector<Parts> out;
  for (const auto& p : weak) {
    if (std::adjacent_find(p.begin(), p.end()) == p.end()) out.push_back(p);
  }
  return out;
}

/// Weak partitions of n, descending lexicographic.
inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts current;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      current.push_back(p);
      self(self, left - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Boxes (row, col) of the shifted diagram, row-major, 1-based.
inline std::vector<std::pair<int, int>> shifted_boxes(const Parts& parts) {
  std::vector<std::pair<int, int>> boxes;
  for (int r = 1; r <= static_cast<int>(parts.size()); ++r)
    for (int k = 0; k < parts[r - 1]; ++k) boxes.emplace_back(r, r + k);
  return boxes;
}

/// Every standard filling, found by trying all n! assignments of 1..n to the
/// boxes. Each result maps a box index (row-major) to its entry.
inline std::vector<std::vector<int>> standard_fillings(const Parts& parts) {
  const auto boxes = shifted_boxes(parts);
  const int n = static_cast<int>(boxes.size());
  std::map<std::pair<int, int>, int> where;
  for (int b = 0; b < n; ++b) where[boxes[b]] = b;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) {
      const auto [r, c] = boxes[b];
      const auto right = where.find({r, c + 1});
      const auto below = where.find({r + 1, c});
      if (right != where.end() && perm[right->second] < perm[b]) ok = false;
      if (below != where.end() && perm[below->second] < perm[b]) ok = false;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// The periodic label pattern 0 1 ... l ... 1 0 read at offset col - row.
inline int pattern_residue(int ell, int row, int col) {
  std::vector<int> pattern;
  for (int i = 0; i <= ell; ++i) pattern.push_back(i);
  for (int i = ell - 1; i >= 0; --i) pattern.push_back(i);
  return pattern[(col - row) % pattern.size()];
}

/// Residue sequences of all standard fillings (entry order).
inline std::vector<std::vector<int>> residue_words(int ell, const Parts& parts) {
  const auto boxes = shifted_boxes(parts);
  std::vector<std::vector<int>> out;
  for (const auto& filling : standard_fillings(parts)) {
    std::vector<int> word(boxes.size());
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      word[filling[b] - 1] = pattern_residue(ell, boxes[b].first, boxes[b].second);
    }
    out.push_back(word);
  }
  return out;
}

inline std::int64_t kostka(int ell, const Parts& parts, const std::vector<int>& nu) {
  std::int64_t count = 0;
  for (const auto& w : residue_words(ell, parts)) count += (w == nu);
  return count;
}

inline std::vector<std::int64_t> content(int ell, const Parts& parts) {
  std::vector<std::int64_t> k(ell + 1, 0);
  for (const auto& [r, c] : shifted_boxes(parts)) ++k[pattern_residue(ell, r, c)];
  return k;
}

/// Product of shifted hook lengths, read as ordinary hook lengths of the
/// doubled diagram at the positions (i, j + 1).
inline std::int64_t doubled_hook_product(const Parts& parts) {
  std::set<std::pair<int, int>> doubled;
  for (const auto& [r, c] : shifted_boxes(parts)) {
    doubled.insert({r, c + 1});
    doubled.insert({c, r});
  }
  std::int64_t product = 1;
  for (const auto& [r, c] : shifted_boxes(parts)) {
    const int i = r;
    const int j = c + 1;
    int arm = 0;
    while (doubled.count({i, j + arm + 1})) ++arm;
    int leg = 0;
    while (doubled.count({i + leg + 1, j})) ++leg;
    product *= arm + leg + 1;
  }
  return product;
}

inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// All words over {0..ell} whose label multiset is the given content.
inline std::vector<std::vector<int>> words_with_content(const std::vector<std::int64_t>& k) {
  std::vector<int> word;
  for (std::size_t i = 0; i < k.size(); ++i) word.insert(word.end(), k[i], static_cast<int>(i));
  std::vector<std::vector<int>> out;
  do out.push_back(word);
  while (std::next_permutation(word.begin(), word.end()));
  return out;
}

/// (u^p v^q - w^p v^q) / (u - w) = v^q sum_{a+b=p-1} u^a w^b, as a map from
/// (a, q, b) to coefficient.
inline std::map<std::array<int, 3>, std::int64_t> geometric_quotient(const std::map<std::pair<int, int>, std::int64_t>& q) {
  std::map<std::array<int, 3>, std::int64_t> out;
  for (const auto& [e, c] : q) {
    for (int a = 0; a + 1 <= e.first; ++a) out[{a, e.second, e.first - 1 - a}] += c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Cartan matrix entries written out case by case.
inline int cartan_entry(int ell, int i, int j) {
  if (i == j) return 2;
  if (ell == 1) return i == 0 ? -4 : -1;
  if (std::abs(i - j) != 1) return 0;
  if (i == 0 && j == 1) return -2;
  if (i == ell - 1 && j == ell) return -2;
  return -1;
}

inline int symmetrizer(int ell, int i) {
  if (i == 0) return 1;
  if (i == ell) return 4;
  return 2;
}

}  // namespace oracle
