#include "fockqha/crystal.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fockqha/shifted.hpp"

namespace fockqha {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (r > 0 && parts_[r] > parts_[r - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::parse(std::string_view text) {
  // Same comma-list grammar as shapes, without the strictness requirement.
  std::vector<int> parts;
  std::string s(text);
  std::stringstream in(s);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition '" + s + "'");
    }
    while (used < token.size() && token[used] == ' ') ++used;
    if (used != token.size()) throw std::invalid_argument("malformed partition '" + s + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < parts_.size(); ++k) out << (k ? "," : "") << parts_[k];
  return out.str();
}

bool is_h_strict(const Partition& lambda, int h) {
  if (h < 1) throw std::invalid_argument("h must be positive");
  const auto& p = lambda.parts();
  for (std::size_t r = 0; r + 1 < p.size(); ++r) {
    if (p[r] == p[r + 1] && p[r] % h != 0) return false;
  }
  return true;
}

bool is_h_restricted(const Partition& lambda, int h) {
  if (!is_h_strict(lambda, h)) throw std::invalid_argument("partition is not h-strict");
  const auto& p = lambda.parts();
  for (std::size_t r = 0; r < p.size(); ++r) {
    const int gap = p[r] - (r + 1 < p.size() ? p[r + 1] : 0);
    if (p[r] % h == 0 ? gap >= h : gap > h) return false;
  }
  return true;
}

RestrictedPartition::RestrictedPartition(Partition lambda, int h)
    : lambda_(std::move(lambda)), h_(h) {
  if (!is_h_strict(lambda_, h_) || !is_h_restricted(lambda_, h_)) {
    throw std::invalid_argument("partition " + lambda_.to_string() +
                                " is not h-restricted h-strict");
  }
}

int wall_block_residue(const CartanDatum& datum, int height) {
  if (height < 1) throw std::invalid_argument("block heights start at 1");
  return residue(datum, 1, height);
}

RootElement partition_content(const CartanDatum& datum, const Partition& lambda) {
  RootElement c = RootElement::zero(datum.rank());
  for (int part : lambda.parts())
    for (int j = 1; j <= part; ++j) ++c[wall_block_residue(datum, j)];
  return c;
}

Weight wall_weight(const CartanDatum& datum, const Partition& lambda) {
  return Weight(partition_content(datum, lambda));
}

std::vector<RestrictedPartition> enumerate_rp(const CartanDatum& datum,
                                              const RootElement& beta) {
  if (beta.size() != datum.rank()) throw std::invalid_argument("beta rank does not match datum");
  std::vector<RestrictedPartition> out;
  if (!beta.is_positive()) return out;
  const int h = datum.period();
  const int n = static_cast<int>(beta.height());

  // Content of a single row of each length, so pruning is a vector compare.
  std::vector<RootElement> row_content(n + 1, RootElement::zero(datum.rank()));
  for (int len = 1; len <= n; ++len) {
    row_content[len] = row_content[len - 1];
    ++row_content[len][wall_block_residue(datum, len)];
  }

  std::vector<int> parts;
  RootElement used = RootElement::zero(datum.rank());
  auto fits = [&](const RootElement& c) {
    for (int i = 0; i < c.size(); ++i)
      if (c[i] > beta[i]) return false;
    return true;
  };
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      // The final gap lambda_l - 0 is the only condition not checked on the way.
      const int last = parts.empty() ? 0 : parts.back();
      if (!parts.empty() && (last % h == 0 ? last >= h : last > h)) return;
      if (used == beta) out.emplace_back(Partition(parts), h);
      return;
    }
    const int bound = parts.empty() ? remaining : std::min(remaining, parts.back());
    for (int p = bound; p >= 1; --p) {
      if (!parts.empty()) {
        const int q = parts.back();
        if (p == q && q % h != 0) continue;
        const int gap = q - p;
        if (q % h == 0 ? gap >= h : gap > h) break;  // larger gaps for smaller p
      }
      used += row_content[p];
      if (fits(used)) {
        parts.push_back(p);
        rec(remaining - p);
        parts.pop_back();
      }
      used -= row_content[p];
    }
  };
  rec(n);
  return out;
}

std::size_t count_simples(const CartanDatum& datum, const RootElement& beta) {
  return enumerate_rp(datum, beta).size();
}

std::vector<GalleryEntry> wall_gallery(const CartanDatum& datum) {
  if (datum.ell() != 2) throw std::invalid_argument("the wall gallery is drawn for ell = 2");
  const int h = datum.period();
  const std::vector<std::pair<std::string, std::vector<int>>> walls = {
      {"Y1", {1, 1}}, {"Y2", {3, 3, 1}}, {"Y3", {7, 5}}, {"Y4", {5, 5, 1}}, {"Y5", {6, 1}}};
  std::vector<GalleryEntry> out;
  for (const auto& [name, parts] : walls) {
    Partition lambda(parts);
    const bool strict = is_h_strict(lambda, h);
    const bool restricted = strict && is_h_restricted(lambda, h);
    out.push_back({name, lambda, strict, restricted, wall_weight(datum, lambda)});
  }
  return out;
}

}  // namespace fockqha
