#pragma once

// h-restricted h-strict partitions, which index proper Young walls without a
// removable delta and hence the simple modules of R^{Lambda_0}(beta).

#include "fockqha/cartan.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fockqha {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Equal adjacent parts are multiples of h.
bool is_h_strict(const Partition& lambda, int h);
/// lambda_r - lambda_{r+1} < h if h | lambda_r, <= h otherwise (lambda_{l+1} = 0).
/// Throws std::invalid_argument if lambda is not h-strict.
bool is_h_restricted(const Partition& lambda, int h);

class RestrictedPartition {
 public:
  /// Throws std::invalid_argument unless lambda is h-strict and h-restricted.
  RestrictedPartition(Partition lambda, int h);

  const Partition& partition() const noexcept { return lambda_; }
  int period() const noexcept { return h_; }

  auto operator<=>(const RestrictedPartition&) const = default;

 private:
  Partition lambda_;
  int h_;
};

/// A Young wall recorded by its column heights (number of stacked blocks).
struct YoungWall {
  std::vector<int> columns;

  static YoungWall of(const RestrictedPartition& lambda) {
    return YoungWall{lambda.partition().parts()};
  }
  Partition heights() const { return Partition(columns); }
};

/// Colour of the block at height j >= 1 in any column.
int wall_block_residue(const CartanDatum& datum, int height);

/// Node count per residue, nu_delta laid along each part.
RootElement partition_content(const CartanDatum& datum, const Partition& lambda);
Weight wall_weight(const CartanDatum& datum, const Partition& lambda);

/// RP_h(beta) in descending lexicographic order.
std::vector<RestrictedPartition> enumerate_rp(const CartanDatum& datum, const RootElement& beta);
std::size_t count_simples(const CartanDatum& datum, const RootElement& beta);

struct GalleryEntry {
  std::string name;
  Partition partition;
  bool strict;
  bool restricted;
  Weight weight;
};

/// The walls Y_1 ... Y_5 of type A^(2)_4 with their classification. Throws
/// std::invalid_argument unless datum.ell() == 2.
std::vector<GalleryEntry> wall_gallery(const CartanDatum& datum);

}  // namespace fockqha
