#include "fockqha/crystal.hpp"

#include "fockqha/dimension.hpp"
#include "fockqha/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fockqha;

namespace {

Partition part(std::vector<int> p) { return Partition(std::move(p)); }

/// RP_h(beta) by scanning every partition of |beta|.
std::vector<Partition> scan_rp(int ell, const std::vector<std::int64_t>& beta) {
  const int h = 2 * ell + 1;
  std::int64_t n = 0;
  for (auto k : beta) n += k;
  std::vector<Partition> out;
  for (const auto& p : oracle::partitions(static_cast<int>(n))) {
    bool strict = true;
    bool restricted = true;
    for (std::size_t r = 0; r < p.size(); ++r) {
      const int next = r + 1 < p.size() ? p[r + 1] : 0;
      if (p[r] == next && p[r] % h != 0) strict = false;
      const int gap = p[r] - next;
      if (p[r] % h == 0 ? gap >= h : gap > h) restricted = false;
    }
    if (!strict || !restricted) continue;
    std::vector<std::int64_t> k(ell + 1, 0);
    for (const int row : p)
      for (int c = 1; c <= row; ++c) ++k[oracle::pattern_residue(ell, 1, c)];
    if (k == beta) out.emplace_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(Partition::parse("3,3,1") == part({3, 3, 1}));
  CHECK(Partition::parse("").length() == 0);
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK(part({5, 5, 1}).size() == 11);
  CHECK(part({5, 5, 1}).to_string() == "5,5,1");
}

TEST_CASE("h-strict and h-restricted predicates") {
  CHECK_FALSE(is_h_strict(part({1, 1}), 5));
  CHECK_FALSE(is_h_strict(part({3, 3, 1}), 5));
  CHECK(is_h_strict(part({7, 5}), 5));
  CHECK(is_h_strict(part({5, 5, 1}), 5));
  for (const auto& p : oracle::strict_partitions(12)) {
    for (int h : {3, 5, 7}) CHECK(is_h_strict(Partition(p), h));
  }
  CHECK_FALSE(is_h_restricted(part({7, 5}), 5));
  CHECK(is_h_restricted(part({5, 5, 1}), 5));
  CHECK(is_h_restricted(part({6, 1}), 5));
  CHECK_THROWS_AS(is_h_restricted(part({1, 1}), 5), std::invalid_argument);
  CHECK_THROWS_AS(RestrictedPartition(part({7, 5}), 5), std::invalid_argument);
}

TEST_CASE("wall weights") {
  const CartanDatum two(2);
  CHECK(wall_weight(two, part({6, 1})).to_string() == "L0 - 4a0 - 2a1 - a2");
  CHECK(wall_weight(two, part({5, 5, 1})).to_string() == "L0 - 5a0 - 4a1 - 2a2");
  CHECK(wall_weight(two, Partition()) == Weight::lambda0(3));
  for (int j = 1; j <= 5; ++j) CHECK(wall_block_residue(two, j) == std::vector<int>{0, 1, 2, 1, 0}[j - 1]);
}

TEST_CASE("gallery Y1 to Y5") {
  const auto gallery = wall_gallery(CartanDatum(2));
  REQUIRE(gallery.size() == 5);
  const std::vector<std::string> weights = {
      "L0 - 2a0", "L0 - 3a0 - 2a1 - 2a2", "L0 - 5a0 - 5a1 - 2a2", "L0 - 5a0 - 4a1 - 2a2", "L0 - 4a0 - 2a1 - a2"};
  const std::vector<bool> strict = {false, false, true, true, true};
  const std::vector<bool> restricted = {false, false, false, true, true};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(gallery[k].name == "Y" + std::to_string(k + 1));
    CHECK(gallery[k].weight.to_string() == weights[k]);
    CHECK(gallery[k].strict == strict[k]);
    CHECK(gallery[k].restricted == restricted[k]);
  }
  CHECK_THROWS_AS(wall_gallery(CartanDatum(3)), std::invalid_argument);
}

TEST_CASE("restricted partitions of a content") {
  const CartanDatum one(1);
  const auto rp1 = enumerate_rp(one, null_root(one));
  REQUIRE(rp1.size() == 1);
  CHECK(rp1[0].partition() == part({2, 1}));
  const CartanDatum two(2);
  const auto rp2 = enumerate_rp(two, null_root(two));
  REQUIRE(rp2.size() == 2);
  CHECK(rp2[0].partition() == part({4, 1}));
  CHECK(rp2[1].partition() == part({3, 2}));
  const auto empty = enumerate_rp(two, RootElement({0, 0, 0}));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].partition().length() == 0);
  for (int ell = 1; ell <= 3; ++ell) CHECK(count_simples(CartanDatum(ell), null_root(CartanDatum(ell))) == static_cast<std::size_t>(ell));
  CHECK(count_simples(two, RootElement::simple(3, 0)) == 1);
  CHECK(count_simples(two, RootElement::simple(3, 1)) == 0);
}

TEST_CASE("enumeration equals the brute scan") {
  for (int ell = 1; ell <= 3; ++ell) {
    const CartanDatum datum(ell);
    for (const auto& beta : contents_up_to(datum.rank(), 10)) {
      const auto expected = scan_rp(ell, beta.coeffs());
      const auto actual = enumerate_rp(datum, beta);
      REQUIRE(actual.size() == expected.size());
      for (std::size_t k = 0; k < actual.size(); ++k) CHECK(actual[k].partition() == expected[k]);
    }
  }
}

TEST_CASE("support agreement with the dimension formula") {
  for (int ell = 1; ell <= 3; ++ell) {
    const CartanDatum datum(ell);
    for (const auto& beta : contents_up_to(datum.rank(), 10)) {
      CHECK((count_simples(datum, beta) > 0) == (dim_block(datum, beta).dim > 0));
    }
  }
}
