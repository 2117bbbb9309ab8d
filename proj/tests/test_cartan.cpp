#include "fockqha/cartan.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fockqha;

namespace {

Weight weight_minus(const CartanDatum& datum, std::vector<RootElement::Coeff> c) {
  REQUIRE(static_cast<int>(c.size()) == datum.rank());
  return Weight(RootElement(std::move(c)));
}

}  // namespace

TEST_CASE("Cartan matrix and symmetrizer agree with the written-out table") {
  for (int ell = 1; ell <= 6; ++ell) {
    const CartanDatum datum(ell);
    CHECK(datum.rank() == ell + 1);
    CHECK(datum.period() == 2 * ell + 1);
    for (int i = 0; i <= ell; ++i) {
      CHECK(datum.d(i) == oracle::symmetrizer(ell, i));
      for (int j = 0; j <= ell; ++j) CHECK(datum.a(i, j) == oracle::cartan_entry(ell, i, j));
    }
  }
  const CartanDatum one(1);
  CHECK(one.a(0, 1) == -4);
  CHECK(one.a(1, 0) == -1);
  CHECK(one.d(1) == 4);
}

TEST_CASE("invalid data are rejected") {
  CHECK_THROWS_AS(CartanDatum(0), std::invalid_argument);
  const CartanDatum datum(2);
  CHECK_THROWS_AS(datum.a(0, 3), std::out_of_range);
  CHECK_THROWS_AS(pairing_h(datum, 5, Weight::lambda0(3)), std::out_of_range);
  CHECK_THROWS_AS(reflect(datum, -1, Weight::lambda0(3)), std::out_of_range);
}

TEST_CASE("symmetrizability d_i a_ij = d_j a_ji") {
  for (int ell = 1; ell <= 6; ++ell) {
    const CartanDatum datum(ell);
    for (int i = 0; i <= ell; ++i)
      for (int j = 0; j <= ell; ++j) CHECK(datum.form(i, j) == datum.form(j, i));
  }
}

TEST_CASE("pairings") {
  const CartanDatum two(2);
  const Weight l0 = Weight::lambda0(3);
  CHECK(pairing_h(two, 0, l0) == 1);
  CHECK(pairing_h(two, 1, l0) == 0);
  CHECK(pairing_d(l0) == 0);

  const Weight minus_delta(null_root(two));
  for (int i = 0; i <= 2; ++i) CHECK(pairing_h(two, i, minus_delta) == (i == 0 ? 1 : 0));
  CHECK(pairing_d(minus_delta) == -2);
  CHECK(pairing_d(Weight(RootElement::simple(3, 1))) == 0);

  const CartanDatum one(1);
  for (int k = 0; k < 6; ++k) CHECK(pairing_h(one, 0, Weight(k * null_root(one))) == 1);
}

TEST_CASE("bilinear form") {
  const CartanDatum one(1);
  CHECK(bilinear(one, RootElement::simple(2, 0), RootElement::simple(2, 0)) == 2);
  CHECK(bilinear(one, RootElement::simple(2, 0), RootElement::simple(2, 1)) == -4);
  CHECK(bilinear(one, RootElement::simple(2, 1), RootElement::simple(2, 0)) == -4);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int ell = 1; ell <= 6; ++ell) {
    const CartanDatum datum(ell);
    const RootElement delta = null_root(datum);
    // Direct summation over the oracle table.
    std::int64_t direct = 0;
    for (int i = 0; i <= ell; ++i)
      for (int j = 0; j <= ell; ++j)
        direct += delta[i] * delta[j] * oracle::symmetrizer(ell, i) * oracle::cartan_entry(ell, i, j);
    CHECK(direct == 0);
    CHECK(bilinear(datum, delta, delta) == 0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<RootElement::Coeff> c(ell + 1);
      for (auto& x : c) x = coeff(rng);
      const RootElement x(c);
      CHECK(bilinear(datum, delta, x) == 0);
      CHECK(bilinear(datum, x, delta) == 0);
    }
  }
}

TEST_CASE("null root") {
  CHECK(null_root(CartanDatum(1)) == RootElement({2, 1}));
  CHECK(null_root(CartanDatum(2)) == RootElement({2, 2, 1}));
  for (int ell = 1; ell <= 6; ++ell) CHECK(null_root(CartanDatum(ell)).height() == 2 * ell + 1);
}

TEST_CASE("reflections") {
  const CartanDatum two(2);
  const Weight l0 = Weight::lambda0(3);
  CHECK(reflect(two, 0, l0) == weight_minus(two, {1, 0, 0}));
  CHECK(reflect(two, 1, l0) == l0);

  const Weight minus_delta(null_root(two));
  CHECK(reflect(two, 1, minus_delta) == minus_delta);
  CHECK(reflect(two, 2, minus_delta) == minus_delta);
  CHECK(reflect(two, 0, minus_delta) == weight_minus(two, {3, 2, 1}));

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int ell = 1; ell <= 4; ++ell) {
    const CartanDatum datum(ell);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<RootElement::Coeff> c(ell + 1);
      for (auto& x : c) x = coeff(rng);
      const Weight w{RootElement(c)};
      for (int i = 0; i <= ell; ++i) {
        CHECK(reflect(datum, i, reflect(datum, i, w)) == w);
        CHECK(pairing_h(datum, i, reflect(datum, i, w)) == -pairing_h(datum, i, w));
      }
    }
  }
}

TEST_CASE("reflections commute with translation by delta") {
  for (int ell = 1; ell <= 3; ++ell) {
    const CartanDatum datum(ell);
    const RootElement delta = null_root(datum);
    for (int k = 0; k <= 3; ++k) {
      const Weight w(k * delta);
      for (int i = 0; i <= ell; ++i) {
        const Weight r = reflect(datum, i, w);
        const Weight base = reflect(datum, i, Weight::lambda0(ell + 1));
        CHECK(r.deficit() - base.deficit() == k * delta);
      }
    }
  }
}

TEST_CASE("root element arithmetic and text") {
  const RootElement a({2, 2, 1});
  CHECK(a.height() == 5);
  CHECK(a.is_positive());
  CHECK_FALSE((a - RootElement({3, 0, 0})).is_positive());
  CHECK(a.to_string() == "2,2,1");
  CHECK(Weight(RootElement({4, 2, 1})).to_string() == "L0 - 4a0 - 2a1 - a2");
  CHECK(Weight::lambda0(3).to_string() == "L0");
}
