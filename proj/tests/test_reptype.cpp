#include "fockqha/reptype.hpp"

#include "fockqha/crystal.hpp"
#include "fockqha/dimension.hpp"
#include "fockqha/verify.hpp"

#include <doctest.h>

using namespace fockqha;

TEST_CASE("defect values") {
  for (int ell = 1; ell <= 3; ++ell) {
    const CartanDatum datum(ell);
    const RootElement delta = null_root(datum);
    CHECK(defect(datum, delta) == 1);
    CHECK(defect(datum, 2 * delta) == 2);
    CHECK(defect(datum, 3 * delta) == 3);
    CHECK(defect(datum, RootElement::simple(datum.rank(), 0)) == 0);
    CHECK(defect(datum, RootElement::zero(datum.rank())) == 0);
    CHECK_FALSE(defect(datum, RootElement::simple(datum.rank(), 1)).has_value());
  }
  CHECK_THROWS_AS(defect(CartanDatum(2), RootElement({1, -1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(defect(CartanDatum(2), RootElement({1, 0})), std::invalid_argument);
}

TEST_CASE("defect equals the simple-count oracle") {
  for (int ell = 1; ell <= 3; ++ell) {
    const CartanDatum datum(ell);
    for (const auto& beta : contents_up_to(datum.rank(), 12)) CHECK(defect(datum, beta) == defect_by_simples(datum, beta));
  }
}

TEST_CASE("defect is constant on Weyl orbits") {
  for (int ell = 1; ell <= 3; ++ell) {
    const CartanDatum datum(ell);
    for (const auto& beta : contents_up_to(datum.rank(), 10)) {
      const auto k = defect(datum, beta);
      if (!k) continue;
      for (int i = 0; i <= ell; ++i) {
        const RootElement image = reflect(datum, i, Weight(beta)).deficit();
        if (!image.is_positive()) continue;
        const auto k2 = defect(datum, image);
        if (k2) CHECK(*k2 == *k);
      }
    }
  }
}

TEST_CASE("classification") {
  for (int ell = 1; ell <= 3; ++ell) {
    const CartanDatum datum(ell);
    const RootElement delta = null_root(datum);
    CHECK(classify(datum, RootElement::zero(datum.rank())).kind == TypeKind::Simple);
    CHECK(classify(datum, RootElement::simple(datum.rank(), 0)).kind == TypeKind::Simple);
    CHECK(classify(datum, delta).kind == TypeKind::FiniteNotSemisimple);
    CHECK(classify(datum, 2 * delta).kind == TypeKind::Wild);
    CHECK(classify(datum, 3 * delta).kind == TypeKind::Wild);
  }
  CHECK(classify(CartanDatum(2), RootElement({0, 1, 0})).kind == TypeKind::ZeroAlgebra);
  CHECK(classify(CartanDatum(1), RootElement({4, 2})).defect == 2);
  CHECK(to_string(TypeKind::FiniteNotSemisimple) == "FiniteNotSemisimple");
}

TEST_CASE("Brauer data") {
  const auto one = brauer_data(CartanDatum(1));
  CHECK(one.cartan == std::vector<std::vector<int>>{{3}});
  CHECK(one.simple_dims == std::vector<BigInt>{1});
  const auto two = brauer_data(CartanDatum(2));
  CHECK(two.cartan == std::vector<std::vector<int>>{{3, 1}, {1, 2}});
  CHECK(two.simple_dims == std::vector<BigInt>{1, 2});
  CHECK(two.exceptional_multiplicity == 2);
  const auto three = brauer_data(CartanDatum(3));
  CHECK(three.simple_dims == std::vector<BigInt>{1, 4, 5});
  CHECK(three.projective_dims() == std::vector<BigInt>{7, 14, 14});
  for (int ell = 1; ell <= 5; ++ell) {
    const auto data = brauer_data(CartanDatum(ell));
    for (int i = 0; i < ell; ++i)
      for (int j = 0; j < ell; ++j) {
        CHECK(data.cartan[i][j] == data.cartan[j][i]);
        if (std::abs(i - j) > 1) CHECK(data.cartan[i][j] == 0);
      }
  }
}

TEST_CASE("two independent sums for dim R(delta)") {
  const std::vector<int> expected = {3, 15, 133};
  for (int ell = 1; ell <= 3; ++ell) {
    const auto r = reconcile_delta_dim(CartanDatum(ell));
    CHECK(r.holds);
    CHECK(r.formula_side == expected[ell - 1]);
    CHECK(r.brauer_side == expected[ell - 1]);
  }
  for (int ell = 4; ell <= 5; ++ell) CHECK(reconcile_delta_dim(CartanDatum(ell)).holds);
}
