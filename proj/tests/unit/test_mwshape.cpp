#include "doctest.h"
#include "etnc/errors.hpp"
#include "etnc/mwshape.hpp"

using namespace etnc;

TEST_CASE("ranks from shape") {
  const CyclicGroup g(3, 2);
  CHECK(ranks_from_shape(PermShape(g, {1, 1, 0})) == RankVector{2, 4, 4});
  CHECK(ranks_from_shape(PermShape(g, {3, 0, 0})) == RankVector{3, 3, 3});
  CHECK(ranks_from_shape(PermShape(g, {0, 0, 1})) == RankVector{1, 3, 9});
}

TEST_CASE("shape from ranks") {
  CHECK(shape_from_ranks(CyclicGroup(7, 1), {1, 7}).m == std::vector<long>{0, 1});
  CHECK(shape_from_ranks(CyclicGroup(3, 2), {2, 2, 2}).m == std::vector<long>{2, 0, 0});
  CHECK(shape_from_ranks(CyclicGroup(3, 2), {2, 4, 4}).m == std::vector<long>{1, 1, 0});
  try {
    // S = (1, 1/2, 1/3): m_0 = 1/2.
    shape_from_ranks(CyclicGroup(3, 2), {1, 2, 4});
    FAIL("expected rejection");
  } catch (const NotPermutationShape& e) {
    CHECK(e.level() == 0);
  }
  try {
    // S = (2, 1, 3): m_1 = -2.
    shape_from_ranks(CyclicGroup(3, 2), {2, 4, 22});
    FAIL("expected rejection");
  } catch (const NotPermutationShape& e) {
    CHECK(e.level() == 1);
  }
  CHECK_THROWS_AS(shape_from_ranks(CyclicGroup(3, 2), {2, 1, 1}), NotPermutationShape);
  CHECK_THROWS_AS(shape_from_ranks(CyclicGroup(3, 2), {2, 2}), NotPermutationShape);
}

TEST_CASE("b_psi, h and t0") {
  const CyclicGroup g(3, 2);
  const PermShape s200(g, {2, 0, 0});
  CHECK(b_psi(s200, Character(g, 1)) == 2);
  CHECK(b_psi(s200, Character(g, 0)) == 0);
  CHECK(h_of(s200) == 2);
  CHECK(t0_of(s200) == 0);
  const PermShape s110(g, {1, 1, 0});
  CHECK(b_psi(s110, Character(g, 2)) == 4);
  CHECK(b_psi(s110, Character(g, 3)) == 1);
  CHECK(t0_of(s110) == 1);
  CHECK_FALSE(t0_of(PermShape(g, {0, 0, 1})).has_value());
}

TEST_CASE("orders of vanishing") {
  const CyclicGroup g(3, 2);
  const PermShape s(g, {1, 1, 0});
  std::vector<long> orders;
  for (const auto& psi : all_characters(g)) orders.push_back(order_of_vanishing(s, psi));
  CHECK(orders[0] == 2);
  CHECK(orders[3] == 1);
  CHECK(orders[1] == 0);
  CHECK(ranks_from_orders(g, orders) == ranks_from_shape(s));
}
