#include <random>

#include "../support/oracles.hpp"
#include "doctest.h"
#include "etnc/errors.hpp"
#include "etnc/groupring.hpp"

using namespace etnc;

namespace {

GroupRingElt random_elt(const CyclicGroup& g, std::mt19937_64& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Rational> c(static_cast<std::size_t>(g.order()));
  for (auto& x : c) x = d(rng);
  return GroupRingElt(g, c);
}

GroupRingElt parse_sum(const CyclicGroup& g, std::initializer_list<std::pair<long, long>> terms) {
  GroupRingElt x(g);
  for (auto [k, c] : terms) x += GroupRingElt::sigma_power(g, k) * Rational(c);
  return x;
}

}  // namespace

TEST_CASE("characters") {
  const CyclicGroup g(3, 2);
  CHECK(Character(g, 0).level() == 0);
  CHECK(Character(g, 3).level() == 1);
  CHECK(Character(g, 6).reduced_index() == 2);
  CHECK(Character(g, 4).level() == 2);
  CHECK(Character(g, 4).contragredient().j == 5);
  CHECK(Character(g, 3).value_at(1) == CycNum::zeta_power(3, 1));
  const auto orbits = galois_orbits(g);
  REQUIRE(orbits.size() == 3);
  CHECK(orbits[1] == std::vector<long>{3, 6});
  CHECK(orbits[2].size() == 6);
  CHECK_THROWS(CyclicGroup(2, 3));
  CHECK_THROWS(CyclicGroup(9, 1));
}

TEST_CASE("char_eval basics") {
  const CyclicGroup g(3, 2);
  const GroupRingElt sigma = GroupRingElt::sigma_power(g, 1);
  CHECK(char_eval(sigma, Character(g, 0)) == CycNum(1, 1));
  for (const auto& psi : all_characters(g)) {
    const CycNum tr = char_eval(trace_elt(g, 0), psi);
    CHECK(tr == CycNum(psi.value_modulus(), psi.is_trivial() ? 9 : 0));
    for (int t = 0; t <= g.n; ++t)
      CHECK(char_eval(sigma_power_minus_one(g, t), psi).is_zero() == (t >= psi.level()));
  }
  CHECK(trace_elt(g, 2) == GroupRingElt::identity(g));
  CHECK(GroupRingElt::sigma_power(g, 7).augmentation() == 1);
  // sigma_power_minus_one(t) evaluates to zeta^(j p^t) - 1.
  const Character psi(g, 4);
  CHECK(char_eval(sigma_power_minus_one(g, 1), psi) == CycNum::zeta_power(9, 12) - CycNum(9, 1));
}

TEST_CASE("exact and numeric inverse DFT round trip") {
  std::mt19937_64 rng(3);
  for (auto [p, n] : {std::pair{3L, 1}, {3L, 2}, {5L, 1}, {7L, 1}, {3L, 3}}) {
    const CyclicGroup g(p, n);
    for (int trial = 0; trial < 5; ++trial) {
      GroupRingElt x = random_elt(g, rng) * Rational(1, 1 + trial);
      std::vector<CycNum> exact;
      std::vector<BigComplex> numeric;
      for (const auto& psi : all_characters(g)) {
        exact.push_back(char_eval(x, psi));
        numeric.push_back(exact.back().embed(192));
      }
      CHECK(exact_inverse_dft(g, exact) == x);
      const auto res = inverse_dft(g, numeric, 1000000, Rational(1, Integer("1000000000000000000000000000000")), 192);
      CHECK(res.element == x);
      CHECK(res.all_recognized());
      CHECK(res.residual.to_rational() < Rational(1, Integer("79228162514264337593543950336")));  // 2^-96
    }
  }
  const CyclicGroup g(7, 1);
  std::vector<BigComplex> ones(7, BigComplex(Rational(1), 128));
  CHECK(inverse_dft(g, ones, 1000, Rational(1, 1000000), 128).element == GroupRingElt::identity(g));
  std::vector<BigComplex> sig;
  for (const auto& psi : all_characters(g)) sig.push_back(psi.value_at(1).embed(128));
  CHECK(inverse_dft(g, sig, 1000, Rational(1, 1000000), 128).element == GroupRingElt::sigma_power(g, 1));
}

TEST_CASE("exact inverse DFT rejects non-equivariant values") {
  const CyclicGroup g(7, 1);
  std::vector<CycNum> v;
  for (const auto& psi : all_characters(g)) v.push_back(psi.value_at(1));
  v[2] = v[3];
  CHECK_THROWS_AS(exact_inverse_dft(g, v), GaloisIncompatible);
  std::vector<CycNum> w(7, CycNum(7, 1));
  w[0] = CycNum::zeta_power(7, 1);
  CHECK_THROWS_AS(exact_inverse_dft(g, w), GaloisIncompatible);
}

TEST_CASE("Z_p[G] units") {
  const CyclicGroup g3(3, 1);
  CHECK(is_zp_unit(GroupRingElt::identity(g3) + GroupRingElt::sigma_power(g3, 1)).unit);
  CHECK(oracle::brute_unit(GroupRingElt::identity(g3) + GroupRingElt::sigma_power(g3, 1)));
  CHECK_FALSE(is_zp_unit(trace_elt(g3, 0)).unit);
  CHECK(is_zp_unit(GroupRingElt::sigma_power(g3, 2)).unit);
  const auto v = is_zp_unit(GroupRingElt::identity(g3) * Rational(1, 3));
  CHECK_FALSE(v.unit);
  CHECK(v.bad_coefficient == 0);
  std::mt19937_64 rng(17);
  for (const auto& g : {CyclicGroup(3, 1), CyclicGroup(3, 2), CyclicGroup(5, 1)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const GroupRingElt x = random_elt(g, rng);
      CHECK(is_zp_unit(x).unit == oracle::brute_unit(x));
    }
  }
}

TEST_CASE("augmentation ideal powers") {
  const CyclicGroup g(3, 2);
  const GroupRingElt s1 = sigma_power_minus_one(g, 0);
  CHECK(ideal_power_membership(s1.pow(2), 2));
  CHECK_FALSE(ideal_power_membership(s1.pow(2), 3));
  CHECK(oracle::hnf_membership(s1.pow(2), 2));
  CHECK_FALSE(oracle::hnf_membership(s1.pow(2), 3));
  CHECK(ideal_power_membership(GroupRingElt::identity(g), 0));
  CHECK_FALSE(ideal_power_membership(GroupRingElt::identity(g), 1));
  CHECK_THROWS_AS(ideal_power_membership(GroupRingElt::identity(g) * Rational(1, 3), 1), NonIntegral);
  // The Mazur-Tate element of the 389a1 example.
  const GroupRingElt L = parse_sum(g, {{1, -1}, {2, 2}, {3, -1}, {5, 2}, {6, -2}, {7, -2}, {8, 2}});
  CHECK(ideal_power_membership(L, 2));
  CHECK(augmentation_order(L, 6) == 2);
  CHECK(L.to_string() == "-sigma + 2*sigma^2 - sigma^3 + 2*sigma^5 - 2*sigma^6 - 2*sigma^7 + 2*sigma^8");
  // Tr_G lies in every power: Tr = (sigma-1)^(N-1) up to a unit only mod p, so check against the oracle.
  for (int h = 0; h <= 4; ++h) CHECK(ideal_power_membership(trace_elt(g, 0), h) == oracle::hnf_membership(trace_elt(g, 0), h));

  std::mt19937_64 rng(99);
  for (const auto& grp : {CyclicGroup(3, 1), CyclicGroup(3, 2), CyclicGroup(5, 1), CyclicGroup(7, 1)}) {
    for (int trial = 0; trial < 40; ++trial) {
      GroupRingElt x = random_elt(grp, rng);
      // Bias towards deep elements so both answers occur.
      x = x * sigma_power_minus_one(grp, 0).pow(trial % 4);
      for (int h = 0; h <= 4; ++h) CHECK(ideal_power_membership(x, h) == oracle::hnf_membership(x, h));
    }
  }
}

TEST_CASE("principality: products of h elements g-1 span the same ideal") {
  std::mt19937_64 rng(8);
  const CyclicGroup g(3, 2);
  for (int h = 1; h <= 3; ++h) {
    for (int trial = 0; trial < 20; ++trial) {
      GroupRingElt prod = GroupRingElt::identity(g);
      std::uniform_int_distribution<long> pick(1, g.order() - 1);
      for (int k = 0; k < h; ++k) prod *= GroupRingElt::sigma_power(g, pick(rng)) - GroupRingElt::identity(g);
      CHECK(ideal_power_membership(prod, h));
      CHECK(oracle::hnf_membership(prod, h));
    }
  }
}

TEST_CASE("generator substitution and involution") {
  const CyclicGroup g(7, 1);
  const GroupRingElt x = GroupRingElt::sigma_power(g, 2) + GroupRingElt::identity(g) * Rational(3);
  CHECK(x.involution() == GroupRingElt::sigma_power(g, 5) + GroupRingElt::identity(g) * Rational(3));
  // psi_j(x(sigma^a)) = psi_{ja}(x)
  const GroupRingElt y = x.substitute_generator(3);
  for (const auto& psi : all_characters(g)) CHECK(char_eval(y, psi) == char_eval(x, Character(g, psi.j * 3)));
}
