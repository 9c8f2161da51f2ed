#include "doctest.h"
#include "etnc/characters_gauss.hpp"
#include "etnc/errors.hpp"

using namespace etnc;

namespace {

Rational two_power(long e) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return Rational(1, d);
}

}  // namespace

TEST_CASE("setup over Q") {
  const auto s = AbelianFieldSetup::over_Q(CyclicGroup(7, 1), 29, 1);
  CHECK(s.primitive_root == 2);
  CHECK(s.discrete_log(2) == 1);
  CHECK(s.discrete_log(1) == 0);
  CHECK(s.group_image(8) == 3);
  CHECK_THROWS(AbelianFieldSetup::over_Q(CyclicGroup(7, 1), 31, 1));
  CHECK_THROWS(AbelianFieldSetup::over_Q(CyclicGroup(3, 2), 19, 1, 7));  // 7 has order 3 mod 19
}

TEST_CASE("Gauss sums: |tau|^2 = q exactly and numerically") {
  for (auto [p, n, q] : {std::tuple{3L, 2, 19L}, {7L, 1, 29L}, {3L, 2, 37L}, {7L, 1, 43L}, {3L, 1, 7L}}) {
    const CyclicGroup g(p, n);
    const auto s = AbelianFieldSetup::over_Q(g, q, 1);
    for (const auto& psi : all_characters(g)) {
      const auto tau = gauss_sum(psi, s, 192);
      if (psi.is_trivial()) {
        CHECK(tau.exact == CycNum(1, 1));
        continue;
      }
      CHECK(tau.exact * tau.exact.conj() == CycNum(tau.exact.modulus(), q));
      CHECK(distance(tau.exact.embed(192), tau.numeric).to_rational() < two_power(184));
      CHECK(abs(tau.numeric.norm() - BigFloat(q, 192)).to_rational() < two_power(170));
    }
  }
}

TEST_CASE("cubic character mod 7") {
  // chi(3) = zeta_3: 3 is the smallest primitive root mod 7, so chi = chi_1 for p = 3, n = 1.
  const CyclicGroup g(3, 1);
  const auto s = AbelianFieldSetup::over_Q(g, 7, 1);
  CHECK(s.primitive_root == 3);
  const auto tau = gauss_sum(Character(g, 1), s, 192);
  // Direct 192-bit evaluation of sum chi(a) e^(2 pi i a / 7).
  BigComplex direct(224);
  for (long a = 1; a < 7; ++a)
    direct += BigComplex::root_of_unity(s.discrete_log(a), 3, 224) * BigComplex::root_of_unity(a, 7, 224);
  CHECK(distance(tau.exact.embed(192), direct).to_rational() < two_power(180));
}

TEST_CASE("Galois equivariance of Gauss sums") {
  const CyclicGroup g(3, 2);
  const long q = 37;
  const auto s = AbelianFieldSetup::over_Q(g, q, 1);
  const auto tau1 = gauss_sum(Character(g, 1), s, 128);
  for (long a : {2L, 4L, 5L, 7L, 8L}) {
    // sigma_a' on Q(zeta_{9q}) with a' = a mod 9, a' = 1 mod q.
    long a_prime = 0;
    for (long x = 1; x < 9 * q; ++x)
      if (x % 9 == a && x % q == 1) a_prime = x;
    CHECK(gauss_sum(Character(g, a), s, 128).exact == tau1.exact.galois(a_prime));
  }
}

TEST_CASE("non-ramified characteristic") {
  const CyclicGroup g(3, 2);
  const auto s = AbelianFieldSetup::over_Q(g, 19, 1);
  CHECK(nonramified_characteristic(Character(g, 0), s) == CycNum(1, -1));
  CHECK(nonramified_characteristic(Character(g, 4), s) == CycNum(9, 1));
  // Two places, each with inertia H_1 and Frobenius sigma resp. sigma^2.
  AbelianFieldSetup two = s;
  two.ramified = {{"v1", 1, 1}, {"v2", 1, 2}};
  const Character psi(g, 3);  // level 1: trivial on H_1
  CHECK(nonramified_characteristic(psi, two) == psi.value_at(-1) * psi.value_at(-2));
  CHECK(nonramified_characteristic(Character(g, 1), two) == CycNum(9, 1));
}

TEST_CASE("tau star and archimedean constant") {
  const CyclicGroup g(7, 1);
  const auto s = AbelianFieldSetup::over_Q(g, 29, 1);
  const auto t1 = tau_star(Character(g, 0), s, 128);
  const BigComplex ratio = t1.numeric / archimedean_constant(s, 128);
  CHECK(distance(ratio, BigComplex(Rational(-1), 128)).to_rational() < two_power(120));
  const auto t3 = tau_star(Character(g, 3), s, 192);
  CHECK(abs(t3.numeric.norm() - BigFloat(29, 192)).to_rational() < two_power(170));
  CHECK(distance(archimedean_constant(s, 64), BigComplex(Rational(1), 64)).is_zero());
  AbelianFieldSetup general;
  general.group = g;
  CHECK_THROWS_AS(tau_star(Character(g, 1), general, 64), MissingData);
}
