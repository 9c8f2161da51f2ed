#include <random>

#include "doctest.h"
#include "etnc/cyclotomic.hpp"
#include "etnc/errors.hpp"

using namespace etnc;

namespace {

CycNum random_element(long m, std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)));
  for (auto& x : c) x = coeff(rng);
  return CycNum::from_poly(m, c);
}

Rational tol(long bits) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  return Rational(1, d);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(105).size() == 49);
  CHECK(cyclotomic_polynomial(105)[7] == -2);  // first coefficient of absolute value 2
}

TEST_CASE("roots of unity") {
  for (long m : {1L, 2L, 7L, 9L, 12L, 27L, 57L}) {
    CHECK(CycNum::zeta_power(m, 1).pow(m) == CycNum(m, 1));
    CHECK(CycNum::zeta_power(m, 3) * CycNum::zeta_power(m, -3) == CycNum(m, 1));
  }
  // 1 + zeta + ... + zeta^6 = 0 in Q(zeta_7)
  CycNum s(7);
  for (int k = 0; k < 7; ++k) s += CycNum::zeta_power(7, k);
  CHECK(s.is_zero());
  CHECK_THROWS_AS(CycNum(7) + CycNum(9), ModulusMismatch);
}

TEST_CASE("field operations agree with the complex embedding") {
  std::mt19937_64 rng(11);
  for (long m : {7L, 9L, 27L, 15L, 171L}) {
    for (int trial = 0; trial < 4; ++trial) {
      const CycNum a = random_element(m, rng);
      const CycNum b = random_element(m, rng);
      if (a.is_zero()) continue;
      for (long s : {1L, 2L, m - 1}) {
        if (gcd(s, m) != 1) continue;
        const BigComplex za = a.embed(s, 160), zb = b.embed(s, 160);
        CHECK(distance((a * b).embed(s, 160), za * zb).to_rational() < tol(120));
        CHECK(distance(a.galois(s).embed(160), za).to_rational() < tol(120));
        // Euclid over Q blows up coefficients in degree 108; inverses are only taken in p-power fields.
        if (a.degree() <= 60)
          CHECK(distance(a.inverse().embed(s, 160) * za, BigComplex(Rational(1), 160)).to_rational() < tol(100));
      }
      if (a.degree() <= 60) CHECK(a * a.inverse() == CycNum(m, 1));
      // trace = sum of conjugates
      BigComplex sum(160);
      for (long s = 1; s < m; ++s)
        if (gcd(s, m) == 1) sum += a.embed(s, 160);
      CHECK(distance(sum, BigComplex(a.trace(), 160)).to_rational() < tol(100));
    }
  }
}

TEST_CASE("lift and restrict") {
  const CycNum z3 = CycNum::zeta_power(3, 1);
  const CycNum lifted = z3.lift(9);
  CHECK(lifted == CycNum::zeta_power(9, 3));
  CHECK(lifted.restrict_to(3) == z3);
  CHECK_THROWS_AS(CycNum::zeta_power(9, 1).restrict_to(3), NotInSubfield);
  // Non-compatible modulus pair: Q(zeta_5) inside Q(zeta_15) where 3 does not divide 5.
  const CycNum z5 = CycNum::zeta_power(5, 2) + CycNum(5, Rational(1, 3));
  CHECK(z5.lift(15).restrict_to(5) == z5);
  CHECK_THROWS_AS(CycNum::zeta_power(15, 1).restrict_to(5), NotInSubfield);
  // Real subfield element restricts to Q.
  CHECK((CycNum::zeta_power(7, 1) + CycNum::zeta_power(7, 6)).is_rational() == false);
  CHECK(CycNum(7, Rational(2, 3)).lift(21).restrict_to(1) == CycNum(1, Rational(2, 3)));
}

TEST_CASE("valuation above p matches the norm") {
  std::mt19937_64 rng(5);
  const CycNum pi9 = CycNum(9, 1) - CycNum::zeta_power(9, 1);
  CHECK(pi9.valuation_above_p(3) == 1);
  CHECK(CycNum(9, 3).valuation_above_p(3) == 6);
  CHECK(CycNum(9, Rational(1, 3)).valuation_above_p(3) == -6);
  CHECK(pi9.pow(13).valuation_above_p(3) == 13);
  CHECK((CycNum(9, 1) - CycNum::zeta_power(9, 3)).valuation_above_p(3) == 3);
  CHECK((CycNum(9, 2) - CycNum::zeta_power(9, 3)).valuation_above_p(3) == 0);
  CHECK(CycNum(9).valuation_above_p(3) == kInfiniteValuation);
  CHECK_THROWS(CycNum(15, 1).valuation_above_p(3));
  // Elements divisible by large powers exercise the exact fallback.
  CHECK((pi9.pow(400) * CycNum(9, 5)).valuation_above_p(3) == 400);

  for (long m : {3L, 7L, 9L, 27L, 25L}) {
    const long p = prime_factors(m)[0];
    for (int trial = 0; trial < 25; ++trial) {
      CycNum a = random_element(m, rng, 40);
      if (a.is_zero()) continue;
      const CycNum pim = CycNum(m, 1) - CycNum::zeta_power(m, 1);
      a *= pim.pow(trial % 5);
      a *= Rational(1, 1 + trial % 4);
      CHECK(a.valuation_above_p(p) == padic_valuation(a.norm(), p));
    }
  }
}

TEST_CASE("determinant") {
  const long m = 7;
  const CycNum z = CycNum::zeta_power(m, 1);
  std::vector<std::vector<CycNum>> mat{{z, CycNum(m, 1)}, {CycNum(m, 1), z}};
  CHECK(determinant(mat, m) == z * z - CycNum(m, 1));
  std::vector<std::vector<CycNum>> singular{{z, z}, {z, z}};
  CHECK(determinant(singular, m).is_zero());
  std::vector<std::vector<CycNum>> swap{{CycNum(m), CycNum(m, 1)}, {CycNum(m, 1), CycNum(m)}};
  CHECK(determinant(swap, m) == CycNum(m, -1));
  CHECK(determinant({}, m) == CycNum(m, 1));
}

TEST_CASE("string form") {
  CHECK(CycNum(7, Rational(-9, 116)).to_string() == "-9/116");
  CHECK((CycNum::zeta_power(7, 3) - CycNum::zeta_power(7, 1) * Rational(2)).to_string() == "zeta7^3 - 2*zeta7");
  CHECK(CycNum(9).to_string() == "0");
}
