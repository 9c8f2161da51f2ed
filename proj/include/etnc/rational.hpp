#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace etnc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Valuation of zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

long padic_valuation(const Integer& x, long p);
long padic_valuation(const Rational& x, long p);

/// True iff the denominator of x is prime to p.
bool is_p_integral(const Rational& x, long p);

/// Exact value of a decimal literal such as "-0.0775862068965517", "12", "1.5e-3".
Rational parse_decimal(std::string_view text);

/// Number of digits after the decimal point in a literal (exponent adjusted).
int decimal_places(std::string_view text);

std::string to_string(const Rational& x);

struct RationalApprox {
  Rational value;
  bool within_tolerance = false;
};

/// Walks the continued-fraction convergents of x and returns the first one within
/// `tol` of x whose denominator does not exceed `denom_bound`. If no convergent
/// qualifies, returns the last convergent under the bound with within_tolerance = false.
RationalApprox recognize_rational(const Rational& x, const Rational& tol, const Integer& denom_bound);

// Small-integer number theory.
bool is_prime(long n);
long euler_phi(long n);
int mobius(long n);
long ipow(long base, int exp);
long mod(long a, long m);
long gcd(long a, long b);
/// Inverse of a modulo m; throws NotCoprime if none exists.
long inverse_mod(long a, long m);
/// Smallest primitive root modulo the prime q.
long smallest_primitive_root(long q);
bool is_primitive_root(long g, long q);
/// Prime factors of n in increasing order, without multiplicity.
std::vector<long> prime_factors(long n);
/// If n = p^k for a prime p returns k, otherwise -1 (n = 1 gives 0).
int prime_power_exponent(long n, long p);

}  // namespace etnc
