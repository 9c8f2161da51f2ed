#include "etnc/rational.hpp"

#include <cctype>

#include "etnc/errors.hpp"

namespace etnc {

long padic_valuation(const Integer& x, long p) {
  if (x == 0) return kInfiniteValuation;
  Integer y = abs(x);
  const Integer prime(p);
  long v = 0;
  while (mpz_divisible_p(y.get_mpz_t(), prime.get_mpz_t())) {
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), prime.get_mpz_t());
    ++v;
  }
  return v;
}

long padic_valuation(const Rational& x, long p) {
  if (x == 0) return kInfiniteValuation;
  return padic_valuation(Integer(x.get_num()), p) - padic_valuation(Integer(x.get_den()), p);
}

bool is_p_integral(const Rational& x, long p) {
  return mpz_divisible_ui_p(x.get_den_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

Rational parse_decimal(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (i == end) throw ParseError("empty decimal literal");

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < end; ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw ParseError("invalid character in decimal literal '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw ParseError("no digits in decimal literal '" + std::string(text) + "'");
  if (i < end) {
    ++i;
    std::string exponent(text.substr(i, end - i));
    if (exponent.empty()) throw ParseError("missing exponent in '" + std::string(text) + "'");
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exponent, &used);
    } catch (const std::exception&) {
      throw ParseError("invalid exponent in '" + std::string(text) + "'");
    }
    if (used != exponent.size()) throw ParseError("invalid exponent in '" + std::string(text) + "'");
    scale -= e;
  }
  Integer numerator(digits, 10);
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale >= 0 ? scale : -scale));
  Rational result = scale >= 0 ? Rational(numerator, power) : Rational(numerator * power);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

int decimal_places(std::string_view text) {
  int places = 0;
  bool seen_point = false;
  long exponent = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (seen_point) ++places;
    } else if (c == 'e' || c == 'E') {
      exponent = std::stol(std::string(text.substr(i + 1)));
      break;
    }
  }
  return static_cast<int>(places - exponent);
}

std::string to_string(const Rational& x) { return x.get_str(); }

RationalApprox recognize_rational(const Rational& x, const Rational& tol, const Integer& denom_bound) {
  // Convergents h_k/k_k of the continued fraction of x.
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  Integer num = x.get_num();
  Integer den = x.get_den();
  RationalApprox best{Rational(0), false};
  bool have_any = false;
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const Integer h = a * h_prev + h_prev2;
    const Integer k = a * k_prev + k_prev2;
    if (k > denom_bound) break;
    Rational candidate(h, k);
    candidate.canonicalize();
    best.value = candidate;
    have_any = true;
    if (abs(x - candidate) <= tol) {
      best.within_tolerance = true;
      return best;
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const Integer r = num - a * den;
    num = den;
    den = r;
  }
  if (!have_any) best.value = 0;
  best.within_tolerance = abs(x - best.value) <= tol;
  return best;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long euler_phi(long n) {
  long result = n;
  for (long f : prime_factors(n)) result = result / f * (f - 1);
  return result;
}

int mobius(long n) {
  int sign = 1;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

long gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long inverse_mod(long a, long m) {
  long old_r = mod(a, m), r = m;
  long old_s = 1, s = 0;
  while (r != 0) {
    const long q = old_r / r;
    long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1 && m != 1) throw NotCoprime(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  return mod(old_s, m);
}

bool is_primitive_root(long g, long q) {
  if (gcd(g, q) != 1) return false;
  const long order = q - 1;
  for (long f : prime_factors(order)) {
    long x = 1;
    const long e = order / f;
    long base = mod(g, q);
    long k = e;
    while (k > 0) {
      if (k & 1) x = x * base % q;
      base = base * base % q;
      k >>= 1;
    }
    if (x == 1) return false;
  }
  return true;
}

long smallest_primitive_root(long q) {
  for (long g = 2; g < q; ++g)
    if (is_primitive_root(g, q)) return g;
  return 1;  // q = 2
}

int prime_power_exponent(long n, long p) {
  if (n < 1) return -1;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : -1;
}

}  // namespace etnc
