#pragma once

#include <string>
#include <vector>

#include "etnc/bigfloat.hpp"
#include "etnc/rational.hpp"

namespace etnc {

/// The m-th cyclotomic polynomial as integer coefficients, constant term first.
/// Results are cached; the returned reference stays valid for the process lifetime.
const std::vector<long>& cyclotomic_polynomial(long m);

/// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1), always kept
/// reduced modulo the m-th cyclotomic polynomial. The fixed complex embedding sends
/// zeta_m to exp(2 pi i / m), so zeta_d = zeta_m^(m/d) for every d | m.
class CycNum {
 public:
  CycNum() : CycNum(1) {}
  /// Zero of Q(zeta_m).
  explicit CycNum(long modulus);
  CycNum(long modulus, const Rational& value);

  /// Reduces an arbitrary-length coefficient vector (index = exponent of zeta_m).
  static CycNum from_poly(long modulus, std::vector<Rational> poly);
  static CycNum zeta_power(long modulus, long exponent);

  long modulus() const { return m_; }
  /// phi(m).
  std::size_t degree() const { return c_.size(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  const Rational& rational_value() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rational& s);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const Rational& s) { return a *= s; }
  friend bool operator==(const CycNum& a, const CycNum& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum pow(long e) const;
  /// Multiplicative inverse via the extended gcd with the cyclotomic polynomial.
  CycNum inverse() const;
  /// Image under zeta -> zeta^s; s must be prime to m.
  CycNum galois(long s) const;
  /// Complex conjugate (s = -1).
  CycNum conj() const { return galois(-1); }

  /// Same element viewed in Q(zeta_target), target a multiple of m.
  CycNum lift(long target) const;
  /// Same element viewed in the subfield Q(zeta_target), target | m.
  /// Throws NotInSubfield if the element does not lie there.
  CycNum restrict_to(long target) const;

  /// Field norm to Q (product of all conjugates).
  Rational norm() const;
  /// Field trace to Q.
  Rational trace() const;

  /// Normalized valuation at the prime above p, with v(1 - zeta_{p^k}) = 1 and
  /// v(p) = phi(p^k). Requires m a power of p (or m in {1, 2}).
  long valuation_above_p(long p) const;

  /// Value at zeta_m = exp(2 pi i * root_index / m).
  BigComplex embed(long root_index, Precision prec) const;
  BigComplex embed(Precision prec) const { return embed(1, prec); }

  /// Human-readable form such as "zeta7^3 + zeta7^2 + zeta7" or "-9/116".
  std::string to_string() const;

 private:
  long m_;
  std::vector<Rational> c_;
};

/// Ring-element multiply for operands over possibly different moduli: both are lifted
/// to Q(zeta_lcm) first.
CycNum mul_lifted(const CycNum& a, const CycNum& b);
CycNum add_lifted(const CycNum& a, const CycNum& b);

/// Exact determinant of a square matrix over Q(zeta_m).
CycNum determinant(std::vector<std::vector<CycNum>> matrix, long modulus);

}  // namespace etnc
