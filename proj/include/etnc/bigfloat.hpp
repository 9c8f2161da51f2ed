#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "etnc/rational.hpp"

namespace etnc {

using Precision = mpfr_prec_t;

inline constexpr Precision kMinPrecision = 64;
inline constexpr Precision kDefaultPrecision = 192;

/// Arbitrary-precision real number (RAII wrapper over an MPFR value).
///
/// Binary operations return a value carrying the larger of the two operand
/// precisions, so a computation never drops below the precision of its inputs.
class BigFloat {
 public:
  explicit BigFloat(Precision prec = kDefaultPrecision);
  BigFloat(long value, Precision prec);
  BigFloat(const Rational& value, Precision prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_decimal(std::string_view text, Precision prec);
  static BigFloat pi(Precision prec);
  /// 2^e at the given precision.
  static BigFloat exp2(long e, Precision prec);

  Precision precision() const { return mpfr_get_prec(v_); }
  /// Same value rounded to a new precision (may raise or lower it; explicit only).
  BigFloat with_precision(Precision prec) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Exact rational value of this binary float.
  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;
  std::string to_string(int digits) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat sin(const BigFloat& x);
  friend BigFloat cos(const BigFloat& x);
  friend BigFloat max(const BigFloat& a, const BigFloat& b);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

/// Complex number with BigFloat parts; both parts share one precision.
class BigComplex {
 public:
  explicit BigComplex(Precision prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im);
  BigComplex(const Rational& re, Precision prec) : re_(re, prec), im_(prec) {}

  static BigComplex from_decimal(std::string_view re, std::string_view im, Precision prec);
  /// exp(2 pi i * num / den).
  static BigComplex root_of_unity(long num, long den, Precision prec);
  static BigComplex i_power(long k, Precision prec);

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  Precision precision() const { return re_.precision(); }
  BigComplex with_precision(Precision prec) const;

  BigComplex conj() const { return {re_, -im_}; }
  /// |z|^2.
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const { return sqrt(norm()); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::string to_string(int digits) const;

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& s);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& s) { return a *= s; }

 private:
  BigFloat re_;
  BigFloat im_;
};

/// |a - b|.
BigFloat distance(const BigComplex& a, const BigComplex& b);

}  // namespace etnc
