#include "etnc/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "etnc/errors.hpp"

namespace etnc {

namespace {

Precision checked(Precision prec) {
  if (prec < kMinPrecision) throw Error("precision below " + std::to_string(kMinPrecision) + " bits");
  return prec;
}

// Raises the precision of `target` to at least `prec`, keeping its value.
void widen(mpfr_ptr target, Precision prec) {
  if (mpfr_get_prec(target) < prec) mpfr_prec_round(target, prec, MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, Precision prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, Precision prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_decimal(std::string_view text, Precision prec) {
  return BigFloat(parse_decimal(text), prec);
}

BigFloat BigFloat::pi(Precision prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp2(long e, Precision prec) {
  BigFloat r(1, prec);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::with_precision(Precision prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(v_)) throw Error("non-finite value cannot be converted to a rational");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  q.canonicalize();
  return q;
}

long BigFloat::exponent() const {
  if (is_zero()) return -(1L << 40);
  return mpfr_get_exp(v_);
}

std::string BigFloat::to_string(int digits) const {
  if (!mpfr_number_p(v_)) return "nan";
  char* buffer = nullptr;
  const std::string fmt = "%." + std::to_string(std::max(1, digits)) + "Rg";
  mpfr_asprintf(&buffer, fmt.c_str(), v_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(v_, o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(v_, o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(v_, o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.is_zero()) throw DivisionByZero("BigFloat division by zero");
  widen(v_, o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  const Precision p = std::max(re_.precision(), im_.precision());
  if (re_.precision() < p) re_ = re_.with_precision(p);
  if (im_.precision() < p) im_ = im_.with_precision(p);
}

BigComplex BigComplex::from_decimal(std::string_view re, std::string_view im, Precision prec) {
  return {BigFloat::from_decimal(re, prec), BigFloat::from_decimal(im, prec)};
}

BigComplex BigComplex::root_of_unity(long num, long den, Precision prec) {
  num = mod(num, den);
  // Exact values on the axes keep rational embeddings exact.
  if (num == 0) return {BigFloat(1, prec), BigFloat(prec)};
  if (2 * num == den) return {BigFloat(-1, prec), BigFloat(prec)};
  if (4 * num == den) return {BigFloat(prec), BigFloat(1, prec)};
  if (4 * num == 3 * den) return {BigFloat(prec), BigFloat(-1, prec)};
  const Precision work = prec + 16;
  BigFloat angle = BigFloat::pi(work) * BigFloat(Rational(2 * num, den), work);
  return {cos(angle).with_precision(prec), sin(angle).with_precision(prec)};
}

BigComplex BigComplex::i_power(long k, Precision prec) {
  switch (mod(k, 4)) {
    case 0:
      return {BigFloat(1, prec), BigFloat(prec)};
    case 1:
      return {BigFloat(prec), BigFloat(1, prec)};
    case 2:
      return {BigFloat(-1, prec), BigFloat(prec)};
    default:
      return {BigFloat(prec), BigFloat(-1, prec)};
  }
}

BigComplex BigComplex::with_precision(Precision prec) const {
  return {re_.with_precision(prec), im_.with_precision(prec)};
}

std::string BigComplex::to_string(int digits) const {
  std::ostringstream out;
  out << re_.to_string(digits);
  if (im_.sign() < 0) {
    out << " - " << etnc::abs(im_).to_string(digits) << "i";
  } else {
    out << " + " << im_.to_string(digits) << "i";
  }
  return out.str();
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat re = re_ * o.re_ - im_ * o.im_;
  BigFloat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  const BigFloat denom = o.norm();
  if (denom.is_zero()) throw DivisionByZero("BigComplex division by zero");
  BigFloat re = (re_ * o.re_ + im_ * o.im_) / denom;
  BigFloat im = (im_ * o.re_ - re_ * o.im_) / denom;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

BigFloat distance(const BigComplex& a, const BigComplex& b) { return (a - b).abs(); }

}  // namespace etnc
