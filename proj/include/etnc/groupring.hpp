#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etnc/bigfloat.hpp"
#include "etnc/cyclotomic.hpp"
#include "etnc/rational.hpp"

namespace etnc {

/// Cyclic group G = <sigma> of order p^n, p odd. H_t = <sigma^(p^t)> has order p^(n-t).
struct CyclicGroup {
  long p = 3;
  int n = 1;

  CyclicGroup() = default;
  CyclicGroup(long prime, int exponent);

  long order() const { return ipow(p, n); }
  /// |H_t| = p^(n-t).
  long subgroup_order(int t) const { return ipow(p, n - t); }
  friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;
};

/// psi_j(sigma) = zeta_{p^n}^j.
struct Character {
  CyclicGroup group;
  long j = 0;

  Character() = default;
  Character(const CyclicGroup& g, long index);

  /// t_psi: ker(psi) = H_t, order of psi is p^t.
  int level() const;
  /// p^(t_psi), the conductor of the value field Q(psi).
  long value_modulus() const { return ipow(group.p, level()); }
  /// j / p^(n - t_psi): psi(sigma) = zeta_{p^t}^reduced_index.
  long reduced_index() const;
  bool is_trivial() const { return j == 0; }
  Character contragredient() const { return Character(group, mod(-j, group.order())); }
  /// psi(sigma^i) in Q(zeta_{p^t}).
  CycNum value_at(long i) const;
};

std::vector<Character> all_characters(const CyclicGroup& g);

/// Galois orbits of characters; orbits are exactly the levels t = 0..n.
/// Each orbit is listed in increasing j, so front() is the smallest index.
std::vector<std::vector<long>> galois_orbits(const CyclicGroup& g);

/// Element of Q[G]; coefficient of sigma^i at index i.
class GroupRingElt {
 public:
  explicit GroupRingElt(const CyclicGroup& g);
  GroupRingElt(const CyclicGroup& g, std::vector<Rational> coeffs);

  static GroupRingElt identity(const CyclicGroup& g) { return sigma_power(g, 0); }
  static GroupRingElt sigma_power(const CyclicGroup& g, long k);

  const CyclicGroup& group() const { return g_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](long i) const { return c_[static_cast<std::size_t>(mod(i, g_.order()))]; }

  Rational augmentation() const;
  bool is_zero() const;
  bool is_p_integral() const;
  /// sigma -> sigma^(-1).
  GroupRingElt involution() const;
  /// Ring automorphism sigma -> sigma^a (a prime to p).
  GroupRingElt substitute_generator(long a) const;

  GroupRingElt operator-() const;
  GroupRingElt& operator+=(const GroupRingElt& o);
  GroupRingElt& operator-=(const GroupRingElt& o);
  GroupRingElt& operator*=(const GroupRingElt& o);
  GroupRingElt& operator*=(const Rational& s);
  friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
  friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
  friend GroupRingElt operator*(GroupRingElt a, const GroupRingElt& b) { return a *= b; }
  friend GroupRingElt operator*(GroupRingElt a, const Rational& s) { return a *= s; }
  friend bool operator==(const GroupRingElt& a, const GroupRingElt& b) { return a.g_ == b.g_ && a.c_ == b.c_; }
  friend bool operator!=(const GroupRingElt& a, const GroupRingElt& b) { return !(a == b); }

  GroupRingElt pow(long e) const;

  /// e.g. "-sigma + 2*sigma^2 - sigma^3"
  std::string to_string() const;

 private:
  void check_group(const GroupRingElt& o) const;

  CyclicGroup g_;
  std::vector<Rational> c_;
};

/// Tr_{H_t} = sum of the elements of H_t.
GroupRingElt trace_elt(const CyclicGroup& g, int t);
/// sigma^(p^t) - 1.
GroupRingElt sigma_power_minus_one(const CyclicGroup& g, int t);

/// psi(x) in Q(zeta_{p^t_psi}).
CycNum char_eval(const GroupRingElt& x, const Character& psi);

struct InverseDftResult {
  GroupRingElt element;
  /// max over characters of |value - psi(element)|.
  BigFloat residual;
  /// Per coefficient: whether a convergent within the coefficient tolerance was found.
  std::vector<bool> recognized;
  bool all_recognized() const;
};

/// Numeric inverse Fourier transform. values[j] is the value at psi_j. Each coefficient
/// (1/N) sum_j values[j] * zeta^(-ij) is rounded to the first continued-fraction convergent
/// within coeff_tol with denominator <= denom_bound.
InverseDftResult inverse_dft(const CyclicGroup& g, const std::vector<BigComplex>& values,
                             const Integer& denom_bound, const Rational& coeff_tol, Precision prec);

/// Exact inverse transform of a Galois-equivariant family values[j] in Q(zeta_{p^t_j}).
/// Throws GaloisIncompatible if values[j*s] != gamma_s(values[j]) for some j, s.
GroupRingElt exact_inverse_dft(const CyclicGroup& g, const std::vector<CycNum>& values);

struct UnitVerdict {
  bool unit = false;
  /// Index of a coefficient that is not p-integral, if any.
  std::optional<long> bad_coefficient;
  /// v_p of the augmentation (kInfiniteValuation for zero).
  long augmentation_valuation = 0;
  std::string witness;
};

/// Z_p[G] is local, so x is a unit iff x is p-integral with augmentation a p-adic unit.
UnitVerdict is_zp_unit(const GroupRingElt& x);

/// Whether x lies in I_{G,p}^h = (sigma - 1)^h Z_p[G]. Throws NonIntegral if x is not p-integral.
bool ideal_power_membership(const GroupRingElt& x, int h);

/// Largest h <= cap with x in I^h (cap returned when x is zero).
int augmentation_order(const GroupRingElt& x, int cap);

}  // namespace etnc
