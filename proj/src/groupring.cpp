#include "etnc/groupring.hpp"

#include <algorithm>
#include <sstream>

#include "etnc/errors.hpp"

namespace etnc {

CyclicGroup::CyclicGroup(long prime, int exponent) : p(prime), n(exponent) {
  if (prime < 3 || !is_prime(prime)) throw Error("group order must be a power of an odd prime, got p = " + std::to_string(prime));
  if (exponent < 0) throw Error("negative group exponent");
}

Character::Character(const CyclicGroup& g, long index) : group(g), j(mod(index, g.order())) {}

int Character::level() const {
  if (j == 0) return 0;
  long x = j;
  int v = 0;
  while (x % group.p == 0) {
    x /= group.p;
    ++v;
  }
  return group.n - v;
}

long Character::reduced_index() const { return j / ipow(group.p, group.n - level()); }

CycNum Character::value_at(long i) const {
  return CycNum::zeta_power(value_modulus(), mod(reduced_index() * mod(i, value_modulus()), value_modulus()));
}

std::vector<Character> all_characters(const CyclicGroup& g) {
  std::vector<Character> out;
  for (long j = 0; j < g.order(); ++j) out.emplace_back(g, j);
  return out;
}

std::vector<std::vector<long>> galois_orbits(const CyclicGroup& g) {
  std::vector<std::vector<long>> orbits(static_cast<std::size_t>(g.n) + 1);
  for (long j = 0; j < g.order(); ++j) orbits[static_cast<std::size_t>(Character(g, j).level())].push_back(j);
  return orbits;
}

GroupRingElt::GroupRingElt(const CyclicGroup& g) : g_(g), c_(static_cast<std::size_t>(g.order()), Rational(0)) {}

GroupRingElt::GroupRingElt(const CyclicGroup& g, std::vector<Rational> coeffs) : g_(g), c_(std::move(coeffs)) {
  if (static_cast<long>(c_.size()) != g.order())
    throw GroupMismatch("expected " + std::to_string(g.order()) + " coefficients, got " + std::to_string(c_.size()));
}

GroupRingElt GroupRingElt::sigma_power(const CyclicGroup& g, long k) {
  GroupRingElt x(g);
  x.c_[static_cast<std::size_t>(mod(k, g.order()))] = 1;
  return x;
}

void GroupRingElt::check_group(const GroupRingElt& o) const {
  if (!(o.g_ == g_)) throw GroupMismatch("group ring elements over different groups");
}

Rational GroupRingElt::augmentation() const {
  Rational s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

bool GroupRingElt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool GroupRingElt::is_p_integral() const {
  return std::all_of(c_.begin(), c_.end(), [&](const Rational& x) { return etnc::is_p_integral(x, g_.p); });
}

GroupRingElt GroupRingElt::involution() const { return substitute_generator(-1); }

GroupRingElt GroupRingElt::substitute_generator(long a) const {
  if (gcd(a, g_.p) != 1) throw NotCoprime("generator exponent " + std::to_string(a) + " is divisible by p");
  GroupRingElt r(g_);
  const long order = g_.order();
  for (long i = 0; i < order; ++i) r.c_[static_cast<std::size_t>(mod(i * a, order))] = c_[static_cast<std::size_t>(i)];
  return r;
}

GroupRingElt GroupRingElt::operator-() const {
  GroupRingElt r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& o) {
  check_group(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& o) {
  check_group(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

GroupRingElt& GroupRingElt::operator*=(const GroupRingElt& o) {
  check_group(o);
  const std::size_t order = c_.size();
  std::vector<Rational> r(order, Rational(0));
  for (std::size_t i = 0; i < order; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t k = 0; k < order; ++k) {
      if (o.c_[k] == 0) continue;
      r[(i + k) % order] += c_[i] * o.c_[k];
    }
  }
  c_ = std::move(r);
  return *this;
}

GroupRingElt& GroupRingElt::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

GroupRingElt GroupRingElt::pow(long e) const {
  if (e < 0) throw Error("negative powers are not supported in Q[G]");
  GroupRingElt result = identity(g_);
  GroupRingElt base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string GroupRingElt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "sigma";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

GroupRingElt trace_elt(const CyclicGroup& g, int t) {
  if (t < 0 || t > g.n) throw Error("subgroup level out of range");
  GroupRingElt x(g);
  std::vector<Rational> c(static_cast<std::size_t>(g.order()), Rational(0));
  const long step = ipow(g.p, t);
  for (long k = 0; k < g.order(); k += step) c[static_cast<std::size_t>(k)] = 1;
  return GroupRingElt(g, std::move(c));
}

GroupRingElt sigma_power_minus_one(const CyclicGroup& g, int t) {
  return GroupRingElt::sigma_power(g, ipow(g.p, t)) - GroupRingElt::identity(g);
}

CycNum char_eval(const GroupRingElt& x, const Character& psi) {
  if (!(x.group() == psi.group)) throw GroupMismatch("character and element over different groups");
  const long m = psi.value_modulus();
  const long r = psi.reduced_index();
  std::vector<Rational> poly(static_cast<std::size_t>(m), Rational(0));
  const auto& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    poly[static_cast<std::size_t>(mod(r * static_cast<long>(i), m))] += c[i];
  }
  return CycNum::from_poly(m, std::move(poly));
}

bool InverseDftResult::all_recognized() const {
  return std::all_of(recognized.begin(), recognized.end(), [](bool b) { return b; });
}

InverseDftResult inverse_dft(const CyclicGroup& g, const std::vector<BigComplex>& values,
                             const Integer& denom_bound, const Rational& coeff_tol, Precision prec) {
  const long order = g.order();
  if (static_cast<long>(values.size()) != order)
    throw GroupMismatch("inverse_dft needs one value per character (" + std::to_string(order) + ")");
  const Precision work = prec + 32;
  std::vector<BigComplex> roots;
  roots.reserve(static_cast<std::size_t>(order));
  for (long k = 0; k < order; ++k) roots.push_back(BigComplex::root_of_unity(k, order, work));

  std::vector<Rational> coeffs(static_cast<std::size_t>(order));
  std::vector<bool> recognized(static_cast<std::size_t>(order));
  const BigFloat inv_order = BigFloat(Rational(1, order), work);
  for (long i = 0; i < order; ++i) {
    BigComplex acc(work);
    for (long j = 0; j < order; ++j) acc += values[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>(mod(-i * j, order))];
    const BigFloat c = acc.real() * inv_order;
    const RationalApprox approx = recognize_rational(c.to_rational(), coeff_tol, denom_bound);
    coeffs[static_cast<std::size_t>(i)] = approx.value;
    recognized[static_cast<std::size_t>(i)] = approx.within_tolerance;
  }
  GroupRingElt element(g, coeffs);

  BigFloat residual(work);
  for (long j = 0; j < order; ++j) {
    BigComplex v(work);
    for (long i = 0; i < order; ++i) {
      if (coeffs[static_cast<std::size_t>(i)] == 0) continue;
      v += roots[static_cast<std::size_t>(mod(i * j, order))] * BigFloat(coeffs[static_cast<std::size_t>(i)], work);
    }
    residual = max(residual, distance(v, values[static_cast<std::size_t>(j)]));
  }
  return {std::move(element), residual.with_precision(prec), std::move(recognized)};
}

GroupRingElt exact_inverse_dft(const CyclicGroup& g, const std::vector<CycNum>& values) {
  const long order = g.order();
  if (static_cast<long>(values.size()) != order)
    throw GroupMismatch("exact_inverse_dft needs one value per character (" + std::to_string(order) + ")");
  std::vector<Rational> coeffs(static_cast<std::size_t>(order), Rational(0));
  for (const auto& orbit : galois_orbits(g)) {
    const Character rep(g, orbit.front());
    const long m = rep.value_modulus();
    CycNum base;
    try {
      base = values[static_cast<std::size_t>(rep.j)].restrict_to(m);
    } catch (const NotInSubfield&) {
      throw GaloisIncompatible("value at character " + std::to_string(rep.j) + " does not lie in Q(zeta_" +
                               std::to_string(m) + ")");
    } catch (const ModulusMismatch&) {
      throw GaloisIncompatible("value at character " + std::to_string(rep.j) + " has modulus " +
                               std::to_string(values[static_cast<std::size_t>(rep.j)].modulus()) +
                               ", expected a multiple of " + std::to_string(m));
    }
    // psi_{j s} = gamma_s(psi_j) with s = (j s) / j computed on reduced indices.
    for (long j : orbit) {
      const Character psi(g, j);
      const long s = mod(psi.reduced_index() * inverse_mod(rep.reduced_index(), m), std::max<long>(m, 1));
      const CycNum expected = m == 1 ? base : base.galois(s);
      CycNum actual;
      try {
        actual = values[static_cast<std::size_t>(j)].restrict_to(m);
      } catch (const Error&) {
        throw GaloisIncompatible("value at character " + std::to_string(j) + " is not in Q(zeta_" + std::to_string(m) + ")");
      }
      if (actual != expected)
        throw GaloisIncompatible("values at characters " + std::to_string(rep.j) + " and " + std::to_string(j) +
                                 " are not Galois conjugate");
    }
    // Orbit contribution to c_i: Tr(base * zeta_m^(-i r)).
    for (long i = 0; i < order; ++i) {
      const CycNum term = base * CycNum::zeta_power(m, mod(-i * rep.reduced_index(), m));
      coeffs[static_cast<std::size_t>(i)] += term.trace();
    }
  }
  for (auto& c : coeffs) c /= order;
  return GroupRingElt(g, std::move(coeffs));
}

UnitVerdict is_zp_unit(const GroupRingElt& x) {
  const long p = x.group().p;
  UnitVerdict v;
  const auto& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!is_p_integral(c[i], p)) {
      v.bad_coefficient = static_cast<long>(i);
      v.witness = "coefficient of sigma^" + std::to_string(i) + " = " + c[i].get_str() + " is not " +
                  std::to_string(p) + "-integral";
      v.augmentation_valuation = padic_valuation(x.augmentation(), p);
      return v;
    }
  }
  v.augmentation_valuation = padic_valuation(x.augmentation(), p);
  v.unit = v.augmentation_valuation == 0;
  if (!v.unit) {
    v.witness = "augmentation " + x.augmentation().get_str() + " has " + std::to_string(p) + "-adic valuation " +
                (v.augmentation_valuation == kInfiniteValuation ? std::string("inf")
                                                                : std::to_string(v.augmentation_valuation));
  }
  return v;
}

bool ideal_power_membership(const GroupRingElt& x, int h) {
  if (h < 0) throw Error("negative ideal power");
  const CyclicGroup& g = x.group();
  if (!x.is_p_integral()) throw NonIntegral("element " + x.to_string() + " is not " + std::to_string(g.p) + "-integral");
  const long order = g.order();
  std::vector<Rational> y = x.coeffs();
  for (int level = 0; level < h; ++level) {
    Rational aug = 0;
    for (const auto& c : y) aug += c;
    if (aug != 0) return false;
    // (sigma - 1) z = y with z_i = -(y_0 + ... + y_i); z is integral whenever y is.
    Rational partial = 0;
    for (auto& c : y) {
      partial += c;
      c = -partial;
    }
    if (level + 1 == h) break;
    // z is unique up to Z_p * Tr_G; the next division needs augmentation zero.
    Rational zaug = 0;
    for (const auto& c : y) zaug += c;
    if (zaug != 0) {
      if (padic_valuation(zaug, g.p) < g.n) return false;
      const Rational shift = -zaug / order;
      for (auto& c : y) c += shift;
    }
  }
  return true;
}

int augmentation_order(const GroupRingElt& x, int cap) {
  int h = 0;
  while (h < cap && ideal_power_membership(x, h + 1)) ++h;
  return h;
}

}  // namespace etnc
