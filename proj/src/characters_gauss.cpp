#include "etnc/characters_gauss.hpp"

#include "etnc/errors.hpp"

namespace etnc {

AbelianFieldSetup AbelianFieldSetup::over_Q(const CyclicGroup& g, long q, int dimension,
                                            std::optional<long> primitive_root) {
  if (!is_prime(q)) throw Error("conductor q = " + std::to_string(q) + " is not prime");
  if ((q - 1) % g.order() != 0)
    throw Error("q = " + std::to_string(q) + " is not 1 mod " + std::to_string(g.order()));
  AbelianFieldSetup s;
  s.group = g;
  s.q = q;
  s.dimension = dimension;
  s.primitive_root = primitive_root.value_or(smallest_primitive_root(q));
  if (!is_primitive_root(s.primitive_root, q))
    throw Error(std::to_string(s.primitive_root) + " is not a primitive root mod " + std::to_string(q));
  // q is totally ramified in Q(zeta_q), so its inertia group is all of G.
  s.ramified = {RamifiedPlace{std::to_string(q), 0, 0}};
  s.real_places = 1;
  s.complex_places = 0;
  s.abs_discriminant = 1;
  s.dlog_.assign(static_cast<std::size_t>(q), -1);
  long x = 1;
  for (long e = 0; e < q - 1; ++e) {
    s.dlog_[static_cast<std::size_t>(x)] = e;
    x = x * s.primitive_root % q;
  }
  return s;
}

long AbelianFieldSetup::discrete_log(long a) const {
  if (q == 0) throw MissingData("no Dirichlet model for a base field other than Q");
  const long r = mod(a, q);
  if (r == 0) throw NotCoprime(std::to_string(a) + " is divisible by q = " + std::to_string(q));
  return dlog_[static_cast<std::size_t>(r)];
}

GaussSumValue gauss_sum(const Character& psi, const AbelianFieldSetup& setup, Precision prec) {
  if (!setup.is_over_Q()) throw MissingData("Gauss sums are only computed for k = Q; supply tau* values instead");
  if (!(psi.group == setup.group)) throw GroupMismatch("character and field setup over different groups");
  if (psi.is_trivial()) return {CycNum(1, 1), BigComplex(Rational(1), prec), true};

  const long q = setup.q;
  const long pt = psi.value_modulus();
  const long modulus = q * pt;
  const long r = psi.reduced_index();
  // chi(a) zeta_q^a = zeta_M^(q r ind(a) + p^t a), M = q p^t.
  std::vector<Rational> poly(static_cast<std::size_t>(modulus), Rational(0));
  for (long a = 1; a < q; ++a)
    poly[static_cast<std::size_t>(mod(q * r * setup.discrete_log(a) + pt * a, modulus))] += 1;
  CycNum exact = CycNum::from_poly(modulus, std::move(poly));

  // Independent floating-point summation of the same character sum.
  const Precision work = prec + 32;
  BigComplex numeric(work);
  for (long a = 1; a < q; ++a) {
    const BigComplex chi = BigComplex::root_of_unity(mod(r * setup.discrete_log(a), pt), pt, work);
    numeric += chi * BigComplex::root_of_unity(a, q, work);
  }
  return {std::move(exact), numeric.with_precision(prec), true};
}

CycNum nonramified_characteristic(const Character& psi, const AbelianFieldSetup& setup) {
  const long m = psi.value_modulus();
  CycNum u(m, 1);
  for (const auto& place : setup.ramified) {
    if (psi.level() > place.inertia_level) continue;  // ramified character: u_v = 1
    u *= -psi.value_at(-place.frobenius);
  }
  return u;
}

GaussSumValue tau_star(const Character& psi, const AbelianFieldSetup& setup, Precision prec) {
  if (setup.supplied_tau_star) {
    const auto& v = *setup.supplied_tau_star;
    if (static_cast<long>(v.size()) != setup.group.order()) throw MissingData("supplied tau* values are incomplete");
    return {CycNum(1), v[static_cast<std::size_t>(psi.j)].with_precision(prec), false};
  }
  GaussSumValue tau = gauss_sum(psi, setup, prec);
  const CycNum u = nonramified_characteristic(psi, setup);
  const CycNum exact = mul_lifted(u, tau.exact);
  return {exact, exact.embed(prec), true};
}

BigComplex archimedean_constant(const AbelianFieldSetup& setup, Precision prec) {
  return BigComplex::i_power(setup.complex_places, prec);
}

}  // namespace etnc
