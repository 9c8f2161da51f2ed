#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etnc/bigfloat.hpp"
#include "etnc/cyclotomic.hpp"
#include "etnc/groupring.hpp"

namespace etnc {

/// A place of k ramifying in F. Its inertia group is H_inertia_level (so psi is
/// unramified there iff t_psi <= inertia_level) and Fr_v = sigma^frobenius in G/H_inertia_level.
struct RamifiedPlace {
  std::string label;
  int inertia_level = 0;
  long frobenius = 0;
};

/// Galois data for F/k. For k = Q and F inside Q(zeta_q) the Dirichlet model is used:
/// the primitive root g mod q maps to sigma, so psi_j corresponds to
/// chi_j(a) = zeta_{p^t}^(j' * ind_g(a)) with j' = psi_j.reduced_index().
struct AbelianFieldSetup {
  CyclicGroup group;
  long q = 0;  // 0 when k != Q (Gauss sums must then be supplied)
  long primitive_root = 0;
  int dimension = 1;
  std::vector<RamifiedPlace> ramified;
  int real_places = 1;
  int complex_places = 0;
  Integer abs_discriminant = 1;
  /// Supplied tau*(psi_j) values for k != Q, indexed by j.
  std::optional<std::vector<BigComplex>> supplied_tau_star;

  /// F = the degree-p^n subfield of Q(zeta_q). Throws if q is not a prime = 1 mod p^n or
  /// the given primitive root is not one.
  static AbelianFieldSetup over_Q(const CyclicGroup& g, long q, int dimension, std::optional<long> primitive_root = {});

  bool is_over_Q() const { return q != 0; }
  /// ind_g(a) for a prime to q.
  long discrete_log(long a) const;
  /// Image of a in G as an exponent of sigma.
  long group_image(long a) const { return mod(discrete_log(a), group.order()); }

 private:
  std::vector<long> dlog_;
};

struct GaussSumValue {
  CycNum exact;        // in Q(zeta_{q p^t}); empty (modulus 1, zero) when only numeric is known
  BigComplex numeric;
  bool has_exact = true;
};

/// tau(chi) = sum_{a mod q} chi(a) zeta_q^a; trivial character gives 1.
GaussSumValue gauss_sum(const Character& psi, const AbelianFieldSetup& setup, Precision prec);

/// u(psi) = prod_v u_v(psi), u_v(psi) = -psi(Fr_v^-1) if psi is trivial on inertia at v, else 1.
CycNum nonramified_characteristic(const Character& psi, const AbelianFieldSetup& setup);

/// tau*(psi) = u(psi) tau(psi), or the supplied value when k != Q.
GaussSumValue tau_star(const Character& psi, const AbelianFieldSetup& setup, Precision prec);

/// w_infinity(k) = i^(number of complex places).
BigComplex archimedean_constant(const AbelianFieldSetup& setup, Precision prec);

}  // namespace etnc
