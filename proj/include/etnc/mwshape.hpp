#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etnc/groupring.hpp"

namespace etnc {

/// Multiplicities m_t in A(F)_p = (+)_t Z_p[G/H_t]^(m_t), t = 0..n.
struct PermShape {
  CyclicGroup group;
  std::vector<long> m;

  PermShape() = default;
  PermShape(const CyclicGroup& g, std::vector<long> multiplicities);
  long m_at(int t) const { return m[static_cast<std::size_t>(t)]; }
  std::string to_string() const;
  friend bool operator==(const PermShape&, const PermShape&) = default;
};

/// r_t = rank of A(F^(H_t)), t = 0..n.
using RankVector = std::vector<long>;

RankVector ranks_from_shape(const PermShape& shape);

/// Inverts ranks_from_shape. Throws NotPermutationShape naming the first level whose
/// multiplicity is negative or non-integral.
PermShape shape_from_ranks(const CyclicGroup& g, const RankVector& r);

/// b_psi = sum_{s < t_psi} p^s m_s.
long b_psi(const PermShape& shape, const Character& psi);
/// h = sum_{t < n} m_t.
long h_of(const PermShape& shape);
/// max{t < n : m_t != 0}, or nothing if all of m_0..m_{n-1} vanish.
std::optional<int> t0_of(const PermShape& shape);

/// Multiplicity of psi in Q_p (x) A(F): sum_{t >= t_psi} m_t (the predicted order of vanishing).
long order_of_vanishing(const PermShape& shape, const Character& psi);
/// r_t = sum over psi with t_psi <= t of orders[j].
RankVector ranks_from_orders(const CyclicGroup& g, const std::vector<long>& orders);

}  // namespace etnc
