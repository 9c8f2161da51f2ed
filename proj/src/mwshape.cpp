#include "etnc/mwshape.hpp"

#include <sstream>

#include "etnc/errors.hpp"

namespace etnc {

PermShape::PermShape(const CyclicGroup& g, std::vector<long> multiplicities) : group(g), m(std::move(multiplicities)) {
  if (static_cast<int>(m.size()) != g.n + 1)
    throw NotPermutationShape(0, "expected " + std::to_string(g.n + 1) + " multiplicities, got " + std::to_string(m.size()));
  for (int t = 0; t <= g.n; ++t)
    if (m[static_cast<std::size_t>(t)] < 0) throw NotPermutationShape(t, "negative multiplicity");
}

std::string PermShape::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t t = 0; t < m.size(); ++t) out << (t ? "," : "") << m[t];
  out << ")";
  return out.str();
}

RankVector ranks_from_shape(const PermShape& shape) {
  const auto& g = shape.group;
  RankVector r(static_cast<std::size_t>(g.n) + 1, 0);
  for (int t = 0; t <= g.n; ++t) {
    long below = 0, above = 0;
    for (int s = 0; s < t; ++s) below += ipow(g.p, s) * shape.m_at(s);
    for (int s = t; s <= g.n; ++s) above += shape.m_at(s);
    r[static_cast<std::size_t>(t)] = below + ipow(g.p, t) * above;
  }
  return r;
}

PermShape shape_from_ranks(const CyclicGroup& g, const RankVector& r) {
  if (static_cast<int>(r.size()) != g.n + 1)
    throw NotPermutationShape(0, "expected " + std::to_string(g.n + 1) + " ranks, got " + std::to_string(r.size()));
  // S_t = sum_{s >= t} m_s is the multiplicity of each character of level t, so
  // r_t - r_{t-1} = (p^t - p^(t-1)) S_t. The offending level is that of the first bad m_t.
  std::vector<Rational> tail(static_cast<std::size_t>(g.n) + 2, Rational(0));
  for (int t = 0; t <= g.n; ++t) {
    const long diff = t == 0 ? r[0] : r[static_cast<std::size_t>(t)] - r[static_cast<std::size_t>(t - 1)];
    const long count = t == 0 ? 1 : ipow(g.p, t) - ipow(g.p, t - 1);
    tail[static_cast<std::size_t>(t)] = Rational(diff, count);
    tail[static_cast<std::size_t>(t)].canonicalize();
  }
  std::vector<long> m(static_cast<std::size_t>(g.n) + 1);
  for (int t = 0; t <= g.n; ++t) {
    Rational mt = tail[static_cast<std::size_t>(t)] - tail[static_cast<std::size_t>(t + 1)];
    if (mt.get_den() != 1) throw NotPermutationShape(t, "multiplicity " + to_string(mt) + " is not an integer");
    if (mt < 0) throw NotPermutationShape(t, "multiplicity " + to_string(mt) + " is negative");
    m[static_cast<std::size_t>(t)] = mt.get_num().get_si();
  }
  return PermShape(g, std::move(m));
}

long b_psi(const PermShape& shape, const Character& psi) {
  long b = 0;
  for (int s = 0; s < psi.level(); ++s) b += ipow(shape.group.p, s) * shape.m_at(s);
  return b;
}

long h_of(const PermShape& shape) {
  long h = 0;
  for (int t = 0; t < shape.group.n; ++t) h += shape.m_at(t);
  return h;
}

std::optional<int> t0_of(const PermShape& shape) {
  for (int t = shape.group.n - 1; t >= 0; --t)
    if (shape.m_at(t) != 0) return t;
  return std::nullopt;
}

long order_of_vanishing(const PermShape& shape, const Character& psi) {
  long r = 0;
  for (int t = psi.level(); t <= shape.group.n; ++t) r += shape.m_at(t);
  return r;
}

RankVector ranks_from_orders(const CyclicGroup& g, const std::vector<long>& orders) {
  if (static_cast<long>(orders.size()) != g.order())
    throw MissingData("expected " + std::to_string(g.order()) + " orders of vanishing, got " + std::to_string(orders.size()));
  RankVector r(static_cast<std::size_t>(g.n) + 1, 0);
  for (const auto& psi : all_characters(g))
    for (int t = psi.level(); t <= g.n; ++t) r[static_cast<std::size_t>(t)] += orders[static_cast<std::size_t>(psi.j)];
  return r;
}

}  // namespace etnc
