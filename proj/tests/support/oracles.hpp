#pragma once

// Independent reference implementations used only by tests. They share no code
// paths with the library algorithms they check.

#include <optional>
#include <vector>

#include "etnc/groupring.hpp"

namespace oracle {

using etnc::Integer;
using etnc::Rational;

// Row-style Hermite normal form of an integer lattice (rows are generators).
// Returns the nonzero rows in echelon form with positive pivots.
inline std::vector<std::vector<Integer>> hermite_rows(std::vector<std::vector<Integer>> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= q * rows[r][k];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (auto& v : rows[r]) v = -v;
      for (std::size_t i = 0; i < r; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= q * rows[r][k];
      }
      ++r;
    }
  }
  rows.resize(r);
  return rows;
}

// x in (sigma-1)^h Z_p[G]: x must be a Q-combination of the HNF basis of the Z-span of
// {(sigma-1)^h sigma^i}, with p-integral coordinates.
inline bool hnf_membership(const etnc::GroupRingElt& x, int h) {
  const auto& g = x.group();
  const std::size_t order = static_cast<std::size_t>(g.order());
  const etnc::GroupRingElt base = (etnc::GroupRingElt::sigma_power(g, 1) - etnc::GroupRingElt::identity(g)).pow(h);
  std::vector<std::vector<Integer>> gens;
  for (long i = 0; i < g.order(); ++i) {
    const etnc::GroupRingElt v = base * etnc::GroupRingElt::sigma_power(g, i);
    std::vector<Integer> row;
    for (const auto& c : v.coeffs()) row.push_back(c.get_num());
    gens.push_back(row);
  }
  const auto basis = hermite_rows(gens, order);
  std::vector<Rational> rest = x.coeffs();
  for (const auto& row : basis) {
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    const Rational coord = rest[pivot] / Rational(row[pivot]);
    if (!etnc::is_p_integral(coord, g.p)) return false;
    for (std::size_t k = pivot; k < order; ++k) rest[k] -= coord * Rational(row[k]);
  }
  for (const auto& c : rest)
    if (c != 0) return false;
  return true;
}

// Solves x*y = 1 by Gaussian elimination on the circulant matrix of x.
inline std::optional<etnc::GroupRingElt> exact_inverse(const etnc::GroupRingElt& x) {
  const auto& g = x.group();
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) a[row][col] = x.coeffs()[(row + n - col) % n];
    a[row][n] = row == 0 ? 1 : 0;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<Rational> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = a[i][n] / a[i][i];
  return etnc::GroupRingElt(g, y);
}

inline bool brute_unit(const etnc::GroupRingElt& x) {
  if (!x.is_p_integral()) return false;
  const auto inv = exact_inverse(x);
  return inv && inv->is_p_integral();
}

// Multiplicities from first differences: with M_t = sum_{s >= t} m_s one has
// r_0 = M_0 and r_t - r_{t-1} = (p^t - p^(t-1)) M_t. Returns the first level whose
// multiplicity is negative or non-integral, or nothing if the ranks come from a shape.
inline std::optional<int> shape_defect(long p, const std::vector<long>& r, std::vector<Rational>* m_out = nullptr) {
  const std::size_t n = r.size() - 1;
  std::vector<Rational> M(n + 2, Rational(0));
  M[0] = r[0];
  Rational pt = 1;
  for (std::size_t t = 1; t <= n; ++t) {
    const Rational prev = pt;
    pt *= p;
    M[t] = Rational(r[t] - r[t - 1]) / (pt - prev);
  }
  std::vector<Rational> m(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    m[t] = M[t] - M[t + 1];
    m[t].canonicalize();
  }
  if (m_out) *m_out = m;
  for (std::size_t t = 0; t <= n; ++t)
    if (m[t] < 0 || m[t].get_den() != 1) return static_cast<int>(t);
  return std::nullopt;
}

}  // namespace oracle
