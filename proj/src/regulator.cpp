#include "etnc/regulator.hpp"

#include "etnc/errors.hpp"

namespace etnc {

std::vector<PointIndex> point_indices(const PermShape& shape) {
  std::vector<PointIndex> out;
  for (int t = 0; t <= shape.group.n; ++t)
    for (long k = 0; k < shape.m_at(t); ++k) out.push_back({t, static_cast<int>(k)});
  return out;
}

void HeightTable::validate() const {
  const auto idx = point_indices(shape);
  if (values.size() != idx.size())
    throw MissingData("height table has " + std::to_string(values.size()) + " rows, expected " + std::to_string(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (values[r].size() != idx.size())
      throw MissingData("height table row " + std::to_string(r) + " has " + std::to_string(values[r].size()) +
                        " columns, expected " + std::to_string(idx.size()));
    const std::size_t orbit = static_cast<std::size_t>(ipow(shape.group.p, idx[r].level));
    for (std::size_t c = 0; c < idx.size(); ++c)
      if (values[r][c].size() != orbit)
        throw MissingData("height entry (" + std::to_string(r) + "," + std::to_string(c) + ") has " +
                          std::to_string(values[r][c].size()) + " conjugate pairings, expected " + std::to_string(orbit));
  }
}

RegulatorMatrix RegulatorMatrix::build(const HeightTable& heights, Precision prec) {
  heights.validate();
  RegulatorMatrix R;
  R.shape_ = heights.shape;
  R.indices_ = point_indices(heights.shape);
  R.prec_ = prec;
  const auto& g = heights.shape.group;
  const long order = g.order();
  const std::size_t size = R.indices_.size();
  R.heights_.resize(size);
  R.coeffs_.resize(size);
  for (std::size_t r = 0; r < size; ++r) {
    const int u = R.indices_[r].level;
    const long orbit = ipow(g.p, u);
    const long sub = g.subgroup_order(u);
    const Rational scale(1, sub * sub);
    for (std::size_t c = 0; c < size; ++c) {
      std::vector<BigFloat> h;
      std::vector<BigFloat> coeffs(static_cast<std::size_t>(order), BigFloat(prec));
      for (long a = 0; a < orbit; ++a) {
        const Rational& value = heights.values[r][c][static_cast<std::size_t>(a)];
        h.emplace_back(value, prec);
        const BigFloat coefficient(value * scale, prec);
        for (long b = 0; b < sub; ++b) coeffs[static_cast<std::size_t>(a + orbit * b)] = coefficient;
      }
      R.heights_[r].push_back(std::move(h));
      R.coeffs_[r].push_back(std::move(coeffs));
    }
  }
  return R;
}

BigComplex RegulatorMatrix::psi_entry(std::size_t row, std::size_t col, const Character& psi) const {
  const int u = indices_[row].level;
  if (psi.level() > u) return BigComplex(prec_);
  const long orbit = ipow(shape_.group.p, u);
  const long pt = psi.value_modulus();
  BigComplex acc(prec_ + 16);
  for (long a = 0; a < orbit; ++a)
    acc += BigComplex::root_of_unity(mod(psi.reduced_index() * a, pt), pt, prec_ + 16) * heights_[row][col][static_cast<std::size_t>(a)];
  acc *= BigFloat(Rational(1, shape_.group.subgroup_order(u)), prec_ + 16);
  return acc.with_precision(prec_);
}

std::vector<std::vector<BigFloat>> RegulatorMatrix::trivial_character_matrix() const {
  std::vector<std::vector<BigFloat>> out(size(), std::vector<BigFloat>(size(), BigFloat(prec_)));
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c)
      for (const auto& x : coeffs_[r][c]) out[r][c] += x;
  return out;
}

std::vector<std::vector<BigFloat>> RegulatorMatrix::trace_averaged_gram() const {
  std::vector<std::vector<BigFloat>> out(size(), std::vector<BigFloat>(size(), BigFloat(prec_)));
  for (std::size_t r = 0; r < size(); ++r) {
    const BigFloat inv(Rational(1, shape_.group.subgroup_order(indices_[r].level)), prec_);
    for (std::size_t c = 0; c < size(); ++c) {
      for (const auto& h : heights_[r][c]) out[r][c] += h;
      out[r][c] *= inv;
    }
  }
  return out;
}

BigFloat RegulatorMatrix::component_defect() const {
  BigFloat worst(prec_);
  for (std::size_t r = 0; r < size(); ++r) {
    const long orbit = ipow(shape_.group.p, indices_[r].level);
    const long sub = shape_.group.subgroup_order(indices_[r].level);
    for (std::size_t c = 0; c < size(); ++c) {
      // e_{H_u} x averages the coefficients over each coset a + p^u Z.
      const auto& x = coeffs_[r][c];
      for (long a = 0; a < orbit; ++a) {
        BigFloat mean(prec_);
        for (long b = 0; b < sub; ++b) mean += x[static_cast<std::size_t>(a + orbit * b)];
        mean *= BigFloat(Rational(1, sub), prec_);
        for (long b = 0; b < sub; ++b) worst = max(worst, abs(x[static_cast<std::size_t>(a + orbit * b)] - mean));
      }
    }
  }
  return worst;
}

BigComplex complex_determinant(std::vector<std::vector<BigComplex>> m, Precision prec) {
  const std::size_t n = m.size();
  BigComplex det(Rational(1), prec);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    BigFloat best = m[col][col].norm();
    for (std::size_t r = col + 1; r < n; ++r) {
      const BigFloat v = m[r][col].norm();
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best.is_zero()) return BigComplex(prec);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const BigComplex f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

namespace {

BigComplex minor_det(const RegulatorMatrix& R, const Character& psi, int from_level) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < R.size(); ++i)
    if (R.indices()[i].level >= from_level) keep.push_back(i);
  std::vector<std::vector<BigComplex>> m(keep.size(), std::vector<BigComplex>(keep.size(), BigComplex(R.precision())));
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) m[r][c] = R.psi_entry(keep[r], keep[c], psi);
  return complex_determinant(std::move(m), R.precision());
}

}  // namespace

BigComplex lambda_psi(const RegulatorMatrix& R, const Character& psi, const BigFloat& degenerate_tol) {
  BigComplex lambda = minor_det(R, psi, psi.level());
  if (lambda.abs() <= degenerate_tol)
    throw RegulatorDegenerate(static_cast<int>(psi.j), "|lambda| = " + lambda.abs().to_string(6) +
                                                           " is below " + degenerate_tol.to_string(3));
  return lambda;
}

BigComplex full_determinant(const RegulatorMatrix& R, const Character& psi) { return minor_det(R, psi, 0); }

CycNum delta_psi(const PermShape& shape, const Character& psi) {
  const long m = psi.value_modulus();
  CycNum delta(m, 1);
  for (int t = 0; t < psi.level(); ++t) {
    if (shape.m_at(t) == 0) continue;
    // psi(sigma^(p^t)) - 1 = zeta_m^(reduced_index * p^t) - 1.
    const CycNum factor = CycNum::zeta_power(m, psi.reduced_index() * ipow(shape.group.p, t)) - CycNum(m, 1);
    delta *= factor.pow(shape.m_at(t));
  }
  return delta;
}

PhiMatrix PhiMatrix::make_identity(const PermShape& shape) {
  const auto idx = point_indices(shape);
  PhiMatrix phi;
  phi.identity = true;
  for (std::size_t r = 0; r < idx.size(); ++r) {
    phi.entries.emplace_back();
    for (std::size_t c = 0; c < idx.size(); ++c)
      phi.entries.back().push_back(r == c ? GroupRingElt::identity(shape.group) : GroupRingElt(shape.group));
  }
  return phi;
}

void PhiMatrix::validate(const PermShape& shape) const {
  const auto idx = point_indices(shape);
  if (entries.size() != idx.size()) throw InvalidPhi("Phi must be " + std::to_string(idx.size()) + " x " + std::to_string(idx.size()));
  const int n = shape.group.n;
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (entries[r].size() != idx.size()) throw InvalidPhi("Phi row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const GroupRingElt& x = entries[r][c];
      if (!(x.group() == shape.group)) throw InvalidPhi("Phi entry over the wrong group");
      if (!x.is_p_integral()) throw InvalidPhi("Phi entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not p-integral");
      const bool free_r = idx[r].level == n, free_c = idx[c].level == n;
      if (free_r || free_c) {
        const bool ok = (r == c) ? x == GroupRingElt::identity(shape.group) : x.is_zero();
        if (!ok)
          throw InvalidPhi("Phi entry (" + std::to_string(r) + "," + std::to_string(c) +
                           ") violates the identity block on the free part");
      }
    }
  }
}

CycNum epsilon_psi(const PhiMatrix& phi, const Character& psi, const PermShape& shape) {
  phi.validate(shape);
  const long m = psi.value_modulus();
  if (phi.identity) return CycNum(m, 1);
  const auto idx = point_indices(shape);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx[i].level >= psi.level()) keep.push_back(i);
  std::vector<std::vector<CycNum>> mat;
  for (std::size_t r : keep) {
    mat.emplace_back();
    for (std::size_t c : keep) mat.back().push_back(char_eval(phi.entries[r][c], psi));
  }
  CycNum eps = determinant(std::move(mat), m);
  const long v = eps.valuation_above_p(shape.group.p);
  if (v != 0)
    throw InvalidPhi("epsilon at character " + std::to_string(psi.j) + " = " + eps.to_string() +
                     " has valuation " + (v == kInfiniteValuation ? std::string("inf") : std::to_string(v)) + ", not a unit");
  return eps;
}

}  // namespace etnc
