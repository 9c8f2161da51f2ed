#pragma once

#include <string>
#include <vector>

#include "etnc/bigfloat.hpp"
#include "etnc/cyclotomic.hpp"
#include "etnc/groupring.hpp"
#include "etnc/mwshape.hpp"

namespace etnc {

/// Index (t, j) of a point P_(t,j) generating a Z_p[G/H_t] summand. The full index set is
/// ordered lexicographically.
struct PointIndex {
  int level = 0;
  int k = 0;
  friend bool operator==(const PointIndex&, const PointIndex&) = default;
};

std::vector<PointIndex> point_indices(const PermShape& shape);

/// Neron-Tate pairings <sigma^a P_(u,k), P^t_(t,j)>_F for a in [0, p^u).
/// values[row][col][a] with rows/cols following point_indices().
struct HeightTable {
  PermShape shape;
  std::vector<std::vector<std::vector<Rational>>> values;
  int digits = 30;

  /// Throws MissingData naming the first incomplete entry.
  void validate() const;
};

/// R(P, P^t): entry (u,k),(t,j) = (1/|H_u|) sum_{a < p^u} <sigma^a P_(u,k), P^t_(t,j)> sigma^a e_{H_u}.
/// Heights are real, so group-ring coefficients are stored as BigFloat.
class RegulatorMatrix {
 public:
  static RegulatorMatrix build(const HeightTable& heights, Precision prec);

  const PermShape& shape() const { return shape_; }
  std::size_t size() const { return indices_.size(); }
  const std::vector<PointIndex>& indices() const { return indices_; }
  Precision precision() const { return prec_; }

  /// Group-ring coefficients of an entry (coefficient of sigma^i at index i).
  const std::vector<BigFloat>& entry(std::size_t row, std::size_t col) const { return coeffs_[row][col]; }
  /// psi applied to an entry; exactly zero when psi is nontrivial on H_u.
  BigComplex psi_entry(std::size_t row, std::size_t col, const Character& psi) const;

  /// Trivial-character evaluation of the full matrix computed from the group coefficients.
  std::vector<std::vector<BigFloat>> trivial_character_matrix() const;
  /// Gram matrix <Tr_{G/H_u} P_(u,k), P^t_(t,j)> / |H_u| summed directly from the heights.
  std::vector<std::vector<BigFloat>> trace_averaged_gram() const;
  /// max |coefficient of (1 - e_{H_u}) * entry|; zero up to rounding for a well-formed matrix.
  BigFloat component_defect() const;

 private:
  PermShape shape_;
  std::vector<PointIndex> indices_;
  std::vector<std::vector<std::vector<BigFloat>>> heights_;
  std::vector<std::vector<std::vector<BigFloat>>> coeffs_;
  Precision prec_ = kDefaultPrecision;
};

/// Complex determinant by Gaussian elimination with partial pivoting. Empty matrix gives 1.
BigComplex complex_determinant(std::vector<std::vector<BigComplex>> m, Precision prec);

/// det psi(R_{t_psi}); throws RegulatorDegenerate if |lambda| <= degenerate_tol.
BigComplex lambda_psi(const RegulatorMatrix& R, const Character& psi, const BigFloat& degenerate_tol);
/// det psi(R) over the full matrix.
BigComplex full_determinant(const RegulatorMatrix& R, const Character& psi);

/// delta_psi = prod_{t < t_psi} (psi(sigma^(p^t)) - 1)^(m_t) in Q(zeta_{p^t_psi}).
CycNum delta_psi(const PermShape& shape, const Character& psi);

/// Matrix of Z_p[G] elements representing Phi, indexed like the regulator.
struct PhiMatrix {
  std::vector<std::vector<GroupRingElt>> entries;
  bool identity = false;

  static PhiMatrix make_identity(const PermShape& shape);
  /// Checks p-integrality and the block shape (zero off-diagonal blocks, identity on the
  /// free part). Throws InvalidPhi.
  void validate(const PermShape& shape) const;
};

/// det psi(Phi_{t_psi}) in Q(zeta_{p^t_psi}); throws InvalidPhi when it is not a unit at p.
CycNum epsilon_psi(const PhiMatrix& phi, const Character& psi, const PermShape& shape);

}  // namespace etnc
