#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etnc/bigfloat.hpp"
#include "etnc/characters_gauss.hpp"
#include "etnc/cyclotomic.hpp"
#include "etnc/groupring.hpp"
#include "etnc/mwshape.hpp"
#include "etnc/regulator.hpp"
#include "json.hpp"

namespace etnc {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Inconclusive, Skipped, Blocked, Warning };

std::string to_string(Status s);
/// Fail and Inconclusive stop the pipeline; everything else lets it continue.
bool blocks_downstream(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Skipped;
  std::string summary;
  Json details = Json::object();
};

struct VerificationReport {
  std::string label;
  Json setup = Json::object();
  std::vector<CheckResult> checks;

  /// 0 all pass, 1 any fail, 2 inconclusive (and no fail).
  int exit_code() const;
  const CheckResult* find(const std::string& name) const;
  Json to_json() const;
  std::string to_text() const;
};

/// Numerical acceptance policy derived from the declared number of input digits D.
struct RecognitionConfig {
  int digits = 20;
  std::optional<Rational> tol_override;
  Integer denom_bound = 1000000;
  Precision prec = kDefaultPrecision;
  int threads = 1;

  /// 10^-(D - min(10, floor(D/2))) unless overridden.
  Rational residual_tol() const;
  /// sqrt of residual_tol: residuals in [tol, sqrt(tol)) are inconclusive.
  Rational inconclusive_tol() const;
  /// Size of the rounding error of one printed component, 10^-D.
  Rational noise() const;
};

// ---------------------------------------------------------------------------
// Normalized leading terms

struct LeadingTermData {
  /// leading_terms[j] = L*(A twisted by chi_j, 1), S_r-truncated when sr_truncated.
  std::vector<BigComplex> leading_terms;
  bool sr_truncated = true;
  BigFloat period;
  int dimension = 1;
};

/// L*_psi = L*_{S_r}(A, psi-dual, 1) tau*(psi)^d / (Omega w^d) for truncated data, or the
/// variant L*(A, psi-dual, 1) tau(psi)^d / Omega when the data are not truncated.
std::vector<BigComplex> normalized_leading_terms(const LeadingTermData& data, const AbelianFieldSetup& setup,
                                                 Precision prec);

// ---------------------------------------------------------------------------
// Rationality

struct RationalityResult {
  CheckResult check;
  /// alpha[j] in Q(zeta_{p^t_j}); only meaningful if check passed.
  std::vector<CycNum> alpha;
  /// Per Galois orbit (level t): recognized element sum_{psi in orbit} alpha_psi e_psi.
  std::vector<GroupRingElt> orbit_elements;
  BigFloat max_residual;
};

/// values[j] approximates L*_psi / lambda_psi. Recognizes one element of Q[G] per Galois
/// orbit by inverse DFT of the orbit's values; passes iff every residual is below tolerance.
RationalityResult rationality_check(const CyclicGroup& g, const std::vector<BigComplex>& values,
                                    const RecognitionConfig& config);

// ---------------------------------------------------------------------------
// Integrality criteria

CheckResult max_order_check(const std::vector<CycNum>& alpha, const PermShape& shape);

/// delta_psi computed with sigma^b as the generator; b = 1 is the default convention.
CycNum delta_for_generator(const PermShape& shape, const Character& psi, long b);

/// Element sum alpha_psi / (epsilon_psi delta_psi) e_psi of Q[G].
GroupRingElt zpg_element(const std::vector<CycNum>& alpha, const PermShape& shape, const PhiMatrix& phi,
                         long delta_generator = 1);
CheckResult zpg_check(const std::vector<CycNum>& alpha, const PermShape& shape, const PhiMatrix& phi,
                      long delta_generator = 1);

struct FieldBsdData {
  std::string label;
  int level = 0;  // L = F^(H_level)
  BigFloat leading_term;
  Integer abs_discriminant = 1;
  BigFloat regulator;
  BigFloat period;
  int dimension = 1;
};

CheckResult bsd_p_check(const std::vector<FieldBsdData>& fields, long p, const RecognitionConfig& config);

// ---------------------------------------------------------------------------
// Mazur-Tate element and Corollary 1

/// L = sum alpha_psi e_psi over all psi if m_t = 0 for every t < n, otherwise over the psi
/// nontrivial on H_{t0}.
GroupRingElt mazur_tate_element(const std::vector<CycNum>& alpha, const PermShape& shape);

struct Corollary1Input {
  GroupRingElt L;
  PermShape shape;
  std::optional<PhiMatrix> phi;
  /// v from alpha_1 (always available once rationality passed).
  Rational v_from_alpha;
  /// Independent numeric v from L*, d_k, Omega and det 1_G(R), when truncated data exist.
  std::optional<BigComplex> v_numeric;
  bool sha_trivial = true;
  /// Generator used in prod (sigma^(p^t) - 1)^(m_t); matches the delta convention.
  long delta_generator = 1;
};

std::vector<CheckResult> corollary1_suite(const Corollary1Input& in, const RecognitionConfig& config);

// ---------------------------------------------------------------------------
// Hypotheses (a)-(h)

struct CurveData {
  std::string label;
  long conductor = 0;
  int dimension = 1;
  std::optional<long> torsion_order;
  std::optional<long> dual_torsion_order;
  std::map<long, long> tamagawa;
  std::optional<std::vector<long>> bad_primes;
  std::map<long, long> residue_point_counts;
  std::optional<bool> p_unramified;  // needed only when k != Q
  std::optional<bool> sha_finite;     // (g)
  std::optional<bool> sha_p_trivial_proper;  // (h)
};

/// Throws MissingData (message names the curve field) when metadata needed for (a)-(f) is absent.
CheckResult hypotheses_check(const CurveData& curve, const AbelianFieldSetup& setup);

}  // namespace etnc
