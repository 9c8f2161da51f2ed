#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "etnc/criteria.hpp"

namespace etnc {

/// Decimal pair kept exactly as written in the file.
struct DecimalComplex {
  std::string re;
  std::string im = "0";
};

struct RatioBlock {
  /// "lambda": values are L*_psi / lambda_psi. "lambda_delta": values are L*_psi / (lambda_psi delta_psi).
  std::string normalization = "lambda";
  /// Exponent b such that delta is taken with respect to sigma^b.
  long delta_generator = 1;
  /// labels[k] = j such that values[k] belongs to psi_j.
  std::vector<long> labels;
  std::vector<DecimalComplex> values;
};

struct LeadingTermBlock {
  bool sr_truncated = true;
  /// labels[k] = j such that values[k] = L*(A twisted by chi_j, 1).
  std::vector<long> labels;
  std::vector<DecimalComplex> values;
};

struct BsdFieldBlock {
  std::string label;
  int level = 0;
  std::string leading_term;
  std::string abs_discriminant = "1";
  std::string regulator;
  std::string period;
};

struct HeightsBlock {
  int digits = 30;
  std::vector<std::vector<std::vector<std::string>>> values;
};

struct ProblemFile {
  std::string label;
  long p = 0;
  int n = 0;
  // Base field: "Q" uses the Dirichlet model; "explicit" takes ramification data and tau* values.
  std::string base_field = "Q";
  long q = 0;
  std::optional<long> primitive_root;
  std::vector<RamifiedPlace> ramified;
  int real_places = 1;
  int complex_places = 0;
  std::string abs_discriminant = "1";
  int digits = 0;
  std::optional<bool> sha_finite;
  std::optional<bool> sha_p_trivial_proper;
  bool sha_p_trivial = true;

  CurveData curve;

  std::optional<RatioBlock> ratios;
  std::optional<LeadingTermBlock> leading_terms;
  std::optional<std::string> period;
  std::optional<std::vector<long>> orders;
  std::optional<std::vector<DecimalComplex>> tau_star;
  std::vector<BsdFieldBlock> bsd_fields;

  std::optional<RankVector> ranks;
  std::optional<std::vector<long>> shape;
  std::optional<HeightsBlock> heights;
  /// Rational coefficients as strings; absent means not supplied, phi_identity means Phi = I.
  std::optional<std::vector<std::vector<std::vector<std::string>>>> phi;
  bool phi_identity = false;
};

/// Throws SchemaError naming the offending field.
ProblemFile parse_problem(const Json& j);
ProblemFile load_problem(const std::string& path);
/// Canonical rendering; parse_problem(to_json(x)) == x and to_json is a fixed point after one pass.
Json to_json(const ProblemFile& pf);

/// Galois data of F/k described by the header. Throws SchemaError.
AbelianFieldSetup build_setup(const ProblemFile& pf, Precision prec = kDefaultPrecision);

struct RunConfig {
  /// Subset of {"rat", "max", "zpg", "cor1", "bsd"}; empty means all.
  std::set<std::string> checks;
  std::optional<Rational> tol;
  std::optional<Integer> denom_bound;
  Precision prec = kDefaultPrecision;
  int threads = 1;
};

/// Runs hypotheses, shape, regulator, rationality, max_order, bsd_p, zpg, mazur_tate and
/// corollary 1 in order; a failing or inconclusive stage blocks every later one.
/// Throws SchemaError for inputs that cannot be evaluated.
VerificationReport run_all(const ProblemFile& pf, const RunConfig& config);

/// GET <endpoint>/curves/<label>; the body is a curve block. Throws NetworkError.
CurveData fetch_metadata(const std::string& label, const std::string& endpoint);
/// Fills the fields of `into` that are absent with those of `from`.
void merge_missing(CurveData& into, const CurveData& from);

CurveData parse_curve(const Json& j, const std::string& path = "curve");
Json curve_to_json(const CurveData& c);

}  // namespace etnc
