#include "etnc/io.hpp"

#include <fstream>
#include <sstream>

#include "etnc/errors.hpp"

namespace etnc {

namespace {

constexpr const char* kFormat = "etnc-problem/1";

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) throw SchemaError(at(path, key), "missing");
  return *it;
}

const Json* optional_field(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

long as_long(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  return v.get<long>();
}

bool as_bool(const Json& v, const std::string& path) {
  if (!v.is_boolean()) throw SchemaError(path, "expected true or false");
  return v.get<bool>();
}

std::string as_string(const Json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected a string");
  return v.get<std::string>();
}

std::string as_decimal(const Json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "decimals must be written as strings");
  const std::string s = v.get<std::string>();
  try {
    (void)parse_decimal(s);
  } catch (const Error& e) {
    throw SchemaError(path, std::string("not a decimal: ") + e.what());
  }
  return s;
}

std::string as_rational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  if (!v.is_string()) throw SchemaError(path, "expected an integer or a rational string");
  const std::string s = v.get<std::string>();
  try {
    Rational r(s);
    r.canonicalize();
    return to_string(r);
  } catch (const std::exception&) {
    throw SchemaError(path, "not a rational: '" + s + "'");
  }
}

Rational rational_of(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

std::vector<long> long_list(const Json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array");
  std::vector<long> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_long(v[i], at(path, i)));
  return out;
}

std::vector<DecimalComplex> complex_list(const Json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of [re, im] pairs");
  std::vector<DecimalComplex> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string pi = at(path, i);
    const Json& e = v[i];
    if (e.is_array()) {
      if (e.size() != 2) throw SchemaError(pi, "expected [re, im]");
      out.push_back({as_decimal(e[0], at(pi, std::size_t{0})), as_decimal(e[1], at(pi, std::size_t{1}))});
    } else {
      out.push_back({as_decimal(e, pi), "0"});
    }
  }
  return out;
}

Json complex_json(const std::vector<DecimalComplex>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(Json::array({c.re, c.im}));
  return a;
}

std::map<long, long> prime_map(const Json& v, const std::string& path) {
  if (!v.is_object()) throw SchemaError(path, "expected an object keyed by primes");
  std::map<long, long> out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    long key = 0;
    try {
      std::size_t used = 0;
      key = std::stol(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw SchemaError(at(path, it.key()), "key is not an integer");
    }
    out[key] = as_long(it.value(), at(path, it.key()));
  }
  return out;
}

Json prime_map_json(const std::map<long, long>& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[std::to_string(k)] = v;
  return o;
}

std::vector<long> check_labels(const std::vector<long>& labels, long N, const std::string& path) {
  if (static_cast<long>(labels.size()) != N)
    throw SchemaError(path, "expected " + std::to_string(N) + " labels, got " + std::to_string(labels.size()));
  std::vector<bool> seen(static_cast<std::size_t>(N), false);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const long j = labels[k];
    if (j < 0 || j >= N || seen[static_cast<std::size_t>(j)])
      throw SchemaError(at(path, k), "labels must be a permutation of 0.." + std::to_string(N - 1));
    seen[static_cast<std::size_t>(j)] = true;
  }
  return labels;
}

std::vector<long> identity_labels(long N) {
  std::vector<long> v;
  for (long j = 0; j < N; ++j) v.push_back(j);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

CurveData parse_curve(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  CurveData c;
  if (auto v = optional_field(j, "label")) c.label = as_string(*v, at(path, "label"));
  if (auto v = optional_field(j, "dimension")) c.dimension = static_cast<int>(as_long(*v, at(path, "dimension")));
  if (auto v = optional_field(j, "conductor")) c.conductor = as_long(*v, at(path, "conductor"));
  if (auto v = optional_field(j, "torsion_order")) c.torsion_order = as_long(*v, at(path, "torsion_order"));
  if (auto v = optional_field(j, "dual_torsion_order")) c.dual_torsion_order = as_long(*v, at(path, "dual_torsion_order"));
  if (auto v = optional_field(j, "tamagawa")) c.tamagawa = prime_map(*v, at(path, "tamagawa"));
  if (auto v = optional_field(j, "bad_primes")) c.bad_primes = long_list(*v, at(path, "bad_primes"));
  if (auto v = optional_field(j, "residue_point_counts")) c.residue_point_counts = prime_map(*v, at(path, "residue_point_counts"));
  if (auto v = optional_field(j, "p_unramified")) c.p_unramified = as_bool(*v, at(path, "p_unramified"));
  if (c.dimension < 1) throw SchemaError(at(path, "dimension"), "must be positive");
  return c;
}

Json curve_to_json(const CurveData& c) {
  Json j = Json::object();
  j["label"] = c.label;
  j["dimension"] = c.dimension;
  if (c.conductor) j["conductor"] = c.conductor;
  if (c.torsion_order) j["torsion_order"] = *c.torsion_order;
  if (c.dual_torsion_order) j["dual_torsion_order"] = *c.dual_torsion_order;
  if (!c.tamagawa.empty()) j["tamagawa"] = prime_map_json(c.tamagawa);
  if (c.bad_primes) j["bad_primes"] = *c.bad_primes;
  if (!c.residue_point_counts.empty()) j["residue_point_counts"] = prime_map_json(c.residue_point_counts);
  if (c.p_unramified) j["p_unramified"] = *c.p_unramified;
  return j;
}

void merge_missing(CurveData& into, const CurveData& from) {
  if (into.label.empty()) into.label = from.label;
  if (!into.conductor) into.conductor = from.conductor;
  if (!into.torsion_order) into.torsion_order = from.torsion_order;
  if (!into.dual_torsion_order) into.dual_torsion_order = from.dual_torsion_order;
  for (const auto& [k, v] : from.tamagawa) into.tamagawa.emplace(k, v);
  if (!into.bad_primes) into.bad_primes = from.bad_primes;
  for (const auto& [k, v] : from.residue_point_counts) into.residue_point_counts.emplace(k, v);
  if (!into.p_unramified) into.p_unramified = from.p_unramified;
}

ProblemFile parse_problem(const Json& j) {
  if (!j.is_object()) throw SchemaError("", "problem file must be a JSON object");
  const std::string fmt = as_string(require(j, "format", ""), "format");
  if (fmt != kFormat) throw SchemaError("format", "unsupported format '" + fmt + "', expected " + kFormat);

  ProblemFile pf;
  const Json& h = require(j, "header", "");
  pf.label = as_string(require(h, "label", "header"), "header.label");
  pf.p = as_long(require(h, "p", "header"), "header.p");
  pf.n = static_cast<int>(as_long(require(h, "n", "header"), "header.n"));
  if (pf.p < 3 || !is_prime(pf.p)) throw SchemaError("header.p", "must be an odd prime");
  if (pf.n < 0 || pf.n > 8) throw SchemaError("header.n", "must lie in 0..8");
  const long N = ipow(pf.p, pf.n);
  pf.digits = static_cast<int>(as_long(require(h, "digits", "header"), "header.digits"));
  if (pf.digits < 1) throw SchemaError("header.digits", "must be positive");

  const Json& bf = require(h, "base_field", "header");
  pf.base_field = as_string(require(bf, "type", "header.base_field"), "header.base_field.type");
  if (pf.base_field == "Q") {
    pf.q = as_long(require(bf, "q", "header.base_field"), "header.base_field.q");
    if (auto v = optional_field(bf, "primitive_root")) pf.primitive_root = as_long(*v, "header.base_field.primitive_root");
  } else if (pf.base_field == "explicit") {
    const std::string bp = "header.base_field";
    const Json& rams = require(bf, "ramified", bp);
    if (!rams.is_array()) throw SchemaError(at(bp, "ramified"), "expected an array");
    for (std::size_t i = 0; i < rams.size(); ++i) {
      const std::string rp = at(at(bp, "ramified"), i);
      RamifiedPlace r;
      r.label = as_string(require(rams[i], "label", rp), at(rp, "label"));
      r.inertia_level = static_cast<int>(as_long(require(rams[i], "inertia_level", rp), at(rp, "inertia_level")));
      r.frobenius = as_long(require(rams[i], "frobenius", rp), at(rp, "frobenius"));
      if (r.inertia_level < 0 || r.inertia_level >= pf.n) throw SchemaError(at(rp, "inertia_level"), "must lie in 0..n-1");
      pf.ramified.push_back(r);
    }
    if (auto v = optional_field(bf, "real_places")) pf.real_places = static_cast<int>(as_long(*v, at(bp, "real_places")));
    if (auto v = optional_field(bf, "complex_places")) pf.complex_places = static_cast<int>(as_long(*v, at(bp, "complex_places")));
    if (auto v = optional_field(bf, "abs_discriminant")) pf.abs_discriminant = as_rational(*v, at(bp, "abs_discriminant"));
  } else {
    throw SchemaError("header.base_field.type", "expected \"Q\" or \"explicit\"");
  }

  if (auto flags = optional_field(h, "flags")) {
    if (auto v = optional_field(*flags, "sha_finite")) pf.sha_finite = as_bool(*v, "header.flags.sha_finite");
    if (auto v = optional_field(*flags, "sha_p_trivial_proper"))
      pf.sha_p_trivial_proper = as_bool(*v, "header.flags.sha_p_trivial_proper");
    if (auto v = optional_field(*flags, "sha_p_trivial")) pf.sha_p_trivial = as_bool(*v, "header.flags.sha_p_trivial");
  }

  pf.curve = parse_curve(require(j, "curve", ""), "curve");

  const Json& an = require(j, "analytic", "");
  if (!an.is_object()) throw SchemaError("analytic", "expected an object");
  if (auto r = optional_field(an, "ratios")) {
    RatioBlock rb;
    if (auto v = optional_field(*r, "normalization")) rb.normalization = as_string(*v, "analytic.ratios.normalization");
    if (rb.normalization != "lambda" && rb.normalization != "lambda_delta")
      throw SchemaError("analytic.ratios.normalization", "expected \"lambda\" or \"lambda_delta\"");
    if (auto v = optional_field(*r, "delta_generator")) rb.delta_generator = as_long(*v, "analytic.ratios.delta_generator");
    if (N > 1 && gcd(mod(rb.delta_generator, N), pf.p) != 1)
      throw SchemaError("analytic.ratios.delta_generator", "must be prime to p");
    rb.delta_generator = N > 1 ? mod(rb.delta_generator, N) : 1;
    rb.values = complex_list(require(*r, "values", "analytic.ratios"), "analytic.ratios.values");
    if (static_cast<long>(rb.values.size()) != N)
      throw SchemaError("analytic.ratios.values", "expected " + std::to_string(N) + " values");
    rb.labels = optional_field(*r, "labels") ? check_labels(long_list((*r)["labels"], "analytic.ratios.labels"), N, "analytic.ratios.labels")
                                             : identity_labels(N);
    pf.ratios = rb;
  }
  if (auto l = optional_field(an, "leading_terms")) {
    LeadingTermBlock lb;
    if (auto v = optional_field(*l, "sr_truncated")) lb.sr_truncated = as_bool(*v, "analytic.leading_terms.sr_truncated");
    lb.values = complex_list(require(*l, "values", "analytic.leading_terms"), "analytic.leading_terms.values");
    if (static_cast<long>(lb.values.size()) != N)
      throw SchemaError("analytic.leading_terms.values", "expected " + std::to_string(N) + " values");
    lb.labels = optional_field(*l, "labels")
                    ? check_labels(long_list((*l)["labels"], "analytic.leading_terms.labels"), N, "analytic.leading_terms.labels")
                    : identity_labels(N);
    pf.leading_terms = lb;
    pf.period = as_decimal(require(an, "period", "analytic"), "analytic.period");
    if (parse_decimal(*pf.period) <= 0) throw SchemaError("analytic.period", "must be positive");
  }
  if (!pf.ratios && !pf.leading_terms)
    throw SchemaError("analytic", "needs either \"ratios\" or \"leading_terms\"");
  if (pf.ratios && pf.leading_terms)
    throw SchemaError("analytic", "give either \"ratios\" or \"leading_terms\", not both");
  if (auto v = optional_field(an, "orders")) {
    pf.orders = long_list(*v, "analytic.orders");
    if (static_cast<long>(pf.orders->size()) != N) throw SchemaError("analytic.orders", "expected " + std::to_string(N) + " entries");
    for (std::size_t i = 0; i < pf.orders->size(); ++i)
      if ((*pf.orders)[i] < 0) throw SchemaError(at("analytic.orders", i), "must be nonnegative");
  }
  if (auto v = optional_field(an, "tau_star")) {
    pf.tau_star = complex_list(*v, "analytic.tau_star");
    if (static_cast<long>(pf.tau_star->size()) != N) throw SchemaError("analytic.tau_star", "expected " + std::to_string(N) + " values");
  }
  if (pf.base_field == "explicit" && pf.leading_terms && !pf.tau_star)
    throw SchemaError("analytic.tau_star", "required when the base field is not Q");
  if (auto v = optional_field(an, "bsd_fields")) {
    if (!v->is_array()) throw SchemaError("analytic.bsd_fields", "expected an array");
    for (std::size_t i = 0; i < v->size(); ++i) {
      const std::string fp = at("analytic.bsd_fields", i);
      const Json& f = (*v)[i];
      BsdFieldBlock b;
      b.label = as_string(require(f, "label", fp), at(fp, "label"));
      b.level = static_cast<int>(as_long(require(f, "level", fp), at(fp, "level")));
      if (b.level < 0 || b.level > pf.n) throw SchemaError(at(fp, "level"), "must lie in 0..n");
      b.leading_term = as_decimal(require(f, "leading_term", fp), at(fp, "leading_term"));
      if (auto d = optional_field(f, "abs_discriminant")) b.abs_discriminant = as_rational(*d, at(fp, "abs_discriminant"));
      b.regulator = as_decimal(require(f, "regulator", fp), at(fp, "regulator"));
      b.period = as_decimal(require(f, "period", fp), at(fp, "period"));
      pf.bsd_fields.push_back(b);
    }
  }

  const Json& ar = require(j, "arithmetic", "");
  if (auto v = optional_field(ar, "shape")) {
    pf.shape = long_list(*v, "arithmetic.shape");
    if (static_cast<int>(pf.shape->size()) != pf.n + 1) throw SchemaError("arithmetic.shape", "expected n+1 multiplicities");
  }
  if (auto v = optional_field(ar, "ranks")) {
    pf.ranks = long_list(*v, "arithmetic.ranks");
    if (static_cast<int>(pf.ranks->size()) != pf.n + 1) throw SchemaError("arithmetic.ranks", "expected n+1 ranks");
  }
  if (!pf.shape && !pf.ranks) throw SchemaError("arithmetic", "needs \"shape\" or \"ranks\"");
  if (auto v = optional_field(ar, "heights")) {
    HeightsBlock hb;
    hb.digits = static_cast<int>(as_long(require(*v, "digits", "arithmetic.heights"), "arithmetic.heights.digits"));
    const Json& vals = require(*v, "values", "arithmetic.heights");
    const std::string vp = "arithmetic.heights.values";
    if (!vals.is_array()) throw SchemaError(vp, "expected an array");
    for (std::size_t r = 0; r < vals.size(); ++r) {
      if (!vals[r].is_array()) throw SchemaError(at(vp, r), "expected an array");
      hb.values.emplace_back();
      for (std::size_t c = 0; c < vals[r].size(); ++c) {
        const Json& cell = vals[r][c];
        const std::string cp = at(at(vp, r), c);
        if (!cell.is_array()) throw SchemaError(cp, "expected an array of decimals");
        hb.values.back().emplace_back();
        for (std::size_t a = 0; a < cell.size(); ++a) hb.values.back().back().push_back(as_decimal(cell[a], at(cp, a)));
      }
    }
    pf.heights = hb;
  }
  if (auto v = optional_field(ar, "phi")) {
    if (v->is_string()) {
      if (v->get<std::string>() != "identity") throw SchemaError("arithmetic.phi", "expected \"identity\" or a matrix");
      pf.phi_identity = true;
    } else {
      if (!v->is_array()) throw SchemaError("arithmetic.phi", "expected \"identity\" or a matrix");
      std::vector<std::vector<std::vector<std::string>>> m;
      for (std::size_t r = 0; r < v->size(); ++r) {
        const Json& row = (*v)[r];
        if (!row.is_array()) throw SchemaError(at("arithmetic.phi", r), "expected an array");
        m.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
          const std::string cp = at(at("arithmetic.phi", r), c);
          const Json& cell = row[c];
          if (!cell.is_array() || static_cast<long>(cell.size()) != N)
            throw SchemaError(cp, "expected " + std::to_string(N) + " group-ring coefficients");
          m.back().emplace_back();
          for (std::size_t a = 0; a < cell.size(); ++a) m.back().back().push_back(as_rational(cell[a], at(cp, a)));
        }
      }
      pf.phi = m;
    }
  }
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path, std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(j);
}

Json to_json(const ProblemFile& pf) {
  Json j;
  j["format"] = kFormat;
  Json h;
  h["label"] = pf.label;
  h["p"] = pf.p;
  h["n"] = pf.n;
  Json bf;
  bf["type"] = pf.base_field;
  if (pf.base_field == "Q") {
    bf["q"] = pf.q;
    if (pf.primitive_root) bf["primitive_root"] = *pf.primitive_root;
  } else {
    Json rams = Json::array();
    for (const auto& r : pf.ramified)
      rams.push_back({{"label", r.label}, {"inertia_level", r.inertia_level}, {"frobenius", r.frobenius}});
    bf["ramified"] = rams;
    bf["real_places"] = pf.real_places;
    bf["complex_places"] = pf.complex_places;
    bf["abs_discriminant"] = pf.abs_discriminant;
  }
  h["base_field"] = bf;
  h["digits"] = pf.digits;
  Json flags;
  if (pf.sha_finite) flags["sha_finite"] = *pf.sha_finite;
  if (pf.sha_p_trivial_proper) flags["sha_p_trivial_proper"] = *pf.sha_p_trivial_proper;
  flags["sha_p_trivial"] = pf.sha_p_trivial;
  h["flags"] = flags;
  j["header"] = h;
  j["curve"] = curve_to_json(pf.curve);

  Json an = Json::object();
  if (pf.ratios) {
    an["ratios"] = {{"normalization", pf.ratios->normalization},
                    {"delta_generator", pf.ratios->delta_generator},
                    {"labels", pf.ratios->labels},
                    {"values", complex_json(pf.ratios->values)}};
  }
  if (pf.leading_terms) {
    an["leading_terms"] = {{"sr_truncated", pf.leading_terms->sr_truncated},
                           {"labels", pf.leading_terms->labels},
                           {"values", complex_json(pf.leading_terms->values)}};
    an["period"] = *pf.period;
  }
  if (pf.orders) an["orders"] = *pf.orders;
  if (pf.tau_star) an["tau_star"] = complex_json(*pf.tau_star);
  if (!pf.bsd_fields.empty()) {
    Json fs = Json::array();
    for (const auto& f : pf.bsd_fields)
      fs.push_back({{"label", f.label}, {"level", f.level}, {"leading_term", f.leading_term},
                    {"abs_discriminant", f.abs_discriminant}, {"regulator", f.regulator}, {"period", f.period}});
    an["bsd_fields"] = fs;
  }
  j["analytic"] = an;

  Json ar = Json::object();
  if (pf.shape) ar["shape"] = *pf.shape;
  if (pf.ranks) ar["ranks"] = *pf.ranks;
  if (pf.heights) ar["heights"] = {{"digits", pf.heights->digits}, {"values", pf.heights->values}};
  if (pf.phi_identity)
    ar["phi"] = "identity";
  else if (pf.phi)
    ar["phi"] = *pf.phi;
  j["arithmetic"] = ar;
  return j;
}

// ---------------------------------------------------------------------------

AbelianFieldSetup build_setup(const ProblemFile& pf, Precision prec) {
  const CyclicGroup g(pf.p, pf.n);
  if (pf.base_field == "Q") {
    try {
      return AbelianFieldSetup::over_Q(g, pf.q, pf.curve.dimension, pf.primitive_root);
    } catch (const Error& e) {
      throw SchemaError("header.base_field", e.what());
    }
  }
  AbelianFieldSetup s;
  s.group = g;
  s.dimension = pf.curve.dimension;
  s.ramified = pf.ramified;
  s.real_places = pf.real_places;
  s.complex_places = pf.complex_places;
  s.abs_discriminant = rational_of(pf.abs_discriminant).get_num();
  if (pf.tau_star) {
    std::vector<BigComplex> t;
    for (const auto& c : *pf.tau_star) t.push_back(BigComplex::from_decimal(c.re, c.im, prec));
    s.supplied_tau_star = t;
  }
  return s;
}

namespace {

bool requested(const RunConfig& cfg, const std::string& key) { return cfg.checks.empty() || cfg.checks.count(key) > 0; }

std::vector<BigComplex> placed(const std::vector<long>& labels, const std::vector<DecimalComplex>& vals, Precision prec) {
  std::vector<BigComplex> out(vals.size(), BigComplex(prec));
  for (std::size_t k = 0; k < vals.size(); ++k)
    out[static_cast<std::size_t>(labels[k])] = BigComplex::from_decimal(vals[k].re, vals[k].im, prec);
  return out;
}

std::string short_num(const BigComplex& z) { return z.to_string(12); }

}  // namespace

VerificationReport run_all(const ProblemFile& pf, const RunConfig& config) {
  const CyclicGroup g(pf.p, pf.n);
  const long N = g.order();
  const Precision prec = config.prec;
  const AbelianFieldSetup setup = build_setup(pf, prec);

  RecognitionConfig rc;
  rc.digits = pf.digits;
  rc.tol_override = config.tol;
  if (config.denom_bound) rc.denom_bound = *config.denom_bound;
  rc.prec = prec;
  rc.threads = config.threads;

  VerificationReport rep;
  rep.label = pf.label;
  rep.setup["p"] = pf.p;
  rep.setup["n"] = pf.n;
  if (setup.is_over_Q()) {
    rep.setup["q"] = setup.q;
    rep.setup["primitive_root"] = setup.primitive_root;
  }
  rep.setup["digits"] = pf.digits;
  rep.setup["tolerance"] = BigFloat(rc.residual_tol(), 64).to_string(3);
  rep.setup["denominator_bound"] = rc.denom_bound.get_str();
  rep.setup["precision_bits"] = static_cast<long>(prec);
  rep.setup["sha_p_trivial"] = pf.sha_p_trivial;

  std::string blocked_by;
  auto push = [&](CheckResult r) {
    if (blocked_by.empty() && blocks_downstream(r.status)) blocked_by = r.name;
    rep.checks.push_back(std::move(r));
  };
  auto blocked = [&](const std::string& name) {
    return CheckResult{name, Status::Blocked, "blocked by " + blocked_by, Json::object()};
  };
  auto not_requested = [](const std::string& name) {
    return CheckResult{name, Status::Skipped, "not requested", Json::object()};
  };
  const std::string sha_reason = "requires trivial p-part of Sha over F";

  // hypotheses
  CurveData curve = pf.curve;
  curve.sha_finite = pf.sha_finite;
  curve.sha_p_trivial_proper = pf.sha_p_trivial_proper;
  try {
    push(hypotheses_check(curve, setup));
  } catch (const MissingData& e) {
    const std::string what = e.what();
    throw SchemaError(what.rfind("curve.", 0) == 0 ? what : "curve", what.rfind("curve.", 0) == 0 ? "missing" : what);
  }

  // shape
  std::optional<PermShape> shape;
  if (!blocked_by.empty()) {
    push(blocked("shape"));
  } else {
    CheckResult r{"shape", Status::Pass, "", Json::object()};
    try {
      if (pf.shape) {
        shape = PermShape(g, *pf.shape);
        if (pf.ranks && ranks_from_shape(*shape) != *pf.ranks) {
          r.status = Status::Fail;
          r.summary = "ranks do not match the given shape";
          r.details["witness"] = {{"ranks", *pf.ranks}, {"shape_ranks", ranks_from_shape(*shape)}};
        }
      } else {
        shape = shape_from_ranks(g, *pf.ranks);
      }
    } catch (const NotPermutationShape& e) {
      r.status = Status::Fail;
      r.summary = e.what();
      r.details["witness"] = {{"level", e.level()}};
      shape.reset();
    }
    if (shape && r.status == Status::Pass) {
      r.details["shape"] = shape->m;
      r.details["ranks"] = ranks_from_shape(*shape);
      r.details["h"] = h_of(*shape);
      r.summary = "m = " + shape->to_string() + ", h = " + std::to_string(h_of(*shape));
      if (pf.orders) {
        for (long j = 0; j < N; ++j) {
          const long predicted = order_of_vanishing(*shape, Character(g, j));
          if ((*pf.orders)[static_cast<std::size_t>(j)] != predicted) {
            r.status = Status::Fail;
            r.summary = "order of vanishing at psi_" + std::to_string(j) + " is " +
                        std::to_string((*pf.orders)[static_cast<std::size_t>(j)]) + ", shape predicts " +
                        std::to_string(predicted);
            r.details["witness"] = {{"j", j}, {"order", (*pf.orders)[static_cast<std::size_t>(j)]}, {"predicted", predicted}};
            break;
          }
        }
      }
    }
    push(r);
  }

  // regulator
  std::vector<BigComplex> lambda;
  std::optional<RegulatorMatrix> R;
  if (!blocked_by.empty()) {
    push(blocked("regulator"));
  } else if (pf.heights) {
    CheckResult r{"regulator", Status::Pass, "", Json::object()};
    HeightTable ht;
    ht.shape = *shape;
    ht.digits = pf.heights->digits;
    for (const auto& row : pf.heights->values) {
      ht.values.emplace_back();
      for (const auto& cell : row) {
        ht.values.back().emplace_back();
        for (const auto& s : cell) ht.values.back().back().push_back(parse_decimal(s));
      }
    }
    try {
      ht.validate();
    } catch (const MissingData& e) {
      throw SchemaError("arithmetic.heights", e.what());
    }
    R = RegulatorMatrix::build(ht, prec);
    Integer ten_pow = 1;
    for (int i = 0; i < std::max(1, ht.digits / 2); ++i) ten_pow *= 10;
    const BigFloat tol(Rational(1) / Rational(ten_pow), prec);
    Json lam = Json::array();
    try {
      for (long j = 0; j < N; ++j) {
        lambda.push_back(lambda_psi(*R, Character(g, j), tol));
        lam.push_back({{"j", j}, {"lambda", short_num(lambda.back())}});
      }
      r.summary = std::to_string(R->size()) + "x" + std::to_string(R->size()) + " regulator, all lambda_psi nonzero";
    } catch (const RegulatorDegenerate& e) {
      r.status = Status::Fail;
      r.summary = e.what();
      r.details["witness"] = {{"j", e.character()}};
      lambda.clear();
    }
    r.details["lambda"] = lam;
    r.details["component_defect"] = R->component_defect().to_string(3);
    push(r);
  } else if (pf.leading_terms) {
    if (!point_indices(*shape).empty()) throw SchemaError("arithmetic.heights", "required with leading_terms");
    lambda.assign(static_cast<std::size_t>(N), BigComplex(Rational(1), prec));
    push({"regulator", Status::Pass, "no points, every lambda_psi = 1", Json::object()});
  } else {
    push({"regulator", Status::Skipped, "ratios supplied", Json::object()});
  }

  // normalized leading terms and rationality
  const bool need_alpha = requested(config, "rat") || requested(config, "max") || requested(config, "zpg") ||
                          requested(config, "cor1");
  std::optional<std::vector<CycNum>> alpha;
  std::optional<BigComplex> v_numeric;
  long delta_gen = pf.ratios ? pf.ratios->delta_generator : 1;
  if (!blocked_by.empty()) {
    push(blocked("rationality"));
  } else if (!need_alpha) {
    push(not_requested("rationality"));
  } else {
    std::vector<BigComplex> values;
    if (pf.ratios) {
      values = placed(pf.ratios->labels, pf.ratios->values, prec);
    } else {
      LeadingTermData ltd;
      ltd.leading_terms = placed(pf.leading_terms->labels, pf.leading_terms->values, prec);
      ltd.sr_truncated = pf.leading_terms->sr_truncated;
      ltd.period = BigFloat::from_decimal(*pf.period, prec);
      ltd.dimension = pf.curve.dimension;
      std::vector<BigComplex> Ls;
      try {
        Ls = normalized_leading_terms(ltd, setup, prec);
      } catch (const MissingData& e) {
        throw SchemaError("analytic", e.what());
      } catch (const Error& e) {
        throw SchemaError("analytic.leading_terms", e.what());
      }
      for (long j = 0; j < N; ++j) values.push_back(Ls[static_cast<std::size_t>(j)] / lambda[static_cast<std::size_t>(j)]);
      if (ltd.sr_truncated) {
        // v = (-1)^(d |S_r|) L*_{S_r}(A/k, 1) sqrt(|d_k|)^d / (Omega det 1_G(R)).
        const long sr = setup.is_over_Q() ? 1 : static_cast<long>(setup.ramified.size());
        BigComplex v = ltd.leading_terms[0] / lambda[0];
        const BigFloat root = sqrt(BigFloat(Rational(setup.abs_discriminant), prec));
        for (int i = 0; i < ltd.dimension; ++i) v *= root;
        v *= BigFloat(Rational(1), prec) / ltd.period;
        if ((ltd.dimension * sr) % 2 != 0) v = -v;
        v_numeric = v;
      }
    }
    RationalityResult rr = rationality_check(g, values, rc);
    if (rr.check.status == Status::Pass) {
      alpha = rr.alpha;
      if (pf.ratios && pf.ratios->normalization == "lambda_delta") {
        for (long j = 0; j < N; ++j) {
          const Character psi(g, j);
          auto& a = (*alpha)[static_cast<std::size_t>(j)];
          a = mul_lifted(a, delta_for_generator(*shape, psi, delta_gen)).restrict_to(psi.value_modulus());
        }
        rr.check.details["normalization"] = "lambda_delta";
      }
    }
    if (!requested(config, "rat") && rr.check.status == Status::Pass) rr.check.summary += " (prerequisite)";
    push(rr.check);
  }

  // max order
  if (!blocked_by.empty())
    push(blocked("max_order"));
  else if (!requested(config, "max"))
    push(not_requested("max_order"));
  else if (!pf.sha_p_trivial)
    push({"max_order", Status::Skipped, sha_reason, Json::object()});
  else
    push(max_order_check(*alpha, *shape));

  // BSD_p over intermediate fields
  if (!blocked_by.empty()) {
    push(blocked("bsd_p"));
  } else if (!requested(config, "bsd")) {
    push(not_requested("bsd_p"));
  } else if (!pf.sha_p_trivial) {
    push({"bsd_p", Status::Skipped, sha_reason, Json::object()});
  } else {
    std::vector<FieldBsdData> fields;
    for (const auto& f : pf.bsd_fields) {
      FieldBsdData d;
      d.label = f.label;
      d.level = f.level;
      d.leading_term = BigFloat::from_decimal(f.leading_term, prec);
      d.abs_discriminant = rational_of(f.abs_discriminant).get_num();
      d.regulator = BigFloat::from_decimal(f.regulator, prec);
      d.period = BigFloat::from_decimal(f.period, prec);
      d.dimension = pf.curve.dimension;
      fields.push_back(d);
    }
    push(bsd_p_check(fields, pf.p, rc));
  }

  // Z_p[G]
  std::optional<PhiMatrix> phi;
  if (shape) {
    bool free_only = true;
    for (const auto& idx : point_indices(*shape)) free_only = free_only && idx.level == pf.n;
    if (pf.phi_identity || (free_only && !pf.phi)) {
      phi = PhiMatrix::make_identity(*shape);
    } else if (pf.phi) {
      PhiMatrix m;
      for (const auto& row : *pf.phi) {
        m.entries.emplace_back();
        for (const auto& cell : row) {
          std::vector<Rational> c;
          for (const auto& s : cell) c.push_back(rational_of(s));
          m.entries.back().emplace_back(g, c);
        }
      }
      try {
        m.validate(*shape);
        for (long j = 0; j < N; ++j) (void)epsilon_psi(m, Character(g, j), *shape);
      } catch (const InvalidPhi& e) {
        throw SchemaError("arithmetic.phi", e.what());
      }
      phi = m;
    }
  }
  if (!blocked_by.empty())
    push(blocked("zpg"));
  else if (!requested(config, "zpg"))
    push(not_requested("zpg"));
  else if (!pf.sha_p_trivial)
    push({"zpg", Status::Skipped, sha_reason, Json::object()});
  else if (!phi)
    push({"zpg", Status::Skipped, "Phi not supplied", Json::object()});
  else
    push(zpg_check(*alpha, *shape, *phi, delta_gen));

  // Mazur-Tate element and Corollary 1
  const std::vector<std::string> cor_names{"cor1.i", "cor1.ii", "cor1.iii", "cor1.iv", "cor1.exact_order"};
  if (!blocked_by.empty()) {
    push(blocked("mazur_tate"));
    for (const auto& nme : cor_names) push(blocked(nme));
  } else if (!requested(config, "cor1")) {
    push(not_requested("mazur_tate"));
    for (const auto& nme : cor_names) push(not_requested(nme));
  } else {
    const GroupRingElt L = mazur_tate_element(*alpha, *shape);
    CheckResult mt{"mazur_tate", Status::Pass, "L = " + L.to_string(), Json::object()};
    mt.details["element"] = L.to_string();
    mt.details["coefficients"] = Json::array();
    for (const auto& c : L.coeffs()) mt.details["coefficients"].push_back(to_string(c));
    const auto t0 = t0_of(*shape);
    mt.details["case"] = t0 ? "psi nontrivial on H_" + std::to_string(*t0) : std::string("maximal ranks");
    push(mt);
    Corollary1Input in{L, *shape, phi, (*alpha)[0].rational_value(), v_numeric, pf.sha_p_trivial, delta_gen};
    for (auto& c : corollary1_suite(in, rc)) {
      if (!blocked_by.empty())
        push(blocked(c.name));
      else
        push(c);
    }
  }

  // Implications that must hold between verdicts.
  CheckResult cons{"consistency", Status::Pass, "", Json::object()};
  auto st = [&](const std::string& name) {
    const CheckResult* c = rep.find(name);
    return c ? c->status : Status::Skipped;
  };
  std::vector<std::string> broken;
  if (st("zpg") == Status::Pass && st("max_order") != Status::Pass && st("max_order") != Status::Skipped)
    broken.push_back("zpg passes but max_order does not");
  if (st("max_order") == Status::Pass && st("rationality") != Status::Pass)
    broken.push_back("max_order passes but rationality does not");
  if (st("zpg") == Status::Pass && st("cor1.iv") == Status::Fail) broken.push_back("zpg passes but cor1.iv fails");
  if (st("bsd_p") != Status::Skipped && st("max_order") != Status::Skipped && st("bsd_p") != Status::Blocked &&
      (st("bsd_p") == Status::Pass) != (st("max_order") == Status::Pass))
    broken.push_back("bsd_p and max_order disagree");
  if (broken.empty()) {
    cons.summary = "verdict implications hold";
  } else {
    cons.status = Status::Fail;
    cons.summary = broken.front();
    cons.details["witness"] = broken;
  }
  rep.checks.push_back(cons);
  return rep;
}

}  // namespace etnc
