#include "etnc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "etnc/errors.hpp"

namespace etnc {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact quotient of integer polynomials; divisor monic.
std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return q;
}

struct SparseTerm {
  std::size_t index;
  long coeff;
};

struct CyclotomicData {
  std::vector<long> dense;
  std::vector<SparseTerm> lower;  // nonzero terms below the leading one
};

const CyclotomicData& cyclotomic_data(long m) {
  static std::mutex mutex;
  static std::map<long, CyclotomicData> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  std::vector<long> poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  // Callers go through ensure_cyclotomic, which caches every proper divisor first.
  for (long d = 1; d < m; ++d)
    if (m % d == 0) poly = divide_exact(poly, cache.at(d).dense);
  CyclotomicData data;
  data.dense = poly;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i)
    if (poly[i] != 0) data.lower.push_back({i, poly[i]});
  return cache.emplace(m, std::move(data)).first->second;
}

// Fills the cache bottom-up so cyclotomic_data never needs a missing divisor.
const CyclotomicData& ensure_cyclotomic(long m) {
  for (long d = 1; d <= m; ++d)
    if (m % d == 0) cyclotomic_data(d);
  return cyclotomic_data(m);
}

Poly reduce(long m, Poly a) {
  const CyclotomicData& cyc = ensure_cyclotomic(m);
  const std::size_t phi = cyc.dense.size() - 1;
  for (std::size_t k = a.size(); k-- > phi;) {
    if (a[k] == 0) continue;
    const Rational c = a[k];
    const std::size_t base = k - phi;
    for (const auto& term : cyc.lower) a[base + term.index] -= c * term.coeff;
    a[k] = 0;
  }
  a.resize(phi);
  return a;
}

Poly poly_from_cyclotomic(long m) {
  const auto& dense = ensure_cyclotomic(m).dense;
  Poly out;
  out.reserve(dense.size());
  for (long c : dense) out.emplace_back(c);
  return out;
}

// Remainder of a by b over Q; b nonzero.
Poly poly_rem(Poly a, const Poly& b, Poly* quotient = nullptr) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const Rational lead = b.back();
  if (quotient) quotient->assign(a.size() > db ? a.size() - db : 1, Rational(0));
  while (!a.empty() && a.size() - 1 >= db) {
    const Rational c = a.back() / lead;
    const std::size_t shift = a.size() - 1 - db;
    if (quotient) (*quotient)[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

long lcm(long a, long b) { return a / gcd(a, b) * b; }

// Ramanujan sum c_m(k) = Tr_{Q(zeta_m)/Q}(zeta_m^k).
long ramanujan_sum(long m, long k) {
  const long g = gcd(k, m);
  const long quotient = m / g;
  return mobius(quotient) * (euler_phi(m) / euler_phi(quotient));
}

// Solves the consistent system rows * x = rhs over Q; throws NotInSubfield if inconsistent.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs,
                                     std::size_t unknowns) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(rhs[piv], rhs[r]);
    const Rational inv = 1 / a[r][col];
    for (std::size_t k = col; k < unknowns; ++k) a[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t k = col; k < unknowns; ++k) a[i][k] -= f * a[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) throw NotInSubfield("element does not lie in the requested subfield");
  std::vector<Rational> x(unknowns, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

std::string format_monomial(const Rational& c, long m, std::size_t k, bool first) {
  std::ostringstream out;
  const bool negative = c < 0;
  const Rational mag = negative ? Rational(-c) : c;
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (k == 0) {
    out << mag.get_str();
    return out.str();
  }
  if (mag != 1) out << mag.get_str() << "*";
  out << "zeta" << m;
  if (k > 1) out << "^" << k;
  return out.str();
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long m) {
  if (m < 1) throw Error("cyclotomic modulus must be positive");
  return ensure_cyclotomic(m).dense;
}

CycNum::CycNum(long modulus) : m_(modulus) {
  if (modulus < 1) throw Error("cyclotomic modulus must be positive");
  c_.assign(static_cast<std::size_t>(euler_phi(modulus)), Rational(0));
}

CycNum::CycNum(long modulus, const Rational& value) : CycNum(modulus) { c_[0] = value; }

CycNum CycNum::from_poly(long modulus, std::vector<Rational> poly) {
  CycNum out(modulus);
  if (poly.size() < out.c_.size()) poly.resize(out.c_.size(), Rational(0));
  out.c_ = reduce(modulus, std::move(poly));
  return out;
}

CycNum CycNum::zeta_power(long modulus, long exponent) {
  Poly poly(static_cast<std::size_t>(modulus), Rational(0));
  poly[static_cast<std::size_t>(mod(exponent, modulus))] = 1;
  return from_poly(modulus, std::move(poly));
}

bool CycNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
}

const Rational& CycNum::rational_value() const {
  if (!is_rational()) throw NotInSubfield("element " + to_string() + " is not rational");
  return c_[0];
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.m_ != m_) throw ModulusMismatch("cannot add elements of Q(zeta_" + std::to_string(m_) + ") and Q(zeta_" +
                                        std::to_string(o.m_) + ")");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (o.m_ != m_) throw ModulusMismatch("cannot subtract elements of Q(zeta_" + std::to_string(m_) +
                                        ") and Q(zeta_" + std::to_string(o.m_) + ")");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.m_ != m_) throw ModulusMismatch("cannot multiply elements of Q(zeta_" + std::to_string(m_) +
                                        ") and Q(zeta_" + std::to_string(o.m_) + ")");
  c_ = reduce(m_, poly_mul(c_, o.c_));
  return *this;
}

CycNum& CycNum::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(m_, Rational(1));
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(m_) + ")");
  if (is_rational()) return CycNum(m_, 1 / c_[0]);
  // Extended Euclid: maintain s_i with s_i * a = r_i (mod Phi_m).
  Poly r0 = poly_from_cyclotomic(m_);
  Poly r1 = c_;
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (r1.size() > 1) {
    Poly q;
    Poly r2 = poly_rem(r0, r1, &q);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw DivisionByZero("element shares a factor with the cyclotomic polynomial");
  const Rational c = 1 / r1[0];
  for (auto& x : s1) x *= c;
  return from_poly(m_, s1);
}

CycNum CycNum::galois(long s) const {
  if (gcd(s, m_) != 1) throw NotCoprime(std::to_string(s) + " is not prime to " + std::to_string(m_));
  Poly poly(static_cast<std::size_t>(m_), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    poly[static_cast<std::size_t>(mod(static_cast<long>(k) * s, m_))] += c_[k];
  }
  return from_poly(m_, std::move(poly));
}

CycNum CycNum::lift(long target) const {
  if (target % m_ != 0) throw ModulusMismatch(std::to_string(target) + " is not a multiple of " + std::to_string(m_));
  if (target == m_) return *this;
  const long step = target / m_;
  Poly poly(static_cast<std::size_t>(target), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) poly[k * static_cast<std::size_t>(step)] = c_[k];
  return from_poly(target, std::move(poly));
}

CycNum CycNum::restrict_to(long target) const {
  if (m_ % target != 0) throw ModulusMismatch(std::to_string(target) + " does not divide " + std::to_string(m_));
  if (target == m_) return *this;
  const std::size_t step = static_cast<std::size_t>(m_ / target);
  // Fast path: when every prime of m/target divides target, Phi_m(x) = Phi_target(x^step),
  // so subfield elements are supported on exponents divisible by step.
  CycNum candidate(target);
  bool supported = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (k % step != 0 || k / step >= candidate.c_.size()) {
      supported = false;
      break;
    }
    candidate.c_[k / step] = c_[k];
  }
  if (supported && candidate.lift(m_) == *this) return candidate;

  // General case: solve sum_k b_k zeta_target^k = this over Q.
  const std::size_t unknowns = candidate.degree();
  std::vector<std::vector<Rational>> columns;
  for (std::size_t k = 0; k < unknowns; ++k)
    columns.push_back(CycNum::zeta_power(target, static_cast<long>(k)).lift(m_).c_);
  std::vector<std::vector<Rational>> rows(c_.size(), std::vector<Rational>(unknowns));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t k = 0; k < unknowns; ++k) rows[i][k] = columns[k][i];
  CycNum out(target);
  out.c_ = solve_rational(std::move(rows), c_, unknowns);
  return out;
}

Rational CycNum::norm() const {
  CycNum product(m_, Rational(1));
  for (long s = 1; s < std::max<long>(m_, 2); ++s)
    if (gcd(s, m_) == 1) product *= galois(s);
  return product.rational_value();
}

Rational CycNum::trace() const {
  Rational t = 0;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) t += c_[k] * ramanujan_sum(m_, static_cast<long>(k));
  return t;
}

long CycNum::valuation_above_p(long p) const {
  if (m_ <= 2) return padic_valuation(c_[0], p);
  if (prime_power_exponent(m_, p) < 1)
    throw Error("valuation above " + std::to_string(p) + " needs a " + std::to_string(p) +
                "-power conductor, got " + std::to_string(m_));
  if (is_zero()) return kInfiniteValuation;

  // Clear denominators: A = D * a has integral coordinates, v(a) = v(A) - phi * v_p(D).
  Integer denom = 1;
  for (const auto& x : c_) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(c_.size());
  for (const auto& x : c_) ints.emplace_back(Integer(x.get_num() * (denom / x.get_den())));
  const long phi = static_cast<long>(c_.size());
  const long shift = phi * padic_valuation(denom, p);

  // Expand A(1 - pi) = sum b_i pi^i with pi = 1 - zeta. The pi^i (i < phi) have distinct
  // valuations mod phi, so v(A) = min_i (phi * v_p(b_i) + i).
  auto evaluate_mod = [&](unsigned long modulus, std::vector<unsigned long>& b) {
    b.assign(c_.size(), 0);
    std::vector<unsigned long> reduced;
    reduced.reserve(ints.size());
    for (const auto& a : ints) reduced.push_back(mpz_fdiv_ui(a.get_mpz_t(), modulus));
    // Horner in the variable (1 - pi): b <- b * (1 - pi) + a_k.
    std::size_t len = 0;
    for (std::size_t k = reduced.size(); k-- > 0;) {
      if (len > 0 && len < b.size()) {
        const unsigned long sub = b[len - 1];
        b[len] = sub == 0 ? 0 : modulus - sub;
      }
      for (std::size_t i = len; i-- > 1;) {
        const unsigned long sub = b[i - 1];
        b[i] = b[i] >= sub ? b[i] - sub : b[i] + (modulus - sub);
      }
      b[0] = (b[0] + reduced[k]) % modulus;
      if (len < b.size()) ++len;
    }
  };

  std::vector<unsigned long> b;
  int exponent = 2;
  while (true) {
    const Integer modulus_big = [&] {
      Integer r;
      mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(exponent));
      return r;
    }();
    if (modulus_big.get_ui() > 0 && mpz_sizeinbase(modulus_big.get_mpz_t(), 2) <= 62) {
      const unsigned long modulus = modulus_big.get_ui();
      evaluate_mod(modulus, b);
      long best = kInfiniteValuation;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == 0) continue;
        long v = 0;
        unsigned long x = b[i];
        while (x % static_cast<unsigned long>(p) == 0) {
          x /= static_cast<unsigned long>(p);
          ++v;
        }
        best = std::min(best, phi * v + static_cast<long>(i));
      }
      if (best != kInfiniteValuation) return best - shift;
      exponent *= 2;
      continue;
    }
    break;
  }

  // Exact fallback for elements divisible by very large powers of p.
  std::vector<Integer> exact(c_.size(), Integer(0));
  std::size_t len = 0;
  for (std::size_t k = ints.size(); k-- > 0;) {
    if (len > 0 && len < exact.size()) exact[len] = -exact[len - 1];
    for (std::size_t i = len; i-- > 1;) exact[i] -= exact[i - 1];
    exact[0] += ints[k];
    if (len < exact.size()) ++len;
  }
  long best = kInfiniteValuation;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    if (exact[i] == 0) continue;
    best = std::min(best, phi * padic_valuation(exact[i], p) + static_cast<long>(i));
  }
  return best - shift;
}

BigComplex CycNum::embed(long root_index, Precision prec) const {
  if (gcd(root_index, m_) != 1)
    throw NotCoprime("root index " + std::to_string(root_index) + " is not prime to " + std::to_string(m_));
  if (prec < kMinPrecision) prec = kMinPrecision;
  if (is_zero()) return BigComplex(prec);
  if (is_rational()) return BigComplex(c_[0], prec);

  auto horner = [&](Precision work) {
    const BigComplex z = BigComplex::root_of_unity(root_index, m_, work);
    BigComplex acc(work);
    for (std::size_t k = c_.size(); k-- > 0;) {
      acc *= z;
      acc += BigComplex(c_[k], work);
    }
    return acc;
  };
  Precision guard = 32;
  for (std::size_t bits = c_.size(); bits > 0; bits >>= 1) ++guard;
  BigComplex previous = horner(prec + guard);
  for (int attempt = 0; attempt < 8; ++attempt) {
    guard += 64;
    BigComplex current = horner(prec + guard);
    const BigFloat scale = current.abs();
    if (distance(current, previous) <= scale * BigFloat::exp2(-static_cast<long>(prec) - 2, prec + guard))
      return current.with_precision(prec);
    previous = std::move(current);
  }
  return previous.with_precision(prec);
}

std::string CycNum::to_string() const {
  std::string out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    out += format_monomial(c_[k], m_, k, first);
    first = false;
  }
  return first ? "0" : out;
}

CycNum mul_lifted(const CycNum& a, const CycNum& b) {
  const long m = lcm(a.modulus(), b.modulus());
  return a.lift(m) * b.lift(m);
}

CycNum add_lifted(const CycNum& a, const CycNum& b) {
  const long m = lcm(a.modulus(), b.modulus());
  return a.lift(m) + b.lift(m);
}

CycNum determinant(std::vector<std::vector<CycNum>> matrix, long modulus) {
  const std::size_t n = matrix.size();
  CycNum det(modulus, Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && matrix[piv][col].is_zero()) ++piv;
    if (piv == n) return CycNum(modulus);
    if (piv != col) {
      std::swap(matrix[piv], matrix[col]);
      det = -det;
    }
    det *= matrix[col][col];
    const CycNum inv = matrix[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (matrix[r][col].is_zero()) continue;
      const CycNum f = matrix[r][col] * inv;
      for (std::size_t k = col; k < n; ++k) matrix[r][k] -= f * matrix[col][k];
    }
  }
  return det;
}

}  // namespace etnc
