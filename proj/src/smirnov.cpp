#include "absarith/smirnov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace absarith {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// order of (a/b mod p) in F_p^*; requires p coprime to ab
u64 order_mod(const Int& a, const Int& b, u64 p) {
  u64 ar = residue_big(a, p);
  u64 br = residue_big(b, p);
  u64 binv = powmod(br, p - 2, p);  // p prime
  return multiplicative_order_u(mulmod(ar, binv, p), p);
}

// v_p(a^n - b^n) computed by lifting through successive prime powers; stays
// in 64-bit modular arithmetic throughout.
u32 valuation_of_power_difference(const Int& a, const Int& b, u64 n, u64 p) {
  u32 v = 0;
  u64 pk = 1;
  while (pk <= std::numeric_limits<u64>::max() / p) {
    pk *= p;
    u64 ar = residue_big(a, pk);
    u64 br = residue_big(b, pk);
    if (powmod(ar, n, pk) != powmod(br, n, pk)) break;
    ++v;
  }
  return v;
}

}  // namespace

RationalMap RationalMap::make(Int a, Int b) {
  if (b == 0) throw DomainError("RationalMap: denominator must be nonzero");
  if (b < 0) {
    a = -a;
    b = -b;
  }
  Int g = gcd(abs_int(a), b);
  if (g > 1) {
    a /= g;
    b /= g;
  }
  if (a == 0 || (abs_int(a) == 1 && b == 1))
    throw DomainError("RationalMap: 0, 1, -1 are F1-constants, not covers");
  RationalMap q;
  q.a = std::move(a);
  q.b = std::move(b);
  return q;
}

RationalMap RationalMap::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return make(Int(text), 1);
  return make(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

std::string RationalMap::str() const {
  return b == 1 ? a.str() : a.str() + "/" + b.str();
}

SpecZPoint SpecZPoint::prime(Int p) {
  if (!is_prime(p)) throw DomainError("SpecZPoint: not a certified prime");
  return {Tag::Prime, std::move(p)};
}

std::string SpecZPoint::str() const { return tag == Tag::Infinity ? "inf" : p.str(); }

void FormalDegree::add_log(u64 p, i64 weight) {
  if (weight == 0) return;
  auto [it, inserted] = logs.emplace(p, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second == 0) logs.erase(it);
  }
}

FormalDegree& FormalDegree::operator+=(const FormalDegree& o) {
  for (const auto& [p, w] : o.logs) add_log(p, w);
  constant += o.constant;
  return *this;
}

FormalDegree FormalDegree::operator-() const {
  FormalDegree r;
  r.constant = -constant;
  for (const auto& [p, w] : logs) r.logs.emplace(p, -w);
  return r;
}

double FormalDegree::to_double() const {
  double v = static_cast<double>(constant);
  for (const auto& [p, w] : logs) v += static_cast<double>(w) * std::log(static_cast<double>(p));
  return v;
}

std::string FormalDegree::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, w] : logs) {
    if (!first) os << (w > 0 ? " + " : " - ");
    else if (w < 0) os << "-";
    i64 aw = w < 0 ? -w : w;
    if (aw != 1) os << aw << "*";
    os << "log(" << p << ")";
    first = false;
  }
  if (constant != 0) {
    if (!first) os << (constant > 0 ? " + " : " - ");
    else if (constant < 0) os << "-";
    os << (constant < 0 ? -constant : constant);
  }
  return os.str();
}

FormalDegree log_of(const Factorization& f) {
  FormalDegree d;
  for (const auto& [p, e] : f.factors) {
    if (p > Int(std::numeric_limits<u64>::max()))
      throw SizeError("log_of: prime too large for the symbol table");
    d.add_log(static_cast<u64>(p), e);
  }
  return d;
}

P1Point evaluate(const RationalMap& q, const SpecZPoint& x) {
  if (x.tag == SpecZPoint::Tag::Infinity)
    return abs_int(q.a) < q.b ? P1Point::zero() : P1Point::infinity();
  if (x.p > Int(std::numeric_limits<i64>::max()))
    throw SizeError("evaluate: prime too large for order computation");
  const u64 p = static_cast<u64>(x.p);
  if (q.a % p == 0) return P1Point::zero();
  if (q.b % p == 0) return P1Point::infinity();
  return P1Point::finite(order_mod(q.a, q.b, p));
}

namespace {

// |Phi_n(a, b)|, the homogeneous cyclotomic value whose new prime factors
// are exactly the order-n primes.
Int cyclotomic_value(const RationalMap& q, u64 n) {
  if (n > 100000) throw SizeError("fiber: index too large for cyclotomic evaluation");
  const IntPolynomial& phi = cyclotomic_poly(static_cast<u32>(n));
  return abs_int(phi.evaluate_homogeneous(q.a, q.b));
}

}  // namespace

bool fiber_empty(const RationalMap& q, u64 n) {
  if (n == 0) throw DomainError("fiber_empty: n must be >= 1");
  Int v = cyclotomic_value(q, n);
  if (n == 1) return v == 1;
  Factorization nf = factorize(n);
  for (const auto& [p, e] : nf.factors)
    while (v % p == 0) v /= p;
  return v == 1;
}

FiberResult fiber(const RationalMap& q, const P1Point& target, const FactorBudget& budget) {
  FiberResult result;
  if (target.tag != P1Point::Tag::Finite) {
    const bool over_zero = target.tag == P1Point::Tag::Zero;
    PartialFactorization pf = factorize_partial(over_zero ? abs_int(q.a) : q.b, budget);
    for (const auto& [p, e] : pf.factored.factors)
      result.points.push_back(SpecZPoint::prime(p));
    if (over_zero == (abs_int(q.a) < q.b)) result.points.push_back(SpecZPoint::infinity());
    if (!pf.complete()) {
      result.complete = false;
      result.unfactored = pf.unfactored;
    }
    return result;
  }
  const u64 n = target.n;
  PartialFactorization pf = factorize_partial(cyclotomic_value(q, n), budget);
  for (const auto& [p, e] : pf.factored.factors) {
    if (q.a % p == 0 || q.b % p == 0) continue;
    if (p <= Int(std::numeric_limits<i64>::max())) {
      if (order_mod(q.a, q.b, static_cast<u64>(p)) == n)
        result.points.push_back(SpecZPoint::prime(p));
    } else {
      // p | Phi_n(a,b) with p > n, hence p coprime to n, forces order exactly n
      result.points.push_back(SpecZPoint::prime(p));
    }
  }
  if (!pf.complete()) {
    result.complete = false;
    result.unfactored = pf.unfactored;
  }
  std::sort(result.points.begin(), result.points.end());
  return result;
}

bool zsigmondy_exception(const Int& a, const Int& b, u64 n) {
  if (!(b >= 1 && a > b)) throw DomainError("zsigmondy_exception: need 1 <= b < a");
  if (gcd(a, b) != 1) throw DomainError("zsigmondy_exception: a, b must be coprime");
  if (n < 2) throw DomainError("zsigmondy_exception: n must be >= 2");
  if (a == 2 && b == 1 && n == 6) return true;
  if (n == 2) {
    Int s = a + b;
    while (s % 2 == 0) s /= 2;
    return s == 1;
  }
  return false;
}

FormalDivisor divisor_of(const RationalMap& q) {
  FormalDivisor d;
  FormalDegree log_q;  // log|a| - log(b)
  for (const auto& [p, e] : factorize(abs_int(q.a)).factors) {
    d.finite[static_cast<u64>(p)] = e;
    log_q.add_log(static_cast<u64>(p), e);
  }
  for (const auto& [p, e] : factorize(q.b).factors) {
    d.finite[static_cast<u64>(p)] -= e;
    if (d.finite[static_cast<u64>(p)] == 0) d.finite.erase(static_cast<u64>(p));
    log_q.add_log(static_cast<u64>(p), -static_cast<i64>(e));
  }
  d.infinity_coeff = -log_q;
  return d;
}

FormalDegree degree_of(const FormalDivisor& d) {
  FormalDegree deg;
  for (const auto& [p, c] : d.finite) deg.add_log(p, c);  // deg(p) = log p
  deg += d.infinity_coeff;                                // deg(infinity) = 1
  return deg;
}

u32 ramification_index(const RationalMap& q, u64 p) {
  if (!is_prime(p)) throw DomainError("ramification_index: p must be prime");
  if (q.a % p == 0) {
    u32 v = 0;
    Int a = abs_int(q.a);
    while (a % p == 0) {
      a /= p;
      ++v;
    }
    return v;
  }
  if (q.b % p == 0) {
    u32 v = 0;
    Int b = q.b;
    while (b % p == 0) {
      b /= p;
      ++v;
    }
    return v;
  }
  const u64 n = order_mod(q.a, q.b, p);
  return valuation_of_power_difference(q.a, q.b, n, p);
}

double DefectValue::to_double() const {
  double den = denominator.to_double();
  if (den == 0.0) throw DomainError("defect: log(a) vanishes");
  return numerator.to_double() / den;
}

DefectValue defect(const RationalMap& q, u64 p) {
  DefectValue d;
  const u32 e = ramification_index(q, p);
  d.numerator.add_log(p, static_cast<i64>(e) - 1);
  d.denominator = log_of(factorize(abs_int(q.a)));
  return d;
}

DefectValue fiber_defect(const RationalMap& q, const P1Point& target, const FactorBudget& budget) {
  FiberResult f = fiber(q, target, budget);
  if (!f.complete)
    throw BudgetError("fiber_defect: fiber incomplete, unfactored part " +
                      f.unfactored->str());
  DefectValue total;
  total.denominator = log_of(factorize(abs_int(q.a)));
  for (const SpecZPoint& pt : f.points) {
    if (pt.tag != SpecZPoint::Tag::Prime) continue;  // finite part of the defect sum
    if (pt.p > Int(std::numeric_limits<u64>::max()))
      throw SizeError("fiber_defect: prime exceeds the 64-bit log-symbol table");
    const u64 prime = static_cast<u64>(pt.p);
    const u32 e = ramification_index(q, prime);
    total.numerator.add_log(prime, static_cast<i64>(e) - 1);
  }
  return total;
}

FormalDegree log_nonradical_part(const Int& a) {
  FormalDegree d;
  for (const auto& [p, e] : factorize(abs_int(a)).factors)
    if (e > 1) d.add_log(static_cast<u64>(p), static_cast<i64>(e) - 1);
  return d;
}

AbcReport abc_report(const Int& A, const Int& B, const Int& C) {
  if (A <= 0 || B <= 0 || C <= 0) throw DomainError("abc_report: A, B, C must be positive");
  if (A + B != C) throw DomainError("abc_report: A + B must equal C");
  if (gcd(gcd(A, B), C) != 1) throw DomainError("abc_report: A, B, C must be coprime");
  AbcReport r{A, B, C, 0, 0.0, RationalMap::make(C, std::min(A, B)), {}, {}, {}, {}};
  Factorization f = factorize(A * B * C);
  r.radical = f.radical();
  r.ratio = static_cast<double>(C) / static_cast<double>(r.radical);
  r.defect_zero = fiber_defect(r.q, P1Point::zero());
  r.defect_one = fiber_defect(r.q, P1Point::finite(1));
  // delta([inf]) = (log(b_1) + log(q) - 1) / log(a); the real place
  // contributes log(q) - 1, read with that literal grouping.
  r.defect_infinity.denominator = log_of(factorize(r.q.a));
  r.defect_infinity.numerator = log_nonradical_part(r.q.b);
  r.defect_infinity.numerator += log_of(factorize(r.q.a));
  r.defect_infinity.numerator += -log_of(factorize(r.q.b));
  r.defect_infinity.numerator.constant -= 1;
  r.infinity_note = "infinity contribution read as (log q) - 1";
  return r;
}

std::vector<u64> exotic_preimage(const RationalMap& q, const HabiroOpenDescriptor& open,
                                 u64 prime_bound) {
  std::vector<u64> out;
  for (const auto& [p, pt] : graph_scan(q, prime_bound))
    if (in_open(open, pt)) out.push_back(p);
  return out;
}

}  // namespace absarith
