#pragma once

#include <map>
#include <optional>
#include <vector>

#include "absarith/exact.hpp"
#include "absarith/habiro_topology.hpp"

namespace absarith {

// A cover q = a/b : completed Spec(Z) -> P^1_F1.  Reduced, b >= 1, and the
// F1-constants 0, 1, -1 are rejected: they are not covers.
struct RationalMap {
  Int a;
  Int b;

  static RationalMap make(Int a, Int b);
  static RationalMap parse(const std::string& text);  // "a/b" or "a"
  std::string str() const;
};

// Schematic point of the completed Spec(Z): a finite prime or the real place.
struct SpecZPoint {
  enum class Tag { Prime, Infinity };
  Tag tag = Tag::Prime;
  Int p = 2;

  static SpecZPoint prime(Int p);
  static SpecZPoint infinity() { return {Tag::Infinity, 0}; }
  bool operator==(const SpecZPoint& o) const { return tag == o.tag && p == o.p; }
  bool operator<(const SpecZPoint& o) const {
    if (tag != o.tag) return tag < o.tag;
    return p < o.p;
  }
  std::string str() const;
};

// Z-linear combination of the symbols {log p : p prime} and the constant 1.
// Canonical: no zero weights stored.
struct FormalDegree {
  std::map<u64, i64> logs;
  i64 constant = 0;

  bool is_zero() const { return constant == 0 && logs.empty(); }
  void add_log(u64 p, i64 weight);
  FormalDegree& operator+=(const FormalDegree& o);
  FormalDegree operator-() const;
  bool operator==(const FormalDegree&) const = default;
  double to_double() const;
  std::string str() const;
};

// log of a positive integer expanded over prime symbols
FormalDegree log_of(const Factorization& f);

// Integer-weighted formal sum over schematic points of completed Spec(Z);
// the infinity coefficient is itself a symbolic combination of prime logs
// and the constant 1.
struct FormalDivisor {
  std::map<u64, i64> finite;   // prime -> coefficient
  FormalDegree infinity_coeff; // coefficient of [infinity]

  bool operator==(const FormalDivisor&) const = default;
};

P1Point evaluate(const RationalMap& q, const SpecZPoint& x);

struct FiberResult {
  std::vector<SpecZPoint> points;
  bool complete = true;
  std::optional<Int> unfactored;  // cofactor the budget could not split
};

// Exact fiber over a schematic point.  For finite [n] these are the primes
// dividing Phi_n(a, b) whose order is exactly n; [0] and [infinity] follow
// the boundary rules.  Budget failures yield an explicitly incomplete result.
FiberResult fiber(const RationalMap& q, const P1Point& target,
                  const FactorBudget& budget = {});

// Emptiness of the fiber over [n] without any factoring: strip the prime
// factors of n from Phi_n(a,b) and test whether anything is left.
bool fiber_empty(const RationalMap& q, u64 n);

// The two Zsigmondy exceptions: (a,b,n) = (2,1,6), or n = 2 with a+b a
// power of two.  Outside them the fiber over [n] is guaranteed nonempty.
bool zsigmondy_exception(const Int& a, const Int& b, u64 n);

FormalDivisor divisor_of(const RationalMap& q);
FormalDegree degree_of(const FormalDivisor& d);

u32 ramification_index(const RationalMap& q, u64 p);

// (e_q(p) - 1) log p / log|a|, kept symbolically as numerator/denominator.
struct DefectValue {
  FormalDegree numerator;    // (e-1) log p, summed over a fiber if requested
  FormalDegree denominator;  // log|a|
  double to_double() const;
};

DefectValue defect(const RationalMap& q, u64 p);
DefectValue fiber_defect(const RationalMap& q, const P1Point& target,
                         const FactorBudget& budget = {});

struct AbcReport {
  Int A, B, C;
  Int radical;           // rad(A*B*C)
  double ratio;          // C / rad(A*B*C)
  RationalMap q;         // a = C, b = min(A,B)
  DefectValue defect_zero;
  DefectValue defect_one;
  DefectValue defect_infinity;  // includes the log(q) - 1 contribution of the real place
  std::string infinity_note;
};

AbcReport abc_report(const Int& A, const Int& B, const Int& C);

// all primes p <= bound with evaluate(q, p) in the open
std::vector<u64> exotic_preimage(const RationalMap& q, const HabiroOpenDescriptor& open,
                                 u64 prime_bound);

// evaluate at every prime <= bound, ascending (OpenMP kernel + serial twin)
std::vector<std::pair<u64, P1Point>> graph_scan(const RationalMap& q, u64 bound);
std::vector<std::pair<u64, P1Point>> graph_scan_serial(const RationalMap& q, u64 bound);

// |a| / rad(|a|) expanded over prime logs; the fiber-defect closed forms
FormalDegree log_nonradical_part(const Int& a);

}  // namespace absarith
