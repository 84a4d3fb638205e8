#include "absarith/cyclotomic.hpp"

namespace absarith {

CyclotomicNumber::CyclotomicNumber(u32 order, IntPolynomial value) : order_(order) {
  if (order == 0) throw DomainError("CyclotomicNumber: order must be >= 1");
  value_ = value.mod_monic(cyclotomic_poly(order));
}

CyclotomicNumber CyclotomicNumber::integer(Int v, u32 order) {
  return CyclotomicNumber(order, IntPolynomial::constant(std::move(v)));
}

CyclotomicNumber CyclotomicNumber::root_power(u32 order, u64 k) {
  return CyclotomicNumber(order, IntPolynomial::monomial(1, static_cast<std::size_t>(k % order)));
}

Int CyclotomicNumber::to_integer() const {
  if (!is_integer()) throw DomainError("CyclotomicNumber: value is not a rational integer");
  return value_.is_zero() ? Int(0) : value_[0];
}

namespace {

u32 common_order(u32 a, u32 b) { return static_cast<u32>(lcm_u64(a, b)); }

}  // namespace

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
  u32 n = common_order(order_, o.order_);
  return CyclotomicNumber(n, lift(n).value_ + o.lift(n).value_);
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
  u32 n = common_order(order_, o.order_);
  return CyclotomicNumber(n, lift(n).value_ - o.lift(n).value_);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  u32 n = common_order(order_, o.order_);
  return CyclotomicNumber(n, lift(n).value_ * o.lift(n).value_);
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  u32 n = common_order(order_, o.order_);
  return lift(n).value_ == o.lift(n).value_;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
  IntPolynomial out;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(value_.degree(), 0)); ++i) {
    if (value_.is_zero()) break;
    if (value_[i] == 0) continue;
    std::size_t k = i == 0 ? 0 : static_cast<std::size_t>(order_) - i;
    out = out + IntPolynomial::monomial(value_[i], k);
  }
  return CyclotomicNumber(order_, out);
}

CyclotomicNumber CyclotomicNumber::lift(u32 new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw DomainError("CyclotomicNumber: lift target must be a multiple of the order");
  const u64 stretch = new_order / order_;
  IntPolynomial out;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(value_.degree(), 0)); ++i) {
    if (value_.is_zero()) break;
    if (value_[i] == 0) continue;
    out = out + IntPolynomial::monomial(value_[i], i * stretch);
  }
  return CyclotomicNumber(new_order, out);
}

std::string CyclotomicNumber::str() const {
  if (is_integer()) return value_.is_zero() ? "0" : value_[0].str();
  return "(" + value_.str() + " in Z[zeta_" + std::to_string(order_) + "])";
}

CyclotomicNumber evaluate_at_zeta(const IntPolynomial& f, u32 order, u64 k) {
  IntPolynomial out;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(f.degree(), 0)); ++i) {
    if (f.is_zero()) break;
    if (f[i] == 0) continue;
    out = out + IntPolynomial::monomial(f[i], (i * (k % order)) % order);
  }
  return CyclotomicNumber(order, out);
}

}  // namespace absarith
