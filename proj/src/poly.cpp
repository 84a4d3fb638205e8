#include "absarith/poly.hpp"

#include <sstream>

namespace absarith {

IntPolynomial IntPolynomial::constant(Int v) {
  IntPolynomial p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPolynomial IntPolynomial::monomial(Int v, std::size_t degree) {
  IntPolynomial p;
  if (v != 0) {
    p.c_.assign(degree + 1, Int(0));
    p.c_[degree] = std::move(v);
  }
  return p;
}

IntPolynomial IntPolynomial::xn_minus_1(std::size_t n) {
  IntPolynomial p;
  p.c_.assign(n + 1, Int(0));
  p.c_[0] = -1;
  p.c_[n] = 1;
  return p;
}

const Int& IntPolynomial::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> r = c_;
  for (auto& v : r) v = -v;
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw IntegralityError("inexact polynomial division");
  std::vector<Int> rem = c_;
  std::vector<Int> quot(c_.size() - divisor.c_.size() + 1, Int(0));
  const Int& lead = divisor.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Int top = rem[i + divisor.c_.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw IntegralityError("inexact polynomial division");
    Int q = top / lead;
    quot[i] = q;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j) rem[i + j] -= q * divisor.c_[j];
  }
  for (const Int& v : rem)
    if (v != 0) throw IntegralityError("inexact polynomial division");
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::mod_monic(const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.leading() != 1)
    throw DomainError("mod_monic needs a monic divisor");
  std::vector<Int> rem = c_;
  const std::size_t d = static_cast<std::size_t>(divisor.degree());
  for (std::size_t i = rem.size(); i-- > d;) {
    Int q = rem[i];
    if (q == 0) continue;
    rem[i] = 0;
    for (std::size_t j = 0; j < d; ++j) rem[i - d + j] -= q * divisor.c_[j];
  }
  if (rem.size() > d) rem.resize(d);
  return IntPolynomial(std::move(rem));
}

Int IntPolynomial::evaluate(const Int& x) const {
  Int r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Int IntPolynomial::evaluate_homogeneous(const Int& a, const Int& b) const {
  if (c_.empty()) return 0;
  Int r = 0;
  Int bp = 1;
  // sum c_i a^i b^(d-i), Horner in a with accumulated powers of b
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = r * a + c_[i] * bp;
    if (i > 0) bp *= b;
  }
  return r;
}

std::string IntPolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Int& v = c_[i];
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    Int av = abs(v);
    if (av != 1 || i == 0) os << av.str();
    if (i >= 1) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Int resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0) return pow_int(f[0], static_cast<u64>(n));
  if (n == 0) return pow_int(g[0], static_cast<u64>(m));
  const int size = m + n;
  std::vector<std::vector<Int>> a(size, std::vector<Int>(size, Int(0)));
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j) a[row][row + j] = f[static_cast<std::size_t>(m - j)];
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j) a[n + row][row + j] = g[static_cast<std::size_t>(n - j)];

  // Bareiss fraction-free elimination: the final pivot is the determinant.
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < size; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[size - 1][size - 1] : -a[size - 1][size - 1];
}

}  // namespace absarith
