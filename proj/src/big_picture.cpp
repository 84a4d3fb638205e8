#include "absarith/big_picture.hpp"

#include <algorithm>
#include <sstream>

namespace absarith {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// least positive rational alpha with alpha*q integral for all q, i.e. the
// lcm of denominators over the gcd of numerators
Rat clearing_scalar(const std::vector<Rat>& values) {
  Int den_lcm = 1;
  Int num_gcd = 0;
  for (const Rat& q : values) {
    if (q == 0) continue;
    Int num = abs_int(rat_num(q));
    Int den = rat_den(q);
    den_lcm = den_lcm / gcd(den_lcm, den) * den;
    num_gcd = gcd(num_gcd, num);
  }
  if (num_gcd == 0) throw DomainError("clearing_scalar: zero matrix");
  return Rat(den_lcm, num_gcd);
}

u64 mod_inverse(u64 g, u64 h) {
  if (h == 1) return 0;
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(h), new_r = static_cast<i64>(g % h);
  while (new_r != 0) {
    i64 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw DomainError("mod_inverse: arguments not coprime");
  return residue(t, h);
}

}  // namespace

Lattice Lattice::make(Rat M, i64 g, i64 h) {
  if (M <= 0) throw DomainError("Lattice: M must be positive");
  if (h <= 0) throw DomainError("Lattice: h must be positive");
  i64 gr = g % h;
  if (gr < 0) gr += h;
  u64 d = gcd_u64(static_cast<u64>(gr), static_cast<u64>(h));
  Lattice l;
  l.M = std::move(M);
  if (gr == 0) {
    l.g = 0;
    l.h = 1;
  } else {
    l.g = static_cast<u64>(gr) / d;
    l.h = static_cast<u64>(h) / d;
  }
  return l;
}

Lattice Lattice::parse(const std::string& text) {
  auto colon = text.find(':');
  auto parse_rat = [](const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  };
  if (colon == std::string::npos) {
    Rat m = parse_rat(text);
    return make(m, 0, 1);
  }
  Rat m = parse_rat(text.substr(0, colon));
  std::string frac = text.substr(colon + 1);
  auto slash = frac.find('/');
  if (slash == std::string::npos) throw DomainError("Lattice: expected M:g/h");
  i64 g = std::stoll(frac.substr(0, slash));
  i64 h = std::stoll(frac.substr(slash + 1));
  return make(m, g, h);
}

std::string Lattice::str() const {
  std::string s = to_string(M);
  if (g != 0) s += ":" + std::to_string(g) + "/" + std::to_string(h);
  return s;
}

LatticeSum LatticeSum::single(const Lattice& l) {
  LatticeSum s;
  s.terms.emplace(l, 1);
  return s;
}

void LatticeSum::add(const Lattice& l, i64 coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(l, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

LatticeSum& LatticeSum::operator+=(const LatticeSum& o) {
  for (const auto& [l, c] : o.terms) add(l, c);
  return *this;
}

LatticeSum LatticeSum::scaled(i64 k) const {
  LatticeSum s;
  if (k != 0)
    for (const auto& [l, c] : terms) s.terms.emplace(l, c * k);
  return s;
}

std::string LatticeSum::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : terms) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    i64 a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << "L(" << l.str() << ")";
    first = false;
  }
  return os.str();
}

Lattice normalize(const Rat& a11, const Rat& a12, const Rat& a21, const Rat& a22) {
  if (a11 * a22 - a12 * a21 == 0) throw DomainError("normalize: singular basis");
  // clear denominators (projective scaling), then Hermite-reduce over Z
  Rat alpha = clearing_scalar({a11, a12, a21, a22});
  Int m11 = rat_num(a11 * alpha), m12 = rat_num(a12 * alpha);
  Int m21 = rat_num(a21 * alpha), m22 = rat_num(a22 * alpha);

  // bring to upper-triangular form with row operations (gcd elimination)
  while (m21 != 0) {
    Int q = m11 / m21;  // truncated division shrinks the leading entry
    m11 -= q * m21;
    m12 -= q * m22;
    std::swap(m11, m21);
    std::swap(m12, m22);
  }
  if (m11 < 0) {
    m11 = -m11;
    m12 = -m12;
  }
  if (m22 < 0) m22 = -m22;
  // reduce the upper-right entry mod m22
  Int r = m12 % m22;
  if (r < 0) r += m22;
  // scale so the second row is (0,1): M = m11/m22, g/h = r/m22
  Rat M(m11, m22);
  Rat gh(r, m22);
  return Lattice::make(M, static_cast<i64>(rat_num(gh)), static_cast<i64>(rat_den(gh)));
}

Int hyperdistance(const Lattice& l, const Lattice& k) {
  // D = B_l * B_k^{-1} with B = [[M, g/h], [0, 1]]
  Rat d11 = l.M / k.M;
  Rat d12 = Rat(l.g, l.h) - d11 * Rat(k.g, k.h);
  Rat alpha = clearing_scalar({d11, d12, Rat(1)});
  // alpha makes all entries integral with content one; det(alpha D) = alpha^2 * M_l/M_k
  Rat det = alpha * alpha * d11;
  if (rat_den(det) != 1 || det <= 0)
    throw DomainError("hyperdistance: normalization failed");
  return rat_num(det);
}

std::vector<Lattice> sphere(const Lattice& l, u64 n, const BallBudget& budget) {
  if (n == 0) throw DomainError("sphere: n must be >= 1");
  // primitive [[a, b], [0, d]] with ad = n, 0 <= b < d, gcd(a, b, d) = 1,
  // acting on the canonical basis rows of l
  std::vector<Lattice> out;
  u64 count_estimate = 0;
  for (u64 a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    count_estimate += n / a;
    if (count_estimate > budget.max_sphere) throw BudgetError("sphere: enumeration budget exceeded");
  }
  const Rat gh(l.g, l.h);
  for (u64 a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const u64 d = n / a;
    for (u64 b = 0; b < d; ++b) {
      if (gcd_u64(gcd_u64(a, b), d) != 1) continue;
      // rows: a*(M, g/h) + b*(0,1) and d*(0,1)
      out.push_back(normalize(Rat(a) * l.M, Rat(a) * gh + Rat(b), Rat(0), Rat(d)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Lattice> neighbors(const Lattice& l, u64 p, const BallBudget& budget) {
  if (!is_prime(p)) throw DomainError("neighbors: p must be prime");
  return sphere(l, p, budget);
}

Lattice reversed_form(const Lattice& l) {
  const u64 g_inv = l.h == 1 ? 0 : mod_inverse(l.g, l.h);
  return Lattice::make(Rat(1) / (Rat(l.h) * Rat(l.h) * l.M), static_cast<i64>(g_inv),
                       static_cast<i64>(l.h));
}

LatticeSum hecke(u64 n, const LatticeSum& s, const BallBudget& budget) {
  LatticeSum out;
  for (const auto& [l, c] : s.terms)
    for (const Lattice& k : sphere(l, n, budget)) out.add(k, c);
  return out;
}

BCGenerator BCGenerator::phase(u64 a, u64 b) {
  if (b == 0) throw DomainError("BCGenerator: phase denominator must be positive");
  BCGenerator g{Kind::Phase, 1, a % b, b};
  u64 d = gcd_u64(g.phase_a, b);
  if (d > 1) {
    g.phase_a /= d;
    g.phase_b /= d;
  }
  return g;
}

namespace {

// the m-fold preimage sum rho_m(g/h): all x in Q/Z with m x = g/h
std::vector<std::pair<u64, u64>> rho_preimages(u64 m, u64 g, u64 h) {
  std::vector<std::pair<u64, u64>> out;
  out.reserve(m);
  for (u64 j = 0; j < m; ++j) {
    const u64 num = g + j * h;
    const u64 den = m * h;
    if (num == 0) {
      out.emplace_back(0, 1);
      continue;
    }
    const u64 d = gcd_u64(num, den);
    out.emplace_back(num / d, den / d);
  }
  return out;
}

}  // namespace

LatticeSum bost_connes_apply(const BCGenerator& gen, const LatticeSum& s) {
  LatticeSum out;
  for (const auto& [l, coeff] : s.terms) {
    const Int c = rat_num(l.M);
    const Int d = rat_den(l.M);
    switch (gen.kind) {
      case BCGenerator::Kind::En: {
        if (gen.n == 0) throw DomainError("bost_connes: n must be >= 1");
        const u64 m = static_cast<u64>(gcd(Int(gen.n), d));
        for (const auto& [x, y] : rho_preimages(m, l.g, l.h))
          out.add(Lattice::make(l.M * gen.n, static_cast<i64>(x), static_cast<i64>(y)), coeff);
        break;
      }
      case BCGenerator::Kind::EnStar: {
        if (gen.n == 0) throw DomainError("bost_connes: n must be >= 1");
        const u64 m = static_cast<u64>(gcd(Int(gen.n), c));
        const u64 k = gen.n / m;  // Psi^{n/m}
        const u64 new_g = (l.g % l.h) * (k % l.h) % l.h;
        out.add(Lattice::make(l.M / gen.n, static_cast<i64>(new_g), static_cast<i64>(l.h)),
                coeff * static_cast<i64>(m));
        break;
      }
      case BCGenerator::Kind::Phase: {
        // add Psi^c(a/b) = c*a/b mod 1 to g/h; c > 0 since M > 0
        const u64 cb = static_cast<u64>(c % gen.phase_b);
        const u64 shift_num = cb * gen.phase_a % gen.phase_b;
        // g/h + shift_num/phase_b in lowest terms
        const u64 den = l.h * gen.phase_b / gcd_u64(l.h, gen.phase_b);
        const u64 num = (l.g * (den / l.h) + shift_num * (den / gen.phase_b)) % den;
        out.add(Lattice::make(l.M, static_cast<i64>(num), static_cast<i64>(den)), coeff);
        break;
      }
    }
  }
  return out;
}

TreeGraph p_tree(const Lattice& root, u64 p, u32 depth, const BallBudget& budget) {
  TreeGraph g;
  std::set<Lattice> seen{root};
  std::vector<Lattice> frontier{root};
  g.vertices.push_back(root);
  std::set<std::pair<Lattice, Lattice>> edges;
  for (u32 level = 0; level < depth; ++level) {
    std::vector<Lattice> next;
    for (const Lattice& l : frontier) {
      for (const Lattice& k : neighbors(l, p, budget)) {
        auto edge = l < k ? std::make_pair(l, k) : std::make_pair(k, l);
        edges.insert(edge);
        if (seen.insert(k).second) {
          g.vertices.push_back(k);
          next.push_back(k);
        }
      }
    }
    frontier = std::move(next);
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

}  // namespace absarith
