#include "absarith/witt.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace absarith {

namespace {

// sparse monomial: sorted (variable, exponent) pairs with positive exponents
using Monomial = std::vector<std::pair<u32, u32>>;
using MPoly = std::map<Monomial, Rat>;

MPoly mp_var(u32 index) { return {{Monomial{{index, 1}}, Rat(1)}}; }

void mp_add_term(MPoly& p, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

MPoly mp_add(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [m, c] : b) mp_add_term(r, m, c);
  return r;
}

MPoly mp_sub(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [m, c] : b) mp_add_term(r, m, -c);
  return r;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
    else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) mp_add_term(r, mono_mul(ma, mb), ca * cb);
  return r;
}

MPoly mp_scale(const MPoly& a, const Rat& s) {
  MPoly r;
  for (const auto& [m, c] : a) {
    Rat v = c * s;
    if (v != 0) r.emplace(m, v);
  }
  return r;
}

// ghost recursion over symbolic series coefficients
std::vector<MPoly> symbolic_ghost(const std::vector<MPoly>& coeffs) {
  const u32 n = static_cast<u32>(coeffs.size());
  std::vector<MPoly> g(n);
  for (u32 i = 1; i <= n; ++i) {
    MPoly acc = mp_scale(coeffs[i - 1], Rat(i));
    for (u32 k = 1; k < i; ++k) acc = mp_sub(acc, mp_mul(g[k - 1], coeffs[i - k - 1]));
    g[i - 1] = acc;
  }
  return g;
}

std::vector<MPoly> symbolic_ghost_inverse(const std::vector<MPoly>& g) {
  const u32 n = static_cast<u32>(g.size());
  std::vector<MPoly> c(n);
  for (u32 i = 1; i <= n; ++i) {
    MPoly acc = g[i - 1];
    for (u32 k = 1; k < i; ++k) acc = mp_add(acc, mp_mul(g[k - 1], c[i - k - 1]));
    c[i - 1] = mp_scale(acc, Rat(1, i));
  }
  return c;
}

constexpr u32 kMaxTablePrecision = 16;
constexpr const char* kTableMagic = "ABSARITH-WITTMUL v1";

std::filesystem::path table_path(u32 precision) {
  return std::filesystem::path(witt_cache_dir()) /
         ("wittmul_N" + std::to_string(precision) + ".poly");
}

bool load_table(WittMulTable& table, u32 precision) {
  std::ifstream in(table_path(precision));
  if (!in) return false;
  std::string magic;
  std::getline(in, magic);
  if (magic != kTableMagic) return false;
  u32 n = 0;
  std::string key;
  in >> key >> n;
  if (key != "N" || n != precision) return false;
  table.precision = n;
  table.polys.assign(n, {});
  for (u32 i = 0; i < n; ++i) {
    std::size_t terms = 0;
    u32 index = 0;
    in >> key >> index >> terms;
    if (key != "poly" || index != i + 1) return false;
    auto& poly = table.polys[i];
    poly.resize(terms);
    for (auto& [mono, coeff] : poly) {
      std::string cs;
      std::size_t nvars = 0;
      in >> cs >> nvars;
      coeff = Int(cs);
      mono.resize(nvars);
      for (auto& [var, exp] : mono) in >> var >> exp;
    }
  }
  return static_cast<bool>(in);
}

void store_table(const WittMulTable& table) {
  std::error_code ec;
  std::filesystem::create_directories(witt_cache_dir(), ec);
  auto path = table_path(table.precision);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is an optimization; failure to persist is not an error
    out << kTableMagic << "\n";
    out << "N " << table.precision << "\n";
    for (u32 i = 0; i < table.precision; ++i) {
      out << "poly " << (i + 1) << " " << table.polys[i].size() << "\n";
      for (const auto& [mono, coeff] : table.polys[i]) {
        out << coeff.str() << " " << mono.size();
        for (const auto& [var, exp] : mono) out << " " << var << " " << exp;
        out << "\n";
      }
    }
  }
  std::filesystem::rename(tmp, path, ec);
}

WittMulTable build_table(u32 precision) {
  // symbolic product of two generic Witt vectors: ghost both, multiply the
  // ghosts componentwise, invert; the result is integral by the universal
  // polynomial theorem, which we verify before caching.
  std::vector<MPoly> ucoeffs(precision), vcoeffs(precision);
  for (u32 i = 0; i < precision; ++i) {
    ucoeffs[i] = mp_var(i);
    vcoeffs[i] = mp_var(precision + i);
  }
  auto gu = symbolic_ghost(ucoeffs);
  auto gv = symbolic_ghost(vcoeffs);
  std::vector<MPoly> h(precision);
  for (u32 i = 0; i < precision; ++i) h[i] = mp_mul(gu[i], gv[i]);
  auto c = symbolic_ghost_inverse(h);

  WittMulTable table;
  table.precision = precision;
  table.polys.assign(precision, {});
  for (u32 i = 0; i < precision; ++i) {
    for (const auto& [mono, coeff] : c[i]) {
      if (rat_den(coeff) != 1)
        throw IntegralityError("universal Witt polynomial is not integral at index " +
                               std::to_string(i + 1));
      table.polys[i].emplace_back(mono, rat_num(coeff));
    }
  }
  return table;
}

u64 eval_table_poly(const std::vector<std::pair<Monomial, Int>>& poly,
                    const std::vector<u64>& values, u64 p) {
  u64 acc = 0;
  for (const auto& [mono, coeff] : poly) {
    u64 term = residue_big(coeff, p);
    for (const auto& [var, exp] : mono)
      term = mulmod(term, powmod(values[var], exp, p), p);
    acc = (acc + term) % p;
  }
  return acc;
}

}  // namespace

std::string witt_cache_dir() {
  if (const char* env = std::getenv("ABSARITH_CACHE_DIR"); env && *env) return env;
  return ".absarith_cache";
}

const WittMulTable& witt_mul_table(u32 precision) {
  if (precision == 0 || precision > kMaxTablePrecision)
    throw SizeError("witt_mul_table: precision above universal-polynomial cache limit");
  static std::mutex mu;
  static std::map<u32, WittMulTable> tables;
  std::scoped_lock lock(mu);
  auto it = tables.find(precision);
  if (it != tables.end()) return it->second;
  WittMulTable table;
  if (!load_table(table, precision)) {
    table = build_table(precision);
    store_table(table);
  }
  return tables.emplace(precision, std::move(table)).first->second;
}

WittZ witt_mul(const WittZ& u, const WittZ& v) {
  check_compatible(u, v);
  Ghost<ZRing> gu = ghost(u);
  Ghost<ZRing> gv = ghost(v);
  for (u32 i = 0; i < u.precision(); ++i) gu[i] *= gv[i];
  return ghost_inverse(u.ring(), gu);
}

WittQ witt_mul(const WittQ& u, const WittQ& v) {
  check_compatible(u, v);
  Ghost<QRing> gu = ghost(u);
  Ghost<QRing> gv = ghost(v);
  for (u32 i = 0; i < u.precision(); ++i) gu[i] *= gv[i];
  return ghost_inverse(u.ring(), gu);
}

WittFp witt_mul(const WittFp& u, const WittFp& v) {
  check_compatible(u, v);
  const u32 n = u.precision();
  const WittMulTable& table = witt_mul_table(n);
  const u64 p = u.ring().p;
  std::vector<u64> values(2 * n);
  for (u32 i = 0; i < n; ++i) {
    values[i] = u.coeffs()[i] % p;
    values[n + i] = v.coeffs()[i] % p;
  }
  std::vector<u64> c(n);
  for (u32 i = 0; i < n; ++i) c[i] = eval_table_poly(table.polys[i], values, p);
  return WittFp(u.ring(), std::move(c));
}

namespace {

template <class R>
WittVector<R> frobenius_via_ghost(u32 n, const WittVector<R>& u) {
  if (n == 0) throw DomainError("frobenius: n must be >= 1");
  const u32 out_prec = u.precision() / n;
  if (out_prec == 0) throw DomainError("frobenius: insufficient precision");
  Ghost<R> g = ghost(u);
  Ghost<R> sub(out_prec);
  for (u32 m = 1; m <= out_prec; ++m) sub[m - 1] = g[n * m - 1];
  return ghost_inverse(u.ring(), sub);
}

}  // namespace

WittZ frobenius(u32 n, const WittZ& u) { return frobenius_via_ghost(n, u); }
WittQ frobenius(u32 n, const WittQ& u) { return frobenius_via_ghost(n, u); }

WittFp frobenius(u32 n, const WittFp& u) {
  // Frobenius commutes with coefficient reduction, so lift, apply, reduce.
  return reduce_mod_p(frobenius(n, lift_to_z(u)), u.ring().p);
}

WittQ sigma_t(const AdamsSequence& a) {
  QRing ring;
  Ghost<QRing> g(a.values.begin(), a.values.end());
  return ghost_inverse(ring, g);
}

WittZ sigma_t_integral(const AdamsSequence& a) { return to_integral(sigma_t(a)); }

WittQ to_rational(const WittZ& u) {
  std::vector<Rat> c;
  c.reserve(u.precision());
  for (const Int& v : u.coeffs()) c.emplace_back(v);
  return WittQ(QRing{}, std::move(c));
}

WittZ to_integral(const WittQ& u) {
  std::vector<Int> c;
  c.reserve(u.precision());
  for (u32 i = 0; i < u.precision(); ++i) {
    const Rat& v = u.coeffs()[i];
    if (rat_den(v) != 1)
      throw IntegralityError("non-integral Witt coefficient at index " + std::to_string(i + 1));
    c.push_back(rat_num(v));
  }
  return WittZ(ZRing{}, std::move(c));
}

WittFp reduce_mod_p(const WittZ& u, u64 p) {
  std::vector<u64> c;
  c.reserve(u.precision());
  for (const Int& v : u.coeffs()) c.push_back(residue_big(v, p));
  return WittFp(FpRing(p), std::move(c));
}

WittZ lift_to_z(const WittFp& u) {
  std::vector<Int> c;
  c.reserve(u.precision());
  for (u64 v : u.coeffs()) c.emplace_back(v % u.ring().p);
  return WittZ(ZRing{}, std::move(c));
}

}  // namespace absarith
