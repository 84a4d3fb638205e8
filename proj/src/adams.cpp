#include "absarith/adams.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace absarith {

u32 CharacterTable::power_class(u32 c, u64 n) const {
  const ConjClass& cls = classes.at(c);
  return cls.power.at(static_cast<std::size_t>(n % cls.element_order));
}

void CharacterTable::validate() const {
  u64 size_sum = 0;
  for (u32 idx = 0; idx < classes.size(); ++idx) {
    const ConjClass& c = classes[idx];
    size_sum += c.size;
    if (c.power.size() != c.element_order)
      throw DomainError("CharacterTable: power map must list g^0..g^{order-1}");
    if (c.power[0] != 0 || classes[0].size != 1)
      throw DomainError("CharacterTable: g^0 must be the identity class (index 0)");
    if (c.element_order > 1 && c.power[1] != idx)
      throw DomainError("CharacterTable: power map must fix n = 1");
    for (u32 target : c.power)
      if (target >= classes.size()) throw DomainError("CharacterTable: power map out of range");
  }
  if (size_sum != group_order)
    throw DomainError("CharacterTable: class sizes do not sum to the group order");
  if (chars.size() != classes.size())
    throw DomainError("CharacterTable: need as many irreducibles as classes");
  for (const auto& row : chars)
    if (row.size() != classes.size())
      throw DomainError("CharacterTable: ragged character row");
  // column orthogonality: sum_i chi_i(c) conj(chi_i(d)) = |G|/|class c| [c=d]
  for (u32 c = 0; c < class_count(); ++c) {
    for (u32 d = 0; d <= c; ++d) {
      CyclotomicNumber acc = CyclotomicNumber::integer(0);
      for (u32 i = 0; i < class_count(); ++i)
        acc = acc + chars[i][c] * chars[i][d].conjugate();
      CyclotomicNumber expected =
          CyclotomicNumber::integer(c == d ? Int(group_order / classes[c].size) : Int(0));
      if (!(acc == expected))
        throw DomainError("CharacterTable: column orthogonality fails");
    }
  }
}

namespace {

CyclotomicNumber value_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return CyclotomicNumber::integer(Int(v.get<long long>()));
  if (v.is_object()) {
    const u32 order = v.at("order").get<u32>();
    IntPolynomial poly;
    u32 i = 0;
    for (const auto& coeff : v.at("coeffs"))
      poly = poly + IntPolynomial::monomial(Int(coeff.get<long long>()), i++);
    return CyclotomicNumber(order, poly);
  }
  throw DomainError("CharacterTable: character value must be an integer or {order, coeffs}");
}

}  // namespace

CharacterTable CharacterTable::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CharacterTable t;
  std::vector<std::string> labels;
  for (const auto& jc : j.at("classes")) {
    ConjClass c;
    c.label = jc.at("label").get<std::string>();
    c.size = jc.at("size").get<u64>();
    labels.push_back(c.label);
    t.classes.push_back(std::move(c));
  }
  auto class_index = [&](const std::string& label) -> u32 {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw DomainError("CharacterTable: unknown class label " + label);
    return static_cast<u32>(it - labels.begin());
  };
  u32 idx = 0;
  for (const auto& jc : j.at("classes")) {
    ConjClass& c = t.classes[idx++];
    c.element_order = jc.at("order").get<u64>();
    const auto& jp = jc.at("power");
    c.power.resize(c.element_order);
    for (u64 k = 0; k < c.element_order; ++k)
      c.power[k] = class_index(jp.at(std::to_string(k)).get<std::string>());
  }
  for (const auto& row : j.at("chars")) {
    std::vector<CyclotomicNumber> values;
    for (const auto& v : row) values.push_back(value_from_json(v));
    t.chars.push_back(std::move(values));
  }
  for (const ConjClass& c : t.classes) t.group_order += c.size;
  t.validate();
  return t;
}

CharacterTable CharacterTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("CharacterTable: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

CharacterTable CharacterTable::s3() {
  CharacterTable t;
  t.group_order = 6;
  t.classes = {
      {"1a", 1, 1, {0}},
      {"2a", 3, 2, {0, 1}},
      {"3a", 2, 3, {0, 2, 2}},
  };
  auto row = [](i64 a, i64 b, i64 c) {
    return std::vector<CyclotomicNumber>{CyclotomicNumber::integer(a),
                                         CyclotomicNumber::integer(b),
                                         CyclotomicNumber::integer(c)};
  };
  t.chars = {row(1, 1, 1), row(1, -1, 1), row(2, 0, -1)};
  t.validate();
  return t;
}

CharacterTable CharacterTable::cyclic(u32 n) {
  if (n == 0) throw DomainError("CharacterTable: cyclic group order must be >= 1");
  CharacterTable t;
  t.group_order = n;
  for (u32 c = 0; c < n; ++c) {
    ConjClass cls;
    cls.label = "g" + std::to_string(c);
    cls.size = 1;
    cls.element_order = n / gcd_u64(c, n);
    if (c == 0) cls.element_order = 1;
    cls.power.resize(cls.element_order);
    for (u64 k = 0; k < cls.element_order; ++k)
      cls.power[k] = static_cast<u32>(static_cast<u64>(c) * k % n);
    t.classes.push_back(std::move(cls));
  }
  for (u32 i = 0; i < n; ++i) {
    std::vector<CyclotomicNumber> row;
    for (u32 c = 0; c < n; ++c)
      row.push_back(CyclotomicNumber::root_power(n, static_cast<u64>(i) * c % n));
    t.chars.push_back(std::move(row));
  }
  t.validate();
  return t;
}

CharacterTable CharacterTable::trivial() {
  CharacterTable t;
  t.group_order = 1;
  t.classes = {{"1a", 1, 1, {0}}};
  t.chars = {{CyclotomicNumber::integer(1)}};
  t.validate();
  return t;
}

std::string VirtualCharacter::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const i64 c = coords[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    i64 a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << "chi" << (i + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

// decompose a class function (values per class) in the irreducible basis by
// the exact inner product; throws when a coordinate is not an integer
VirtualCharacter decompose(const std::vector<CyclotomicNumber>& values,
                           const CharacterTable& t) {
  VirtualCharacter out;
  out.coords.resize(t.class_count());
  for (u32 i = 0; i < t.class_count(); ++i) {
    CyclotomicNumber acc = CyclotomicNumber::integer(0);
    for (u32 c = 0; c < t.class_count(); ++c) {
      CyclotomicNumber term =
          CyclotomicNumber::integer(Int(t.classes[c].size)) * values[c] *
          t.chars[i][c].conjugate();
      acc = acc + term;
    }
    if (!acc.is_integer())
      throw IntegralityError("adams: inner product is not rational at chi" + std::to_string(i + 1));
    Int num = acc.to_integer();
    if (num % t.group_order != 0)
      throw IntegralityError("adams: non-integral multiplicity at chi" + std::to_string(i + 1));
    out.coords[i] = static_cast<i64>(num / t.group_order);
  }
  return out;
}

std::vector<CyclotomicNumber> as_class_function(const VirtualCharacter& chi,
                                                const CharacterTable& t) {
  std::vector<CyclotomicNumber> values(t.class_count(), CyclotomicNumber::integer(0));
  for (u32 c = 0; c < t.class_count(); ++c)
    for (u32 i = 0; i < t.class_count(); ++i)
      if (chi.coords[i] != 0)
        values[c] = values[c] + CyclotomicNumber::integer(chi.coords[i]) * t.chars[i][c];
  return values;
}

}  // namespace

VirtualCharacter adams(u64 n, const VirtualCharacter& chi, const CharacterTable& t) {
  if (n == 0) throw DomainError("adams: n must be >= 1");
  if (chi.coords.size() != t.class_count())
    throw DomainError("adams: coordinate count does not match the table");
  std::vector<CyclotomicNumber> base = as_class_function(chi, t);
  std::vector<CyclotomicNumber> twisted(t.class_count(), CyclotomicNumber::integer(0));
  for (u32 c = 0; c < t.class_count(); ++c) twisted[c] = base[t.power_class(c, n)];
  return decompose(twisted, t);
}

VirtualCharacter character_mul(const VirtualCharacter& a, const VirtualCharacter& b,
                               const CharacterTable& t) {
  std::vector<CyclotomicNumber> va = as_class_function(a, t);
  std::vector<CyclotomicNumber> vb = as_class_function(b, t);
  std::vector<CyclotomicNumber> prod(t.class_count(), CyclotomicNumber::integer(0));
  for (u32 c = 0; c < t.class_count(); ++c) prod[c] = va[c] * vb[c];
  return decompose(prod, t);
}

Rat discriminant(const CharacterTable& t) {
  Rat num = 1;
  for (u32 i = 0; i < t.class_count(); ++i) num *= Rat(t.group_order);
  Rat den = 1;
  for (const auto& c : t.classes) den *= Rat(c.size);
  return num / den;
}

std::vector<u32> monoid_action(u64 n, const CharacterTable& t) {
  if (n == 0) throw DomainError("monoid_action: n must be >= 1");
  std::vector<u32> map(t.class_count());
  for (u32 c = 0; c < t.class_count(); ++c) map[c] = t.power_class(c, n);
  return map;
}

std::vector<u32> stable_set(u64 n, const CharacterTable& t) {
  std::set<u32> image;
  for (u32 target : monoid_action(n, t)) image.insert(target);
  return {image.begin(), image.end()};
}

ConductorData conductor_data(const CharacterTable& t) {
  ConductorData out;
  Rat delta = discriminant(t);
  Int delta_num = rat_num(delta) * rat_den(delta);  // primes of Delta
  u64 r0 = 1;
  for (const auto& [p, e] : factorize(delta_num).factors) {
    const u64 prime = static_cast<u64>(p);
    u64 pa = 1;
    u32 a = 0;
    while (true) {
      if (stable_set(pa * prime, t) == stable_set(pa, t)) break;
      pa *= prime;
      ++a;
      if (a > 64) throw DomainError("conductor_data: stabilization failed");
    }
    r0 *= pa;
  }
  out.r0 = r0;
  for (u64 d = 1; d <= r0; ++d)
    if (r0 % d == 0) out.stable_sets.emplace_back(d, stable_set(d, t));
  return out;
}

}  // namespace absarith
