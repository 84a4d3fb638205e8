// absarith: exact arithmetic on the absolute projective line and friends.
//
// Subcommand surface:
//   smirnov eval|fiber|graph|divisor|defect|abc
//   habiro open|wheel|witness
//   hring eval|zagier
//   witt add|mul|ghost|frob|versch|sigma
//   burnside tau|convert|necklace
//   bigpicture dist|neighbors|ball|tree|hecke|bc
//   nimber mul|pow|order|root|orbit|poly|tower|dict
//   adams apply|action|disc
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 budget exhausted.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "absarith/adams.hpp"
#include "absarith/big_picture.hpp"
#include "absarith/burnside.hpp"
#include "absarith/habiro_ring.hpp"
#include "absarith/nimber.hpp"
#include "absarith/render.hpp"
#include "absarith/scan.hpp"

using namespace absarith;

namespace {

struct Output {
  std::string format = "text";
  std::string path;  // empty = stdout

  void emit(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      if (!content.empty() && content.back() != '\n') std::cout << "\n";
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw DomainError("cannot open output file " + path);
      out << content;
    }
  }
};

void add_output_flags(CLI::App* cmd, Output& out, std::string default_format = "text") {
  out.format = std::move(default_format);
  cmd->add_option("--format", out.format, "output format");
  cmd->add_option("--out", out.path, "output path (default stdout)");
}

u64 env_u64(const char* name, u64 fallback) {
  if (const char* v = std::getenv(name); v && *v) return std::strtoull(v, nullptr, 10);
  return fallback;
}

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

P1Point parse_p1(const std::string& text) {
  if (text == "0") return P1Point::zero();
  if (text == "inf" || text == "infinity") return P1Point::infinity();
  return P1Point::finite(std::stoull(text));
}

RootOfUnity parse_root(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return RootOfUnity::make(std::stoll(text), 1);
  return RootOfUnity::make(std::stoll(text.substr(0, slash)),
                           std::stoll(text.substr(slash + 1)));
}

std::string points_json(const FiberResult& fr) {
  std::string out = "{\"primes\":[";
  bool first = true;
  bool has_inf = false;
  for (const SpecZPoint& pt : fr.points) {
    if (pt.tag == SpecZPoint::Tag::Infinity) {
      has_inf = true;
      continue;
    }
    if (!first) out += ",";
    out += pt.p.str();
    first = false;
  }
  out += "]";
  if (has_inf) out += ",\"infinity\":true";
  if (!fr.complete) out += ",\"complete\":false,\"unfactored\":\"" + fr.unfactored->str() + "\"";
  out += "}";
  return out;
}

CharacterTable load_table(const std::string& spec) {
  if (spec == "builtin:s3" || spec.empty()) return CharacterTable::s3();
  if (spec.rfind("builtin:c", 0) == 0)
    return CharacterTable::cyclic(static_cast<u32>(std::stoul(spec.substr(9))));
  return CharacterTable::load(spec);
}

// ---------------------------------------------------------------------------

void register_smirnov(CLI::App& app) {
  auto* smirnov = app.add_subcommand("smirnov", "Smirnov cover maps q: Spec(Z) -> P1_F1");
  smirnov->require_subcommand(1);

  {
    auto* eval = smirnov->add_subcommand("eval", "evaluate q at a prime or the real place");
    auto q = std::make_shared<std::string>();
    auto at = std::make_shared<std::string>();
    eval->add_option("--q", *q, "the map a/b")->required();
    eval->add_option("--at", *at, "a prime, or 'inf'")->required();
    eval->callback([q, at] {
      RationalMap map = RationalMap::parse(*q);
      SpecZPoint pt = *at == "inf" ? SpecZPoint::infinity() : SpecZPoint::prime(Int(*at));
      std::cout << evaluate(map, pt).str() << "\n";
    });
  }
  {
    auto* fib = smirnov->add_subcommand("fiber", "exact fiber over a schematic point");
    auto q = std::make_shared<std::string>();
    auto n = std::make_shared<std::string>();
    auto out = std::make_shared<Output>();
    auto budget = std::make_shared<u64>(env_u64("ABSARITH_FACTOR_BUDGET", 1u << 22));
    fib->add_option("--q", *q)->required();
    fib->add_option("--n", *n, "target: positive integer, 0, or inf")->required();
    fib->add_option("--budget", *budget, "rho iterations before giving up");
    add_output_flags(fib, *out, "json");
    fib->callback([q, n, out, budget] {
      FiberResult fr =
          fiber(RationalMap::parse(*q), parse_p1(*n), FactorBudget{.rho_iterations = *budget});
      if (out->format == "json") {
        out->emit(points_json(fr));
      } else {
        std::string text;
        for (const SpecZPoint& pt : fr.points) text += pt.str() + "\n";
        if (!fr.complete) text += "incomplete: unfactored " + fr.unfactored->str() + "\n";
        out->emit(text);
      }
      if (!fr.complete) throw BudgetError("fiber incomplete");
    });
  }
  {
    auto* graph = smirnov->add_subcommand("graph", "evaluate at every prime below a bound");
    auto q = std::make_shared<std::string>();
    auto bound = std::make_shared<u64>(100);
    auto out = std::make_shared<Output>();
    graph->add_option("--q", *q)->required();
    graph->add_option("--bound", *bound, "prime bound");
    add_output_flags(graph, *out, "csv");
    graph->callback([q, bound, out] {
      auto points = graph_scan(RationalMap::parse(*q), *bound);
      if (out->format == "svg") {
        out->emit(render_smirnov_svg(points));
      } else if (out->format == "json") {
        std::string s = "[";
        for (std::size_t i = 0; i < points.size(); ++i) {
          if (i) s += ",";
          s += "{\"p\":" + std::to_string(points[i].first) + ",\"value\":\"" +
               points[i].second.str() + "\"}";
        }
        out->emit(s + "]");
      } else {
        std::string s = "p,value\n";
        for (const auto& [p, pt] : points) s += std::to_string(p) + "," + pt.str() + "\n";
        out->emit(s);
      }
    });
  }
  {
    auto* div = smirnov->add_subcommand("divisor", "principal divisor of q with exact degree");
    auto q = std::make_shared<std::string>();
    auto out = std::make_shared<Output>();
    div->add_option("--q", *q)->required();
    add_output_flags(div, *out, "json");
    div->callback([q, out] {
      FormalDivisor d = divisor_of(RationalMap::parse(*q));
      if (out->format == "json") {
        out->emit(divisor_to_json(d));
      } else {
        std::string s;
        for (const auto& [p, c] : d.finite)
          s += std::to_string(c) + "*[" + std::to_string(p) + "]\n";
        s += "[inf] coefficient: " + d.infinity_coeff.str() + "\n";
        s += "degree: " + degree_of(d).str() + "\n";
        out->emit(s);
      }
    });
  }
  {
    auto* def = smirnov->add_subcommand("defect", "arithmetic defect at a prime or over a fiber");
    auto q = std::make_shared<std::string>();
    auto p = std::make_shared<u64>(0);
    auto target = std::make_shared<std::string>();
    def->add_option("--q", *q)->required();
    def->add_option("--p", *p, "a prime");
    def->add_option("--target", *target, "a schematic point of P1 (sums over the fiber)");
    def->callback([q, p, target] {
      RationalMap map = RationalMap::parse(*q);
      DefectValue v = *p != 0 ? defect(map, *p) : fiber_defect(map, parse_p1(*target));
      std::cout << format17(v.to_double()) << "\n";
      std::cout << "exact: (" << v.numerator.str() << ") / (" << v.denominator.str() << ")\n";
    });
  }
  {
    auto* abc = smirnov->add_subcommand("abc", "radical report for an abc triple");
    auto A = std::make_shared<std::string>();
    auto B = std::make_shared<std::string>();
    auto C = std::make_shared<std::string>();
    abc->add_option("--A", *A)->required();
    abc->add_option("--B", *B)->required();
    abc->add_option("--C", *C)->required();
    abc->callback([A, B, C] {
      AbcReport r = abc_report(Int(*A), Int(*B), Int(*C));
      std::cout << "radical: " << r.radical.str() << "\n";
      std::cout << "ratio: " << format17(r.ratio) << "\n";
      std::cout << "q: " << r.q.str() << "\n";
      std::cout << "defect[0]: " << format17(r.defect_zero.to_double()) << "\n";
      std::cout << "defect[1]: " << format17(r.defect_one.to_double()) << "\n";
      std::cout << "defect[inf]: " << format17(r.defect_infinity.to_double()) << " ("
                << r.infinity_note << ")\n";
    });
  }
  {
    auto* pre = smirnov->add_subcommand("preimage", "primes mapping into a Habiro open");
    auto q = std::make_shared<std::string>();
    auto open = std::make_shared<std::string>();
    auto bound = std::make_shared<u64>(100);
    pre->add_option("--q", *q)->required();
    pre->add_option("--open", *open, "open descriptor as JSON")->required();
    pre->add_option("--bound", *bound);
    pre->callback([q, open, bound] {
      for (u64 p : exotic_preimage(RationalMap::parse(*q), open_from_json(*open), *bound))
        std::cout << p << "\n";
    });
  }
}

void register_habiro(CLI::App& app) {
  auto* habiro = app.add_subcommand("habiro", "Habiro topology on P1_F1 and roots of unity");
  habiro->require_subcommand(1);
  {
    auto* open = habiro->add_subcommand("open", "membership and bounded enumeration of opens");
    auto descriptor = std::make_shared<std::string>();
    auto point = std::make_shared<std::string>();
    auto bound = std::make_shared<u64>(0);
    open->add_option("--open", *descriptor, "open descriptor as JSON")->required();
    open->add_option("--point", *point, "test one point");
    open->add_option("--bound", *bound, "list members with finite part <= bound");
    open->callback([descriptor, point, bound] {
      HabiroOpenDescriptor d = open_from_json(*descriptor);
      if (!point->empty()) {
        std::cout << (in_open(d, parse_p1(*point)) ? "member" : "not-member") << "\n";
        return;
      }
      if (in_open(d, P1Point::zero())) std::cout << "[0]\n";
      if (in_open(d, P1Point::infinity())) std::cout << "[inf]\n";
      for (u64 n = 1; n <= *bound; ++n)
        if (in_open(d, P1Point::finite(n))) std::cout << "[" << n << "]\n";
    });
  }
  {
    auto* wheel = habiro->add_subcommand("wheel", "adjacency wheel on the N-th roots of unity");
    auto n = std::make_shared<u64>(60);
    auto out = std::make_shared<Output>();
    wheel->add_option("--n", *n, "wheel order")->required();
    add_output_flags(wheel, *out, "svg");
    wheel->callback([n, out] {
      auto edges = adjacency_wheel(*n);
      if (out->format == "svg") {
        out->emit(render_wheel_svg(*n, edges));
      } else if (out->format == "json") {
        std::string s = "[";
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if (i) s += ",";
          s += "{\"a\":\"" + edges[i].a.str() + "\",\"b\":\"" + edges[i].b.str() +
               "\",\"prime\":" + std::to_string(edges[i].prime) + "}";
        }
        out->emit(s + "]");
      } else {
        std::string s = "a,b,prime\n";
        for (const auto& e : edges)
          s += e.a.str() + "," + e.b.str() + "," + std::to_string(e.prime) + "\n";
        out->emit(s);
      }
    });
  }
  {
    auto* witness = habiro->add_subcommand("witness", "non-compactness witness for a prime list");
    auto primes = std::make_shared<std::string>();
    witness->add_option("--primes", *primes, "comma-separated primes")->required();
    witness->callback([primes] {
      std::vector<u64> ps;
      for (const std::string& s : split(*primes, ',')) ps.push_back(std::stoull(s));
      std::cout << noncompactness_witness(ps) << "\n";
    });
  }
}

void register_hring(CLI::App& app) {
  auto* hring = app.add_subcommand("hring", "truncated Habiro ring elements");
  hring->require_subcommand(1);
  {
    auto* eval = hring->add_subcommand("eval", "evaluate an element at a root of unity");
    auto element = std::make_shared<std::string>("kontsevich");
    auto poly = std::make_shared<std::string>();
    auto level = std::make_shared<u32>(12);
    auto root = std::make_shared<std::string>();
    eval->add_option("--element", *element, "'kontsevich' or use --poly");
    eval->add_option("--poly", *poly, "polynomial coefficients c0,c1,...");
    eval->add_option("--level", *level, "truncation level");
    eval->add_option("--root", *root, "root of unity g/h")->required();
    eval->callback([element, poly, level, root] {
      HabiroElement e;
      if (!poly->empty()) {
        std::vector<Int> coeffs;
        for (const std::string& s : split(*poly, ',')) coeffs.emplace_back(s);
        e = to_factorial_basis(IntPolynomial(std::move(coeffs)), *level);
      } else if (*element == "kontsevich") {
        e = kontsevich_element(*level);
      } else {
        throw DomainError("unknown element " + *element);
      }
      std::cout << evaluate_at_root(e, parse_root(*root)).str() << "\n";
    });
  }
  {
    auto* zagier = hring->add_subcommand("zagier", "radial-limit table |LHS - RHS|");
    auto order = std::make_shared<u64>(1);
    auto rs = std::make_shared<std::string>("0.9,0.99,0.999");
    auto out = std::make_shared<Output>();
    zagier->add_option("--root-order", *order, "order of the root (1 or 2)");
    zagier->add_option("--r", *rs, "comma-separated radii in (0,1)");
    add_output_flags(zagier, *out, "csv");
    zagier->callback([order, rs, out] {
      if (*order != 1 && *order != 2)
        throw DomainError("radial table supports roots of order 1 and 2");
      HabiroElement k = kontsevich_element(static_cast<u32>(*order) + 1);
      const double lhs = static_cast<double>(
          evaluate_at_root(k, RootOfUnity::make(*order == 1 ? 0 : 1, static_cast<i64>(*order)))
              .to_integer());
      std::string s = "r,abs_err\n";
      for (const std::string& rstr : split(*rs, ',')) {
        const double r = std::stod(rstr);
        const double sign = *order == 1 ? 1.0 : -1.0;
        ZagierSum rhs = zagier_rhs(r * sign);
        s += rstr + "," + format17(std::abs(rhs.value - lhs)) + "\n";
      }
      out->emit(s);
    });
  }
}

template <class R>
WittVector<R> parse_witt(const R& ring, const std::string& csv, u32 precision = 0) {
  std::vector<typename R::Elem> coeffs;
  for (const std::string& s : split(csv, ',')) {
    if constexpr (std::is_same_v<R, ZRing>) coeffs.emplace_back(s);
    else if constexpr (std::is_same_v<R, QRing>) {
      auto slash = s.find('/');
      if (slash == std::string::npos) coeffs.emplace_back(Int(s));
      else coeffs.emplace_back(Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1))));
    } else {
      coeffs.push_back(ring.from_int(std::stoll(s)));
    }
  }
  // --precision pads with zeros or truncates
  if (precision != 0) coeffs.resize(precision, ring.zero());
  return WittVector<R>(ring, std::move(coeffs));
}

void register_witt(CLI::App& app) {
  auto* witt = app.add_subcommand("witt", "truncated big Witt vectors");
  witt->require_subcommand(1);
  auto ring_name = std::make_shared<std::string>("Z");
  auto prime = std::make_shared<u64>(0);
  auto precision = std::make_shared<u32>(0);

  auto dispatch_ring = [ring_name, prime](auto&& fn) {
    if (*ring_name == "Z") fn(ZRing{});
    else if (*ring_name == "Q") fn(QRing{});
    else if (*ring_name == "Fp") {
      if (*prime == 0) throw DomainError("--p required for ring Fp");
      fn(FpRing(*prime));
    } else {
      throw DomainError("unknown ring " + *ring_name);
    }
  };

  for (const char* op : {"add", "mul"}) {
    auto* cmd = witt->add_subcommand(op, std::string(op) + " two Witt vectors");
    auto u = std::make_shared<std::string>();
    auto v = std::make_shared<std::string>();
    std::string opname = op;
    cmd->add_option("--u", *u, "coefficients a1,a2,...")->required();
    cmd->add_option("--v", *v, "coefficients b1,b2,...")->required();
    cmd->add_option("--ring", *ring_name, "Z, Q, or Fp");
    cmd->add_option("--p", *prime, "prime for Fp");
    cmd->add_option("--precision", *precision, "pad or truncate to this precision");
    cmd->callback([u, v, opname, dispatch_ring, precision] {
      dispatch_ring([&](auto ring) {
        auto uu = parse_witt(ring, *u, *precision);
        auto vv = parse_witt(ring, *v, *precision);
        auto result = opname == "add" ? witt_add(uu, vv) : witt_mul(uu, vv);
        std::cout << witt_to_json(result) << "\n";
      });
    });
  }
  {
    auto* cmd = witt->add_subcommand("ghost", "ghost components");
    auto u = std::make_shared<std::string>();
    cmd->add_option("--u", *u)->required();
    cmd->add_option("--ring", *ring_name);
    cmd->add_option("--p", *prime);
    cmd->add_option("--precision", *precision, "pad or truncate to this precision");
    cmd->callback([u, dispatch_ring, precision] {
      dispatch_ring([&](auto ring) {
        auto uu = parse_witt(ring, *u, *precision);
        auto g = ghost(uu);
        std::string s = "[";
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (i) s += ",";
          s += "\"" + ring.str(g[i]) + "\"";
        }
        std::cout << s << "]\n";
      });
    });
  }
  for (const char* op : {"frob", "versch", "addmul"}) {
    auto* cmd = witt->add_subcommand(
        op, std::string(op) == "frob"     ? "Frobenius Psi^n"
            : std::string(op) == "versch" ? "Verschiebung V_n"
                                          : "[n] operator");
    auto u = std::make_shared<std::string>();
    auto n = std::make_shared<u32>(1);
    std::string opname = op;
    cmd->add_option("--u", *u)->required();
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--ring", *ring_name);
    cmd->add_option("--p", *prime);
    cmd->add_option("--precision", *precision, "pad or truncate to this precision");
    cmd->callback([u, n, opname, dispatch_ring, precision] {
      dispatch_ring([&](auto ring) {
        auto uu = parse_witt(ring, *u, *precision);
        if (opname == "frob") std::cout << witt_to_json(frobenius(*n, uu)) << "\n";
        else if (opname == "versch") std::cout << witt_to_json(verschiebung(*n, uu)) << "\n";
        else std::cout << witt_to_json(add_multiple(*n, uu)) << "\n";
      });
    });
  }
  {
    auto* cmd = witt->add_subcommand("sigma", "sigma_t from Adams descent data");
    auto values = std::make_shared<std::string>();
    auto integral = std::make_shared<bool>(false);
    cmd->add_option("--adams", *values, "Psi^1(a),...,Psi^N(a)")->required();
    cmd->add_flag("--integral", *integral, "assert an integral result");
    cmd->callback([values, integral] {
      AdamsSequence seq;
      for (const std::string& s : split(*values, ',')) {
        auto slash = s.find('/');
        if (slash == std::string::npos) seq.values.emplace_back(Int(s));
        else seq.values.emplace_back(Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1))));
      }
      if (*integral) std::cout << witt_to_json(sigma_t_integral(seq)) << "\n";
      else std::cout << witt_to_json(sigma_t(seq)) << "\n";
    });
  }
}

void register_burnside(CLI::App& app) {
  auto* burn = app.add_subcommand("burnside", "Burnside ring of C and the necklace algebra");
  burn->require_subcommand(1);
  auto parse_b = [](const std::string& csv) {
    BurnsideVector b;
    std::vector<Int> vals;
    for (const std::string& s : split(csv, ',')) vals.emplace_back(s);
    b.b = std::move(vals);
    return b;
  };
  auto print_b = [](const BurnsideVector& b) {
    std::string s = "[";
    for (u32 i = 0; i < b.precision(); ++i) {
      if (i) s += ",";
      s += b.b[i].str();
    }
    std::cout << s << "]\n";
  };
  {
    auto* cmd = burn->add_subcommand("tau", "classical Witt coordinates -> Burnside");
    auto q = std::make_shared<std::string>();
    cmd->add_option("--q", *q, "q1,q2,...")->required();
    cmd->callback([q, parse_b, print_b] { print_b(tau(parse_b(*q).b)); });
  }
  {
    auto* cmd = burn->add_subcommand("convert", "between Burnside vectors and Witt vectors");
    auto direction = std::make_shared<std::string>("b2w");
    auto data = std::make_shared<std::string>();
    cmd->add_option("--direction", *direction, "b2w or w2b");
    cmd->add_option("--data", *data, "coefficients")->required();
    cmd->callback([direction, data, parse_b, print_b] {
      if (*direction == "b2w") {
        std::cout << witt_to_json(burnside_to_witt(parse_b(*data))) << "\n";
      } else if (*direction == "w2b") {
        std::vector<Int> coeffs;
        for (const std::string& s : split(*data, ',')) coeffs.emplace_back(s);
        print_b(witt_to_burnside(WittZ(ZRing{}, std::move(coeffs))));
      } else {
        throw DomainError("direction must be b2w or w2b");
      }
    });
  }
  {
    auto* cmd = burn->add_subcommand("necklace", "necklace-algebra product");
    auto b = std::make_shared<std::string>();
    auto c = std::make_shared<std::string>();
    cmd->add_option("--b", *b)->required();
    cmd->add_option("--c", *c)->required();
    cmd->callback([b, c, parse_b, print_b] { print_b(necklace_mul(parse_b(*b), parse_b(*c))); });
  }
}

void register_bigpicture(CLI::App& app) {
  auto* big = app.add_subcommand("bigpicture", "Conway's big picture");
  big->require_subcommand(1);
  {
    auto* cmd = big->add_subcommand("dist", "hyperdistance between two lattices");
    auto l = std::make_shared<std::string>();
    auto k = std::make_shared<std::string>();
    cmd->add_option("lattice1", *l, "M or M:g/h")->required();
    cmd->add_option("lattice2", *k)->required();
    cmd->callback(
        [l, k] { std::cout << hyperdistance(Lattice::parse(*l), Lattice::parse(*k)) << "\n"; });
  }
  {
    auto* cmd = big->add_subcommand("neighbors", "the p+1 neighbors of a lattice");
    auto l = std::make_shared<std::string>();
    auto p = std::make_shared<u64>(2);
    auto out = std::make_shared<Output>();
    cmd->add_option("--lattice", *l)->required();
    cmd->add_option("--p", *p)->required();
    add_output_flags(cmd, *out, "json");
    cmd->callback([l, p, out] {
      auto ns = neighbors(Lattice::parse(*l), *p);
      if (out->format == "json") out->emit(lattices_to_json(ns));
      else {
        std::string s;
        for (const Lattice& x : ns) s += x.str() + "\n";
        out->emit(s);
      }
    });
  }
  {
    auto* cmd = big->add_subcommand("ball", "lattices at hyperdistance exactly n");
    auto l = std::make_shared<std::string>();
    auto n = std::make_shared<u64>(2);
    auto budget = std::make_shared<u64>(env_u64("ABSARITH_BALL_BUDGET", 1u << 20));
    auto out = std::make_shared<Output>();
    cmd->add_option("--lattice", *l)->required();
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--budget", *budget, "max sphere size");
    add_output_flags(cmd, *out, "json");
    cmd->callback([l, n, budget, out] {
      auto ns = sphere(Lattice::parse(*l), *n, BallBudget{.max_sphere = *budget});
      if (out->format == "json") out->emit(lattices_to_json(ns));
      else {
        std::string s;
        for (const Lattice& x : ns) s += x.str() + "\n";
        out->emit(s);
      }
    });
  }
  {
    auto* cmd = big->add_subcommand("tree", "p-power tree around a lattice, as DOT");
    auto l = std::make_shared<std::string>("1");
    auto p = std::make_shared<u64>(2);
    auto depth = std::make_shared<u32>(3);
    auto out = std::make_shared<Output>();
    cmd->add_option("--lattice", *l);
    cmd->add_option("--p", *p);
    cmd->add_option("--depth", *depth);
    add_output_flags(cmd, *out, "dot");
    cmd->callback([l, p, depth, out] {
      out->emit(tree_to_dot(p_tree(Lattice::parse(*l), *p, *depth)));
    });
  }
  {
    auto* cmd = big->add_subcommand("hecke", "Hecke operator T_n applied to a vertex");
    auto l = std::make_shared<std::string>();
    auto n = std::make_shared<u64>(2);
    cmd->add_option("--lattice", *l)->required();
    cmd->add_option("--n", *n)->required();
    cmd->callback([l, n] {
      std::cout << hecke(*n, LatticeSum::single(Lattice::parse(*l))).str() << "\n";
    });
  }
  {
    auto* cmd = big->add_subcommand("bc", "Bost-Connes generator action");
    auto l = std::make_shared<std::string>();
    auto gen = std::make_shared<std::string>();
    cmd->add_option("--lattice", *l)->required();
    cmd->add_option("--gen", *gen, "e<n>, e*<n>, or e(a/b)")->required();
    cmd->callback([l, gen] {
      BCGenerator g = BCGenerator::e(1);
      const std::string& s = *gen;
      if (s.rfind("e*", 0) == 0) g = BCGenerator::e_star(std::stoull(s.substr(2)));
      else if (s.rfind("e(", 0) == 0) {
        auto body = s.substr(2, s.size() - 3);
        auto slash = body.find('/');
        if (slash == std::string::npos) throw DomainError("phase generator needs a/b");
        g = BCGenerator::phase(std::stoull(body.substr(0, slash)),
                               std::stoull(body.substr(slash + 1)));
      } else if (s.rfind("e", 0) == 0) {
        g = BCGenerator::e(std::stoull(s.substr(1)));
      } else {
        throw DomainError("unknown generator " + s);
      }
      std::cout << bost_connes_apply(g, LatticeSum::single(Lattice::parse(*l))).str() << "\n";
    });
  }
}

void register_nimber(CLI::App& app) {
  auto* nim = app.add_subcommand("nimber", "finite nimber field arithmetic");
  nim->require_subcommand(1);
  {
    auto* cmd = nim->add_subcommand("mul", "Conway product");
    auto a = std::make_shared<u64>();
    auto b = std::make_shared<u64>();
    cmd->add_option("a", *a)->required();
    cmd->add_option("b", *b)->required();
    cmd->callback([a, b] { std::cout << nim_mul(*a, *b) << "\n"; });
  }
  {
    auto* cmd = nim->add_subcommand("pow", "nimber power");
    auto a = std::make_shared<u64>();
    auto e = std::make_shared<u64>();
    cmd->add_option("a", *a)->required();
    cmd->add_option("e", *e)->required();
    cmd->callback([a, e] { std::cout << nim_pow(*a, *e) << "\n"; });
  }
  {
    auto* cmd = nim->add_subcommand("order", "multiplicative order in the enclosing field");
    auto a = std::make_shared<u64>();
    cmd->add_option("a", *a)->required();
    cmd->callback([a] { std::cout << nim_order(*a) << "\n"; });
  }
  {
    auto* cmd = nim->add_subcommand("root", "root of unity attached to a nimber");
    auto a = std::make_shared<u64>();
    auto level_budget = std::make_shared<u64>(env_u64("ABSARITH_DLOG_LEVEL", 4));
    cmd->add_option("a", *a)->required();
    cmd->add_option("--budget", *level_budget, "max field level for discrete logs");
    cmd->callback([a, level_budget] {
      if (enclosing_field_level(*a) > *level_budget)
        throw BudgetError("nimber root: above the discrete-log level budget");
      std::cout << nimber_to_root(*a).str() << "\n";
    });
  }
  {
    auto* cmd = nim->add_subcommand("orbit", "Frobenius orbit of a nimber");
    auto a = std::make_shared<u64>();
    cmd->add_option("a", *a)->required();
    cmd->callback([a] {
      for (u64 x : frobenius_orbit(*a)) std::cout << x << "\n";
    });
  }
  {
    auto* cmd = nim->add_subcommand("poly", "orbit <-> irreducible polynomial over F2");
    auto a = std::make_shared<u64>(0);
    auto bits = std::make_shared<u64>(0);
    cmd->add_option("--of", *a, "nimber whose orbit polynomial to print");
    cmd->add_option("--root-of", *bits, "polynomial bitmask; prints its root of unity");
    cmd->callback([a, bits] {
      if (*bits != 0) {
        std::cout << polynomial_to_root(F2Polynomial{*bits}).str() << "\n";
      } else {
        F2Polynomial f = orbit_to_polynomial(frobenius_orbit(*a));
        std::cout << f.str() << " (bits " << f.bits << ")\n";
      }
    });
  }
  {
    auto* cmd = nim->add_subcommand("tower", "field-tower generator for a level");
    auto k = std::make_shared<u32>();
    cmd->add_option("k", *k)->required();
    cmd->callback([k] { std::cout << tower_generator(*k) << "\n"; });
  }
  {
    auto* cmd = nim->add_subcommand("dict", "orbit dictionary of a level, as CSV");
    auto level = std::make_shared<u32>(2);
    auto out = std::make_shared<Output>();
    cmd->add_option("--level", *level);
    add_output_flags(cmd, *out, "csv");
    cmd->callback([level, out] {
      std::string s = "nimber,orbit,polynomial_bits,polynomial,root\n";
      for (const DictionaryRow& row : field_dictionary(*level)) {
        s += std::to_string(row.smallest) + ",";
        for (std::size_t i = 0; i < row.orbit.size(); ++i)
          s += (i ? " " : "") + std::to_string(row.orbit[i]);
        s += "," + std::to_string(row.poly.bits) + "," + row.poly.str() + ",";
        s += row.is_zero_orbit ? "-" : row.root.str();
        s += "\n";
      }
      out->emit(s);
    });
  }
}

void register_adams(CLI::App& app) {
  auto* ad = app.add_subcommand("adams", "Adams operations on a representation ring");
  ad->require_subcommand(1);
  auto table_spec = std::make_shared<std::string>("builtin:s3");
  {
    auto* cmd = ad->add_subcommand("apply", "Psi^n on a virtual character");
    auto n = std::make_shared<u64>(2);
    auto chi = std::make_shared<std::string>();
    cmd->add_option("--table", *table_spec, "JSON path or builtin:s3 / builtin:c<n>");
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--chi", *chi, "integer coordinates c1,c2,...")->required();
    cmd->callback([table_spec, n, chi] {
      CharacterTable t = load_table(*table_spec);
      VirtualCharacter v;
      for (const std::string& s : split(*chi, ',')) v.coords.push_back(std::stoll(s));
      VirtualCharacter image = adams(*n, v, t);
      std::string s;
      for (std::size_t i = 0; i < image.coords.size(); ++i)
        s += (i ? "," : "") + std::to_string(image.coords[i]);
      std::cout << s << "\n";
      std::cout << image.str() << "\n";
    });
  }
  {
    auto* cmd = ad->add_subcommand("action", "monoid action n.S on the classes");
    auto n = std::make_shared<u64>(2);
    cmd->add_option("--table", *table_spec);
    cmd->add_option("--n", *n)->required();
    cmd->callback([table_spec, n] {
      CharacterTable t = load_table(*table_spec);
      auto map = monoid_action(*n, t);
      for (u32 c = 0; c < t.class_count(); ++c)
        std::cout << t.classes[c].label << " -> " << t.classes[map[c]].label << "\n";
      std::cout << "stable:";
      for (u32 c : stable_set(*n, t)) std::cout << " " << t.classes[c].label;
      std::cout << "\n";
    });
  }
  {
    auto* cmd = ad->add_subcommand("disc", "discriminant and conductor data");
    cmd->add_option("--table", *table_spec);
    cmd->callback([table_spec] {
      CharacterTable t = load_table(*table_spec);
      std::cout << "discriminant: " << to_string(discriminant(t)) << "\n";
      ConductorData data = conductor_data(t);
      std::cout << "r0: " << data.r0 << "\n";
      for (const auto& [d, set] : data.stable_sets) {
        std::cout << d << ".S:";
        for (u32 c : set) std::cout << " " << t.classes[c].label;
        std::cout << "\n";
      }
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"absarith: exact arithmetic over the absolute point"};
  app.require_subcommand(1);
  register_smirnov(app);
  register_habiro(app);
  register_hring(app);
  register_witt(app);
  register_burnside(app);
  register_bigpicture(app);
  register_nimber(app);
  register_adams(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // non-help parse problems are usage errors
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IntegralityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
