#pragma once

#include <map>
#include <set>
#include <vector>

#include "absarith/exact.hpp"

namespace absarith {

// Vertex of Conway's big picture: the commensurability class of the lattice
// <M e1 + (g/h) e2, e2> in canonical form, M > 0 rational, g/h reduced in [0,1).
struct Lattice {
  Rat M = 1;
  u64 g = 0;
  u64 h = 1;

  static Lattice make(Rat M, i64 g, i64 h);
  static Lattice number(i64 n) { return make(Rat(n), 0, 1); }
  static Lattice parse(const std::string& text);  // "M" or "M:g/h"

  bool operator==(const Lattice& o) const { return M == o.M && g == o.g && h == o.h; }
  bool operator<(const Lattice& o) const {
    if (M != o.M) return M < o.M;
    if (h != o.h) return h < o.h;
    return g < o.g;
  }
  std::string str() const;
};

// finitely supported integer combination of vertices
struct LatticeSum {
  std::map<Lattice, i64> terms;

  static LatticeSum single(const Lattice& l);
  void add(const Lattice& l, i64 coeff);
  LatticeSum& operator+=(const LatticeSum& o);
  LatticeSum scaled(i64 k) const;
  bool operator==(const LatticeSum&) const = default;
  std::string str() const;
};

// canonical form of the lattice spanned by the rows of a rational 2x2 basis
Lattice normalize(const Rat& a11, const Rat& a12, const Rat& a21, const Rat& a22);

// det of the primitive integral matrix relating the two lattices; log of it
// is Conway's metric
Int hyperdistance(const Lattice& l, const Lattice& k);

struct BallBudget {
  u64 max_sphere = 1u << 20;  // psi(n) cap for sphere enumeration
};

// all lattices at hyperdistance exactly n (n = p gives the p+1 neighbors),
// enumerated through primitive upper-triangular matrices of determinant n
std::vector<Lattice> sphere(const Lattice& l, u64 n, const BallBudget& budget = {});
std::vector<Lattice> neighbors(const Lattice& l, u64 p, const BallBudget& budget = {});

// (M, g/h) <-> (1/(h^2 M), g'/h) with g' the inverse of g mod h
Lattice reversed_form(const Lattice& l);

// Hecke operator T_n: each vertex goes to the sum of its hyperdistance-n sphere
LatticeSum hecke(u64 n, const LatticeSum& s, const BallBudget& budget = {});

// Bost-Connes generators acting on formal sums of vertices
struct BCGenerator {
  enum class Kind { En, EnStar, Phase };
  Kind kind;
  u64 n = 1;        // for e_n / e*_n
  u64 phase_a = 0;  // for e(a/b)
  u64 phase_b = 1;

  static BCGenerator e(u64 n) { return {Kind::En, n, 0, 1}; }
  static BCGenerator e_star(u64 n) { return {Kind::EnStar, n, 0, 1}; }
  static BCGenerator phase(u64 a, u64 b);
};

LatticeSum bost_connes_apply(const BCGenerator& gen, const LatticeSum& s);

// 2-power (resp. p-power) tree edges around a root, explored to the given
// depth; vertex set plus neighbor edges, for the DOT emitter
struct TreeGraph {
  std::vector<Lattice> vertices;
  std::vector<std::pair<Lattice, Lattice>> edges;
};
TreeGraph p_tree(const Lattice& root, u64 p, u32 depth, const BallBudget& budget = {});

}  // namespace absarith
