#pragma once

#include <string>
#include <vector>

#include "absarith/big_picture.hpp"
#include "absarith/habiro_topology.hpp"
#include "absarith/smirnov.hpp"
#include "absarith/witt.hpp"

namespace absarith {

struct SvgConfig {
  u32 width = 800;
  u32 height = 600;
};

// Scatter plot of a Smirnov graph: logarithmic prime axis, finite points on
// the vertical axis, [0] and [infinity] on marked rails.  Byte-deterministic
// for fixed input and config.
std::string render_smirnov_svg(const std::vector<std::pair<u64, P1Point>>& points,
                               const SvgConfig& config = {});

// Adjacency wheel on the N-th roots of unity, one color per connecting prime.
std::string render_wheel_svg(u64 N, const std::vector<WheelEdge>& edges,
                             const SvgConfig& config = {});

std::string tree_to_dot(const TreeGraph& tree);

// JSON wire formats fixed by the module interfaces
std::string divisor_to_json(const FormalDivisor& d);
std::string open_to_json(const HabiroOpenDescriptor& open);
HabiroOpenDescriptor open_from_json(const std::string& text);
std::string lattice_to_json(const Lattice& l);
std::string lattices_to_json(const std::vector<Lattice>& ls);

template <class R>
std::string witt_to_json(const WittVector<R>& u) {
  std::string out = "{\"ring\":\"";
  out += R::name;
  if constexpr (std::is_same_v<R, FpRing>) out += "\",\"p\":" + std::to_string(u.ring().p) + ",\"N\":";
  else out += "\",\"N\":";
  out += std::to_string(u.precision()) + ",\"coeffs\":[";
  for (u32 i = 0; i < u.precision(); ++i) {
    if (i) out += ",";
    out += "\"" + u.ring().str(u.coeffs()[i]) + "\"";
  }
  out += "]}";
  return out;
}

}  // namespace absarith
