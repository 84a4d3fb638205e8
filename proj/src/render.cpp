#include "absarith/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace absarith {

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// stable palette: 2-powers yellow, 3 blue, 5 red
std::string prime_color(u64 p) {
  switch (p) {
    case 2:
      return "#e6c000";
    case 3:
      return "#2050d0";
    case 5:
      return "#d03030";
    case 7:
      return "#30a050";
    case 11:
      return "#a040c0";
    default: {
      std::ostringstream os;
      os << "#" << std::hex << (0x303030 + (p * 0x9e3779b9ull) % 0x909090);
      return os.str();
    }
  }
}

}  // namespace

std::string render_smirnov_svg(const std::vector<std::pair<u64, P1Point>>& points,
                               const SvgConfig& config) {
  if (points.empty()) throw DomainError("render_smirnov_svg: empty point list");
  const double w = config.width, h = config.height;
  const double margin = 50.0;
  double max_log_p = 0.0;
  u64 max_n = 1;
  for (const auto& [p, pt] : points) {
    max_log_p = std::max(max_log_p, std::log(static_cast<double>(p)));
    if (pt.is_finite()) max_n = std::max(max_n, pt.n);
  }
  const double rail_zero = h - margin;          // [0] rail at the bottom
  const double rail_inf = margin;               // [infinity] rail at the top
  const double plot_h = h - 2 * margin - 40.0;  // finite band between the rails
  auto x_of = [&](u64 p) {
    return margin + (w - 2 * margin) * std::log(static_cast<double>(p)) / max_log_p;
  };
  auto y_of = [&](const P1Point& pt) {
    if (pt.tag == P1Point::Tag::Zero) return rail_zero;
    if (pt.tag == P1Point::Tag::Infinity) return rail_inf;
    return rail_zero - 20.0 - plot_h * static_cast<double>(pt.n) / static_cast<double>(max_n);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << config.width << " "
      << config.height << "\">\n";
  svg << "<rect width=\"" << config.width << "\" height=\"" << config.height
      << "\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << fixed2(margin) << "\" y1=\"" << fixed2(rail_zero) << "\" x2=\""
      << fixed2(w - margin) << "\" y2=\"" << fixed2(rail_zero)
      << "\" stroke=\"#c0c0c0\" stroke-dasharray=\"4 3\"/>\n";
  svg << "<line x1=\"" << fixed2(margin) << "\" y1=\"" << fixed2(rail_inf) << "\" x2=\""
      << fixed2(w - margin) << "\" y2=\"" << fixed2(rail_inf)
      << "\" stroke=\"#c0c0c0\" stroke-dasharray=\"4 3\"/>\n";
  svg << "<text x=\"8\" y=\"" << fixed2(rail_zero + 4) << "\" font-size=\"12\">[0]</text>\n";
  svg << "<text x=\"8\" y=\"" << fixed2(rail_inf + 4) << "\" font-size=\"12\">[inf]</text>\n";
  for (const auto& [p, pt] : points) {
    svg << "<circle cx=\"" << fixed2(x_of(p)) << "\" cy=\"" << fixed2(y_of(pt))
        << "\" r=\"2.5\" fill=\"#204080\"><title>p=" << p << " -> " << pt.str()
        << "</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_wheel_svg(u64 N, const std::vector<WheelEdge>& edges,
                             const SvgConfig& config) {
  const double w = config.width, h = config.height;
  const double cx = w / 2, cy = h / 2;
  const double radius = std::min(w, h) / 2 - 30.0;
  const double tau = 6.283185307179586;
  auto pos = [&](const RootOfUnity& r) {
    const double angle = tau * static_cast<double>(r.g) / static_cast<double>(r.h);
    return std::make_pair(cx + radius * std::cos(angle), cy - radius * std::sin(angle));
  };
  std::vector<WheelEdge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << config.width << " "
      << config.height << "\">\n";
  svg << "<rect width=\"" << config.width << "\" height=\"" << config.height
      << "\" fill=\"white\"/>\n";
  for (const WheelEdge& e : sorted) {
    auto [x1, y1] = pos(e.a);
    auto [x2, y2] = pos(e.b);
    svg << "<line x1=\"" << fixed2(x1) << "\" y1=\"" << fixed2(y1) << "\" x2=\"" << fixed2(x2)
        << "\" y2=\"" << fixed2(y2) << "\" stroke=\"" << prime_color(e.prime)
        << "\" stroke-width=\"0.8\"/>\n";
  }
  for (const RootOfUnity& v : wheel_vertices(N)) {
    auto [x, y] = pos(v);
    svg << "<circle cx=\"" << fixed2(x) << "\" cy=\"" << fixed2(y)
        << "\" r=\"3\" fill=\"#202020\"><title>" << v.str() << "</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string tree_to_dot(const TreeGraph& tree) {
  std::ostringstream os;
  os << "graph bigpicture {\n";
  for (const Lattice& v : tree.vertices) os << "  \"" << v.str() << "\";\n";
  for (const auto& [a, b] : tree.edges)
    os << "  \"" << a.str() << "\" -- \"" << b.str() << "\";\n";
  os << "}\n";
  return os.str();
}

std::string divisor_to_json(const FormalDivisor& d) {
  nlohmann::ordered_json j;
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& [p, c] : d.finite) j["points"].push_back({{"p", p}, {"c", c}});
  nlohmann::ordered_json logs = nlohmann::ordered_json::object();
  for (const auto& [p, wgt] : d.infinity_coeff.logs) logs[std::to_string(p)] = wgt;
  j["infinity"] = {{"logs", logs}, {"const", d.infinity_coeff.constant}};
  return j.dump();
}

std::string open_to_json(const HabiroOpenDescriptor& open) {
  nlohmann::ordered_json j;
  if (open.kind == HabiroOpenDescriptor::Kind::Basic) {
    j["kind"] = "basic";
    j["m"] = open.m;
  } else {
    j["kind"] = "cofinite";
    auto arr = nlohmann::ordered_json::array();
    for (const P1Point& pt : open.excluded) {
      if (pt.tag == P1Point::Tag::Zero) arr.push_back("0");
      else if (pt.tag == P1Point::Tag::Infinity) arr.push_back("inf");
      else arr.push_back(pt.n);
    }
    j["exclude"] = arr;
  }
  j["zero"] = open.include_zero;
  j["infinity"] = open.include_infinity;
  return j.dump();
}

HabiroOpenDescriptor open_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "basic") {
    return HabiroOpenDescriptor::basic(j.at("m").get<u64>(), j.value("zero", false),
                                       j.value("infinity", false));
  }
  if (kind == "cofinite") {
    std::vector<P1Point> excluded;
    for (const auto& v : j.at("exclude")) {
      if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "0") excluded.push_back(P1Point::zero());
        else if (s == "inf") excluded.push_back(P1Point::infinity());
        else throw DomainError("open_from_json: bad excluded point " + s);
      } else {
        excluded.push_back(P1Point::finite(v.get<u64>()));
      }
    }
    return HabiroOpenDescriptor::cofinite(std::move(excluded));
  }
  throw DomainError("open_from_json: unknown kind " + kind);
}

std::string lattice_to_json(const Lattice& l) {
  nlohmann::ordered_json j;
  j["M"] = to_string(l.M);
  j["gh"] = l.g == 0 ? "0" : std::to_string(l.g) + "/" + std::to_string(l.h);
  return j.dump();
}

std::string lattices_to_json(const std::vector<Lattice>& ls) {
  std::string out = "[";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += ",";
    out += lattice_to_json(ls[i]);
  }
  out += "]";
  return out;
}

}  // namespace absarith
