#include "aztec/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace aztec {

namespace {

const char* type_tag(DominoType t) {
  switch (t) {
    case DominoType::east: return "E";
    case DominoType::west: return "W";
    case DominoType::south: return "S";
    case DominoType::north: return "N";
  }
  return "?";
}

DominoType tag_type(const std::string& s) {
  if (s == "E") return DominoType::east;
  if (s == "W") return DominoType::west;
  if (s == "S") return DominoType::south;
  if (s == "N") return DominoType::north;
  throw std::invalid_argument("unknown domino type tag: " + s);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

nlohmann::ordered_json tiling_to_json(const DominoTiling& tiling) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["order"] = tiling.order;
  auto& arr = j["dominoes"] = nlohmann::ordered_json::array();
  for (const auto& d : tiling.dominoes) {
    nlohmann::ordered_json e;
    e["x"] = d.x;
    e["y"] = d.y;
    e["orient"] = d.horizontal ? "h" : "v";
    e["type"] = type_tag(d.type);
    arr.push_back(e);
  }
  return j;
}

DominoTiling tiling_from_json(const nlohmann::ordered_json& j) {
  std::vector<Domino> ds;
  for (const auto& e : j.at("dominoes")) {
    Domino d;
    d.x = e.at("x").get<int>();
    d.y = e.at("y").get<int>();
    d.horizontal = e.at("orient").get<std::string>() == "h";
    d.type = tag_type(e.at("type").get<std::string>());
    ds.push_back(d);
  }
  return make_tiling(j.at("order").get<int>(), std::move(ds));
}

namespace {

nlohmann::ordered_json lines_to_json(const std::vector<LineConfig>& lines) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& ln : lines) arr.push_back(ln.positions);
  return arr;
}

std::vector<LineConfig> lines_from_json(const nlohmann::ordered_json& arr) {
  std::vector<LineConfig> lines;
  int k = 1;
  for (const auto& e : arr)
    lines.emplace_back(k++, e.get<std::vector<int>>());
  return lines;
}

}  // namespace

nlohmann::ordered_json system_to_json(const ParticleSystem& system) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["order"] = system.order;
  j["lines"] = lines_to_json(system.lines);
  return j;
}

ParticleSystem system_from_json(const nlohmann::ordered_json& j) {
  return ParticleSystem(j.at("order").get<int>(),
                        lines_from_json(j.at("lines")));
}

nlohmann::ordered_json half_system_to_json(const HalfParticleSystem& system) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["order"] = system.order;
  j["half"] = true;
  j["lines"] = lines_to_json(system.lines);
  return j;
}

HalfParticleSystem half_system_from_json(const nlohmann::ordered_json& j) {
  return HalfParticleSystem(j.at("order").get<int>(),
                            lines_from_json(j.at("lines")));
}

// --- SVG ---------------------------------------------------------------------

namespace {

struct SvgCanvas {
  std::ostringstream os;
  int order;
  explicit SvgCanvas(int n) : order(n) {
    int side = (2 * n + 2) * kSvgUnit;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << side << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << " "
       << side << "\">\n";
  }
  // lattice (x, y) -> pixel (SVG y axis points down)
  double px(double x) const { return (x + order + 1) * kSvgUnit; }
  double py(double y) const { return (order + 1 - y) * kSvgUnit; }
  std::string finish() {
    os << "</svg>\n";
    return os.str();
  }
};

const char* domino_fill(DominoType t) {
  switch (t) {
    case DominoType::east: return "#7aa6c2";   // shaded
    case DominoType::south: return "#c27a7a";  // shaded
    case DominoType::west: return "#eef2f5";
    case DominoType::north: return "#f5efee";
  }
  return "#ffffff";
}

void draw_dominoes(SvgCanvas& c, const DominoTiling& t) {
  for (const auto& d : t.dominoes) {
    double w = d.horizontal ? 2.0 : 1.0;
    double h = d.horizontal ? 1.0 : 2.0;
    c.os << "<rect x=\"" << format_double(c.px(d.x)) << "\" y=\""
         << format_double(c.py(d.y) - h * kSvgUnit) << "\" width=\""
         << format_double(w * kSvgUnit) << "\" height=\""
         << format_double(h * kSvgUnit) << "\" fill=\"" << domino_fill(d.type)
         << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
}

void draw_particles(SvgCanvas& c, const DominoTiling& t) {
  ParticleSystem sys = particles_from_tiling(t);
  for (const auto& ln : sys.lines) {
    for (int x : ln.positions) {
      auto [sx, sy] = particle_square(t.order, ln.line, x);
      c.os << "<circle cx=\"" << format_double(c.px(sx + 0.5)) << "\" cy=\""
           << format_double(c.py(sy + 0.5)) << "\" r=\""
           << format_double(0.18 * kSvgUnit) << "\" fill=\"#111111\"/>\n";
    }
  }
}

void draw_paths(SvgCanvas& c, const DominoTiling& t) {
  PathFamily fam = paths_from_tiling(t);
  for (const auto& path : fam.paths) {
    c.os << "<polyline fill=\"none\" stroke=\"#cc2222\" stroke-width=\"2\" points=\"";
    for (const auto& p : path)
      c.os << format_double(c.px(p.x)) << "," << format_double(c.py(p.y2 / 2.0))
           << " ";
    c.os << "\"/>\n";
  }
}

}  // namespace

std::string svg_tiling(const DominoTiling& tiling, bool particles, bool paths) {
  SvgCanvas c(tiling.order);
  draw_dominoes(c, tiling);
  if (particles) draw_particles(c, tiling);
  if (paths) draw_paths(c, tiling);
  return c.finish();
}

std::string svg_arctic_overlay(const DominoTiling& tiling) {
  SvgCanvas c(tiling.order);
  draw_dominoes(c, tiling);
  double r = (tiling.order + 1) / std::sqrt(2.0) * kSvgUnit;
  c.os << "<circle cx=\"" << format_double(c.px(0)) << "\" cy=\""
       << format_double(c.py(0)) << "\" r=\"" << format_double(r)
       << "\" fill=\"none\" stroke=\"#11aa11\" stroke-width=\"2\"/>\n";
  return c.finish();
}

std::string csv_arctic(const std::string& config_line,
                       const std::vector<ArcticRow>& rows) {
  std::ostringstream os;
  os << "# schema_version=" << kSchemaVersion << " " << config_line << "\n";
  os << "s,a_theory,b_theory,a_emp,b_emp\n";
  for (const auto& r : rows)
    os << format_double(r.s) << "," << format_double(r.a_theory) << ","
       << format_double(r.b_theory) << "," << format_double(r.a_emp) << ","
       << format_double(r.b_emp) << "\n";
  return os.str();
}

}  // namespace aztec
