#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sphbary/error.hpp"
#include "sphbary/harness.hpp"

namespace sphbary::harness {

using nlohmann::json;

PolygonFile parse_polygon(const std::string& text) {
  PolygonFile file;
  try {
    const json doc = json::parse(text);
    for (const auto& v : doc.at("vertices")) {
      if (!v.is_array() || v.size() != 3) throw GeometryError(ErrorCode::ParseError, "vertex must have 3 numbers");
      file.vertices.push_back({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
    }
    if (doc.contains("name")) file.name = doc["name"].get<std::string>();
    if (doc.contains("seed")) file.seed = doc["seed"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw GeometryError(ErrorCode::ParseError, e.what());
  }
  return file;
}

PolygonFile read_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_polygon(buf.str());
}

std::string dump_polygon(const PolygonFile& file) {
  // Hand-formatted so every coordinate carries 17 significant digits.
  std::string out = "{\n";
  if (file.name) out += "  \"name\": " + json(*file.name).dump() + ",\n";
  if (file.seed) out += "  \"seed\": " + std::to_string(*file.seed) + ",\n";
  out += "  \"vertices\": [\n";
  for (std::size_t i = 0; i < file.vertices.size(); ++i) {
    const Vec3& v = file.vertices[i];
    out += "    [" + format_real(v.x) + ", " + format_real(v.y) + ", " + format_real(v.z) + "]";
    out += i + 1 < file.vertices.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

void write_polygon(const std::string& path, const PolygonFile& file) {
  std::ofstream out(path);
  if (!out) throw GeometryError(ErrorCode::ParseError, "cannot write " + path);
  out << dump_polygon(file);
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace sphbary::harness
