#include "fairtile/tiling_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fairtile {

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

double parse_double_string(const std::string& text, const char* field) {
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc{} || result.ptr != text.data() + text.size())
    throw TilingFormatError(std::string("tiling document: bad decimal string in ") + field);
  return value;
}

std::string json_number(double value) {
  if (!std::isfinite(value)) return "null";
  return format_double(value);
}

}  // namespace

std::string serialize_tiling(const Tiling& tiling) {
  std::string out;
  out.reserve(256 + tiling.pentagons.size() * 220);
  out += "{\n";
  out += "  \"format_version\": 1,\n";
  out += "  \"targets\": {\"area\": \"" + format_double(tiling.area_target) +
         "\", \"perimeter\": \"" + format_double(tiling.perimeter_target) + "\"},\n";
  const GenerationParams& g = tiling.generation;
  out += "  \"generation\": {\"rings\": " + std::to_string(g.rings) +
         ", \"epsilon0\": " + format_double(g.epsilon0) + ", \"rho\": " + format_double(g.rho) +
         ", \"seed\": " + std::to_string(g.seed) +
         ", \"delta_sep\": " + format_double(g.delta_sep) +
         ", \"tol_residual\": " + format_double(g.tol_residual) + "},\n";
  out += "  \"pentagons\": [";
  for (std::size_t i = 0; i < tiling.pentagons.size(); ++i) {
    const PentagonRecord& r = tiling.pentagons[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"id\": " + std::to_string(r.id) + ", \"cluster\": " + std::to_string(r.cluster_index) +
           ", \"hexagon\": " + std::to_string(r.hexagon_index) +
           ", \"index\": " + std::to_string(r.pentagon_index) +
           ", \"marked_side\": " + std::to_string(r.marked_side) + ", \"vertices\": [";
    for (int v = 0; v < r.polygon.size(); ++v) {
      if (v > 0) out += ", ";
      out += "[" + format_double(r.polygon[v].x) + ", " + format_double(r.polygon[v].y) + "]";
    }
    out += "]}";
  }
  out += tiling.pentagons.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

Tiling parse_tiling(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw TilingFormatError(std::string("tiling document: ") + e.what());
  }

  try {
    if (!doc.is_object() || doc.at("format_version").get<int>() != 1)
      throw TilingFormatError("tiling document: unsupported format_version");

    Tiling tiling;
    tiling.area_target = parse_double_string(doc.at("targets").at("area").get<std::string>(), "targets.area");
    tiling.perimeter_target =
        parse_double_string(doc.at("targets").at("perimeter").get<std::string>(), "targets.perimeter");

    const auto& g = doc.at("generation");
    tiling.generation.rings = g.at("rings").get<int>();
    tiling.generation.epsilon0 = g.at("epsilon0").get<double>();
    tiling.generation.rho = g.at("rho").get<double>();
    tiling.generation.seed = g.at("seed").get<std::uint64_t>();
    tiling.generation.delta_sep = g.at("delta_sep").get<double>();
    tiling.generation.tol_residual = g.at("tol_residual").get<double>();

    std::int64_t last_id = -1;
    for (const auto& p : doc.at("pentagons")) {
      const auto& verts = p.at("vertices");
      if (verts.size() != 5)
        throw TilingValidationError("tiling document: pentagon must have exactly 5 vertices");
      std::vector<Point> points;
      points.reserve(5);
      for (const auto& v : verts) points.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
      const std::int64_t id = p.at("id").get<std::int64_t>();
      if (id <= last_id) throw TilingValidationError("tiling document: pentagon ids must be strictly increasing");
      last_id = id;
      const int cluster = p.at("cluster").get<int>();
      const int hexagon = p.at("hexagon").get<int>();
      const int index = p.at("index").get<int>();
      const int marked_side = p.at("marked_side").get<int>();
      if (cluster < 0 || hexagon < 0 || hexagon >= 7 || index < 0 || index >= 3 ||
          marked_side < 0 || marked_side >= 5)
        throw TilingValidationError("tiling document: pentagon " + std::to_string(id) +
                                    " has provenance fields out of range");
      try {
        tiling.pentagons.push_back(
            {id, cluster, hexagon, index, marked_side, ConvexPolygon(std::move(points))});
      } catch (const DegenerateInputError& e) {
        throw TilingValidationError(std::string("tiling document: pentagon ") + std::to_string(id) +
                                    " is invalid: " + e.what());
      }
    }
    return tiling;
  } catch (const nlohmann::json::exception& e) {
    throw TilingFormatError(std::string("tiling document: ") + e.what());
  }
}

std::string serialize_report(const VerifyReport& report) {
  std::string out;
  out += "{\n";
  out += "  \"pass\": " + std::string(report.pass ? "true" : "false") + ",\n";
  out += "  \"max_area_dev\": " + json_number(report.max_area_dev) + ",\n";
  out += "  \"max_perimeter_dev\": " + json_number(report.max_perimeter_dev) + ",\n";
  out += "  \"min_congruence_distance\": " + json_number(report.min_congruence_distance) + ",\n";
  out += "  \"min_congruence_pair\": [" + std::to_string(report.min_congruence_pair.first) + ", " +
         std::to_string(report.min_congruence_pair.second) + "],\n";
  out += "  \"min_side_figure_distance\": " + json_number(report.min_side_figure_distance) + ",\n";
  out += "  \"min_side_figure_pair\": [" + std::to_string(report.min_side_figure_pair.first) + ", " +
         std::to_string(report.min_side_figure_pair.second) + "],\n";
  out += "  \"max_angle_dev\": " + json_number(report.max_angle_dev) + ",\n";
  out += "  \"max_closeness\": " + json_number(report.max_closeness) + ",\n";
  out += "  \"overlap_found\": " + std::string(report.overlap_found ? "true" : "false") + ",\n";
  out += "  \"overlap_pair\": [" + std::to_string(report.overlap_pair.first) + ", " +
         std::to_string(report.overlap_pair.second) + "],\n";
  out += "  \"total_area_relative_error\": " + json_number(report.total_area_relative_error) + "\n";
  out += "}\n";
  return out;
}

std::string render_svg(const Tiling& tiling) {
  // y is negated so the figure appears with the mathematical orientation.
  double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;
  bool first = true;
  for (const PentagonRecord& r : tiling.pentagons)
    for (const Point& p : r.polygon.vertices()) {
      if (first) {
        min_x = max_x = p.x;
        min_y = max_y = -p.y;
        first = false;
      } else {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, -p.y);
        max_y = std::max(max_y, -p.y);
      }
    }
  const double width = max_x - min_x;
  const double height = max_y - min_y;
  const double margin = 0.05 * std::max({width, height, 1e-9});
  const double stroke = 0.004 * std::max({width, height, 1e-9});

  static constexpr const char* kFills[3] = {"#5b8bd0", "#e8a33d", "#79b473"};

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         format_double(min_x - margin) + " " + format_double(min_y - margin) + " " +
         format_double(width + 2.0 * margin) + " " + format_double(height + 2.0 * margin) + "\">\n";
  for (const PentagonRecord& r : tiling.pentagons) {
    out += "  <polygon fill=\"" + std::string(kFills[r.pentagon_index % 3]) +
           "\" stroke=\"#222222\" stroke-width=\"" + format_double(stroke) + "\" points=\"";
    for (int v = 0; v < r.polygon.size(); ++v) {
      if (v > 0) out += " ";
      out += format_double(r.polygon[v].x) + "," + format_double(-r.polygon[v].y);
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TilingFormatError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TilingFormatError("cannot write file: " + path);
  out << content;
  if (!out) throw TilingFormatError("write failed: " + path);
}

}  // namespace fairtile
