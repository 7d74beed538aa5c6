#include "latpoly/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "latpoly/report.hpp"

namespace latpoly {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool try_parse_vertex(const std::string& line, Point& out) {
  std::istringstream is(line);
  std::string xs, ys, rest;
  if (!(is >> xs >> ys)) return false;
  if (is >> rest) return false;
  try {
    out = {parse_rat(xs), parse_rat(ys)};
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

NamedPolygon from_vertices(std::string name, const std::vector<Point>& pts) {
  Hull h = convex_hull(pts);
  if (h.dim != 2) throw std::invalid_argument("polygon input is not two-dimensional");
  return {std::move(name), h.polygon()};
}

NamedPolygon parse_json_polygon(const std::string& content) {
  nlohmann::json j = nlohmann::json::parse(content);
  std::string name = j.value("name", "");
  std::vector<Point> pts;
  for (const auto& v : j.at("vertices"))
    pts.push_back({parse_rat(v.at(0).get<std::string>()),
                   parse_rat(v.at(1).get<std::string>())});
  return from_vertices(std::move(name), pts);
}

}  // namespace

NamedPolygon parse_polygon(const std::string& content) {
  std::string body = trim(content);
  if (body.empty()) throw std::invalid_argument("empty polygon input");
  if (body.front() == '{') return parse_json_polygon(body);

  std::istringstream is(body);
  std::string line, name;
  std::vector<Point> pts;
  bool first = true;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty()) continue;
    Point v;
    if (try_parse_vertex(line, v)) {
      pts.push_back(v);
    } else if (first) {
      name = line;
    } else {
      throw std::invalid_argument("malformed vertex line: " + line);
    }
    first = false;
  }
  if (pts.empty()) throw std::invalid_argument("no vertices in polygon input");
  return from_vertices(std::move(name), pts);
}

NamedPolygon read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polygon(buf.str());
}

std::string write_polygon(const Polygon& p, const std::string& name) {
  return polygon_json(p, name).dump();
}

}  // namespace latpoly
