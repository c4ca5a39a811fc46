#include "cgap/polygon_io.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cgap/check.hpp"
#include "cgap/errors.hpp"

namespace cgap {

namespace {

constexpr std::size_t kMinPoints = 3;

bool ends_with(std::string_view s, std::string_view suffix) {
  if (s.size() < suffix.size()) return false;
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    const auto a = std::tolower(static_cast<unsigned char>(s[s.size() - suffix.size() + i]));
    if (a != suffix[i]) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Strict full-field parse; strtod accepts "inf"/"nan", which are rejected afterwards.
bool parse_double(std::string_view field, double& out) {
  const std::string buf(trim(field));
  if (buf.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size() && errno != ERANGE;
}

void require_count(std::size_t n) {
  if (n < kMinPoints) {
    throw InputError("polygon needs at least 3 points, got " + std::to_string(n));
  }
}

}  // namespace

std::vector<Point2> parse_polygon_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices")) {
    throw InputError("JSON polygon must be an object with a \"vertices\" array");
  }
  const json& vs = doc["vertices"];
  if (!vs.is_array()) throw InputError("\"vertices\" must be an array");
  std::vector<Point2> pts;
  pts.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const json& v = vs[i];
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw InputError(where + " must be a pair of numbers, got " + v.dump());
    }
    const Point2 p{v[0].get<double>(), v[1].get<double>()};
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InputError(where + " is not finite");
    pts.push_back(p);
  }
  require_count(pts.size());
  return pts;
}

std::vector<Point2> parse_polygon_csv(std::string_view text) {
  std::vector<Point2> pts;
  std::size_t line_no = 0;
  bool seen_row = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto comma = line.find(',');
    const std::string where = "line " + std::to_string(line_no);
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw InputError(where + ": expected two comma-separated columns");
    }
    Point2 p;
    const bool ok = parse_double(line.substr(0, comma), p.x) && parse_double(line.substr(comma + 1), p.y);
    if (!ok) {
      // The first row may be a header such as "x,y".
      if (!seen_row) {
        seen_row = true;
        continue;
      }
      throw InputError(where + ": cannot parse numbers from \"" + std::string(line) + "\"");
    }
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InputError(where + ": non-finite coordinate");
    seen_row = true;
    pts.push_back(p);
  }
  require_count(pts.size());
  return pts;
}

std::vector<Point2> parse_polygon(std::string_view text, std::string_view filename) {
  if (ends_with(filename, ".json")) return parse_polygon_json(text);
  if (ends_with(filename, ".csv")) return parse_polygon_csv(text);
  const std::string_view body = trim(text);
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) return parse_polygon_json(text);
  return parse_polygon_csv(text);
}

ConvexPolygon read_polygon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return make_polygon(parse_polygon(ss.str(), path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string polygon_to_json(const ConvexPolygon& poly) {
  std::string out = "{\"vertices\": [";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) out += ", ";
    out += "[" + fmt_num(poly[i].x) + ", " + fmt_num(poly[i].y) + "]";
  }
  return out + "]}\n";
}

std::string polygon_to_csv(const ConvexPolygon& poly) {
  std::string out = "x,y\n";
  for (const auto& v : poly.vertices()) out += fmt_num(v.x) + "," + fmt_num(v.y) + "\n";
  return out;
}

void write_polygon_file(const ConvexPolygon& poly, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << (ends_with(path, ".csv") ? polygon_to_csv(poly) : polygon_to_json(poly));
  if (!out) throw InputError("error writing " + path);
}

}  // namespace cgap
