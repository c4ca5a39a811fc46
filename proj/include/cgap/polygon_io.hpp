#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgap/geometry.hpp"

namespace cgap {

/// {"vertices": [[x, y], ...]}. Throws InputError naming the offending
/// element; fewer than three points is an error.
std::vector<Point2> parse_polygon_json(std::string_view text);

/// Two columns x,y per line, optional header row, blank lines and lines
/// starting with '#' ignored. Throws InputError naming the offending line.
std::vector<Point2> parse_polygon_csv(std::string_view text);

/// Picks the format from the extension (.json / .csv); anything else is
/// sniffed from the first non-blank character.
std::vector<Point2> parse_polygon(std::string_view text, std::string_view filename = {});

/// Reads and parses a file, then builds the polygon. InputError on I/O or
/// syntax problems, DegenerateInput if the points have no interior.
ConvexPolygon read_polygon_file(const std::string& path);

/// Writers emit 17 significant digits so that parsing restores every vertex bit for bit.
std::string polygon_to_json(const ConvexPolygon& poly);
std::string polygon_to_csv(const ConvexPolygon& poly);
void write_polygon_file(const ConvexPolygon& poly, const std::string& path);

}  // namespace cgap
