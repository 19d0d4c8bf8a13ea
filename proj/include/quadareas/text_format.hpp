#pragma once

#include "quadareas/exact_geometry.hpp"
#include "quadareas/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quadareas {

/// A comma-separated rational list with an optional " | tail=r" suffix.
struct ParsedTuple {
  Tuple values;
  std::optional<Rational> tail;
};

/// Throws Error{InvalidInput}; with `require_positive`, a non-positive entry
/// is reported as "entry <k> must be positive" (1-based).
ParsedTuple parse_tuple(std::string_view text, bool require_positive = true);

Point parse_point(std::string_view text);

/// "x,y;x,y;..."
std::vector<Point> parse_polygon(std::string_view text);

std::string format_tuple(const Tuple& t);
std::string format_point(const Point& p);
std::string format_polygon(const std::vector<Point>& pts);

}  // namespace quadareas
