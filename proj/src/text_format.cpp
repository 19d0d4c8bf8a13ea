#include "quadareas/text_format.hpp"

#include <string>

namespace quadareas {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

ParsedTuple parse_tuple(std::string_view text, bool require_positive) {
  ParsedTuple out;
  std::string_view body = text;
  if (const auto bar = text.find('|'); bar != std::string_view::npos) {
    body = text.substr(0, bar);
    const std::string_view suffix = trim(text.substr(bar + 1));
    constexpr std::string_view key = "tail=";
    if (suffix.substr(0, key.size()) != key)
      fail(ErrorKind::InvalidInput, "expected 'tail=<rational>' after '|'");
    out.tail = parse_rational(suffix.substr(key.size()));
    if (sgn(*out.tail) < 0) fail(ErrorKind::InvalidInput, "tail sum must be non-negative");
  }
  if (trim(body).empty()) fail(ErrorKind::InvalidInput, "empty tuple");
  const auto parts = split(body, ',');
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Rational v = parse_rational(parts[i]);
    if (require_positive && sgn(v) <= 0)
      fail(ErrorKind::InvalidInput, "entry " + std::to_string(i + 1) + " must be positive");
    out.values.push_back(std::move(v));
  }
  return out;
}

Point parse_point(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2)
    fail(ErrorKind::InvalidInput, "point '" + std::string(text) + "' is not of the form x,y");
  return {parse_rational(parts[0]), parse_rational(parts[1])};
}

std::vector<Point> parse_polygon(std::string_view text) {
  std::vector<Point> pts;
  for (std::string_view part : split(text, ';')) pts.push_back(parse_point(part));
  return pts;
}

std::string format_tuple(const Tuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += to_string(t[i]);
  }
  return out;
}

std::string format_point(const Point& p) { return to_string(p.x) + "," + to_string(p.y); }

std::string format_polygon(const std::vector<Point>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ';';
    out += format_point(pts[i]);
  }
  return out;
}

}  // namespace quadareas
