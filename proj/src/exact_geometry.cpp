#include "quadareas/exact_geometry.hpp"

#include <cassert>

namespace quadareas {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& t, const Point& a) { return {t * a.x, t * a.y}; }

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

Rational polygon_area(std::span<const Point> vertices) {
  if (vertices.size() < 3)
    fail(ErrorKind::InvalidInput, "polygon_area needs at least 3 vertices");
  Rational twice = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point& u = vertices[i];
    const Point& v = vertices[(i + 1) % vertices.size()];
    twice += u.x * v.y - v.x * u.y;
  }
  return twice / 2;
}

bool is_convex_ccw(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point pts[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j]) return false;
  for (int i = 0; i < 4; ++i) {
    const Point& u = pts[i];
    const Point& v = pts[(i + 1) % 4];
    const Point& w = pts[(i + 2) % 4];
    if (sgn(cross(v - u, w - v)) <= 0) return false;
  }
  return true;
}

ConvexQuad ConvexQuad::make(Point a, Point b, Point c, Point d) {
  if (is_convex_ccw(a, b, c, d)) return ConvexQuad(std::move(a), std::move(b), std::move(c), std::move(d));
  if (is_convex_ccw(a, d, c, b)) {
    ConvexQuad q(std::move(a), std::move(d), std::move(c), std::move(b));
    q.note_ = "clockwise input reoriented by swapping B and D";
    return q;
  }
  fail(ErrorKind::InvalidInput, "quadrilateral is not strictly convex");
}

namespace {

std::vector<Point> split_segment(const Point& from, const Point& to, const Tuple& ratios) {
  const Rational total = sum(ratios);
  std::vector<Point> out;
  out.reserve(ratios.size() + 1);
  out.push_back(from);
  Rational partial = 0;
  for (std::size_t i = 0; i + 1 < ratios.size(); ++i) {
    partial += ratios[i];
    const Rational t = partial / total;
    out.push_back(from + t * (to - from));
  }
  out.push_back(to);
  return out;
}

}  // namespace

DivisionPoints subdivide(const ConvexQuad& q, const DivisionSpec& spec) {
  return {split_segment(q.a(), q.b(), spec.p()),
          split_segment(q.d(), q.c(), spec.p_prime())};
}

Tuple strip_areas(const ConvexQuad& q, const DivisionSpec& spec) {
  const DivisionPoints pts = subdivide(q, spec);
  Tuple areas;
  areas.reserve(spec.size());
  for (std::size_t i = 1; i <= spec.size(); ++i) {
    const Point strip[4] = {pts.on_ab[i - 1], pts.on_ab[i], pts.on_dc[i], pts.on_dc[i - 1]};
    Rational area = polygon_area(strip);
    if (sgn(area) <= 0)
      fail(ErrorKind::Internal, "strip " + std::to_string(i) + " has non-positive area");
    areas.push_back(std::move(area));
  }
  return areas;
}

ApexResult apex_of(const ConvexQuad& q, const DivisionSpec& spec) {
  const Point ab = q.b() - q.a();
  const Point dc = q.c() - q.d();
  const Rational denom = cross(ab, dc);
  if (sgn(denom) == 0) return ParallelMarker{};

  // E = A + lambda*(B - A) = D + mu*(C - D)
  const Point r = q.d() - q.a();
  const Rational lambda = cross(r, dc) / denom;
  const Rational mu = cross(r, ab) / denom;
  const Point apex = q.a() + lambda * ab;

  if (sgn(lambda) < 0 && sgn(mu) < 0) {
    const Rational p0 = spec.total_p() * -lambda;
    const Rational p0_prime = spec.total_p_prime() * -mu;
    const Point tri[3] = {apex, q.a(), q.d()};
    const Rational area = abs(polygon_area(tri));
    return ApexFrame{apex, p0, p0_prime, area / (p0 * p0_prime), Branch::Q1};
  }
  if (lambda > 1 && mu > 1) {
    const Rational p0 = spec.total_p() * (lambda - 1);
    const Rational p0_prime = spec.total_p_prime() * (mu - 1);
    const Point tri[3] = {apex, q.b(), q.c()};
    const Rational area = abs(polygon_area(tri));
    return ApexFrame{apex, p0, p0_prime, area / (p0 * p0_prime), Branch::Q2};
  }
  fail(ErrorKind::InconsistentQuad,
       "apex of lines AB and DC lies inside a side or on opposite ends");
}

}  // namespace quadareas
