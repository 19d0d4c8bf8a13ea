#include "quadareas/exact_geometry.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace quadareas;

namespace {

const Point O{0, 0};

DivisionSpec unit3() { return DivisionSpec({1, 1, 1}, {1, 1, 1}); }

ConvexQuad apex_example() { return ConvexQuad::make({2, 0}, {8, 0}, {0, 4}, {0, 1}); }

std::vector<std::pair<Rational, Rational>> pairs(const ConvexQuad& q) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const Point& p : q.vertices()) out.emplace_back(p.x, p.y);
  return out;
}

}  // namespace

TEST_CASE("polygon_area") {
  const std::vector<Point> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(polygon_area(square) == 1);
  const std::vector<Point> tri = {{0, 0}, {2, 0}, {0, 1}};
  CHECK(polygon_area(tri) == 1);
  const std::vector<Point> quad = {{2, 0}, {8, 0}, {0, 4}, {0, 1}};
  CHECK(polygon_area(quad) == 15);
  const std::vector<Point> cw = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  CHECK(polygon_area(cw) == -1);
  const std::vector<Point> two = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(polygon_area(two), Error);
}

TEST_CASE("is_convex_ccw") {
  CHECK(is_convex_ccw({0, 0}, {6, 0}, {3, 1}, {0, 1}));
  CHECK_FALSE(is_convex_ccw({0, 0}, {4, 0}, {1, 1}, {0, 4}));
  CHECK_FALSE(is_convex_ccw({0, 0}, {1, 0}, {2, 0}, {0, 1}));
  CHECK_FALSE(is_convex_ccw({0, 0}, {1, 0}, {1, 0}, {0, 1}));
  CHECK_FALSE(is_convex_ccw({0, 0}, {0, 1}, {1, 1}, {1, 0}));
}

TEST_CASE("ConvexQuad canonicalizes orientation") {
  const ConvexQuad ccw = ConvexQuad::make({0, 0}, {1, 0}, {1, 1}, {0, 1});
  CHECK_FALSE(ccw.note());
  const ConvexQuad cw = ConvexQuad::make({0, 0}, {0, 1}, {1, 1}, {1, 0});
  CHECK(cw.note());
  CHECK(cw.b() == Point{1, 0});
  CHECK(cw.d() == Point{0, 1});
  CHECK_THROWS_AS(ConvexQuad::make({0, 0}, {4, 0}, {1, 1}, {0, 4}), Error);
  CHECK_THROWS_AS(ConvexQuad::make({0, 0}, {1, 0}, {2, 0}, {0, 1}), Error);
}

TEST_CASE("subdivide") {
  const ConvexQuad square = ConvexQuad::make({0, 0}, {1, 0}, {1, 1}, {0, 1});
  const DivisionPoints d = subdivide(square, unit3());
  CHECK(d.on_ab == std::vector<Point>{{0, 0}, {make_rational(1, 3), 0}, {make_rational(2, 3), 0}, {1, 0}});
  CHECK(d.on_dc == std::vector<Point>{{0, 1}, {make_rational(1, 3), 1}, {make_rational(2, 3), 1}, {1, 1}});

  const DivisionPoints e = subdivide(apex_example(), unit3());
  CHECK(e.on_ab[1] == Point{4, 0});
  CHECK(e.on_ab[2] == Point{6, 0});
  CHECK(e.on_dc[1] == Point{0, 2});
  CHECK(e.on_dc[2] == Point{0, 3});

  const ConvexQuad trap = ConvexQuad::make({0, 0}, {6, 0}, {3, 1}, {0, 1});
  const DivisionPoints f = subdivide(trap, DivisionSpec({1, 2}, {2, 1}));
  CHECK(f.on_ab[1] == Point{2, 0});
  CHECK(f.on_dc[1] == Point{2, 1});
}

TEST_CASE("strip_areas examples") {
  const ConvexQuad square = ConvexQuad::make({0, 0}, {1, 0}, {1, 1}, {0, 1});
  const Rational third = make_rational(1, 3);
  CHECK(strip_areas(square, unit3()) == Tuple{third, third, third});
  CHECK(strip_areas(apex_example(), unit3()) == Tuple{3, 5, 7});
  const ConvexQuad trap = ConvexQuad::make({0, 0}, {6, 0}, {3, 1}, {0, 1});
  CHECK(strip_areas(trap, DivisionSpec({1, 2}, {2, 1})) == Tuple{2, make_rational(5, 2)});
}

TEST_CASE("strip areas match an independent triangle split and add up") {
  oracle::Gen g(11);
  int checked = 0;
  while (checked < 200) {
    const Point a{g.any(), g.any()}, b{g.any(), g.any()}, c{g.any(), g.any()}, d{g.any(), g.any()};
    if (!is_convex_ccw(a, b, c, d)) continue;
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 7));
    const DivisionSpec spec(g.positive_tuple(n), g.positive_tuple(n));
    const ConvexQuad q = ConvexQuad::make(a, b, c, d);
    const Tuple x = strip_areas(q, spec);
    CHECK(x == oracle::strip_areas(pairs(q), spec.p(), spec.p_prime()));
    const std::vector<Point> verts = q.vertices();
    CHECK(sum(x) == polygon_area(verts));
    for (const Rational& v : x) CHECK(v > 0);
    ++checked;
  }
}

TEST_CASE("strip areas are affine equivariant") {
  oracle::Gen g(12);
  const ConvexQuad q = apex_example();
  const DivisionSpec spec({1, 2, 3, 1}, {2, 1, 1, 3});
  const Tuple base = strip_areas(q, spec);
  for (int trial = 0; trial < 50; ++trial) {
    Rational m11 = g.any(), m12 = g.any(), m21 = g.any(), m22 = g.any();
    Rational det = m11 * m22 - m12 * m21;
    if (det == 0) continue;
    if (det < 0) {
      std::swap(m11, m12);
      std::swap(m21, m22);
      det = -det;
    }
    const Point shift{g.any(), g.any()};
    const auto map = [&](const Point& u) {
      return Point{m11 * u.x + m12 * u.y + shift.x, m21 * u.x + m22 * u.y + shift.y};
    };
    const ConvexQuad image = ConvexQuad::make(map(q.a()), map(q.b()), map(q.c()), map(q.d()));
    CHECK(strip_areas(image, spec) == scaled(det, base));
  }
}

TEST_CASE("division points are strictly ordered along each side") {
  oracle::Gen g(14);
  const ConvexQuad q = apex_example();
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 8));
    const DivisionSpec spec(g.positive_tuple(n), g.positive_tuple(n));
    const DivisionPoints d = subdivide(q, spec);
    REQUIRE(d.on_ab.size() == n + 1);
    CHECK(d.on_ab.front() == q.a());
    CHECK(d.on_ab.back() == q.b());
    CHECK(d.on_dc.front() == q.d());
    CHECK(d.on_dc.back() == q.c());
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(d.on_ab[j].x < d.on_ab[j + 1].x);
      CHECK(d.on_dc[j].y < d.on_dc[j + 1].y);
      // consecutive lengths proportional to p and p'
      CHECK((d.on_ab[j + 1].x - d.on_ab[j].x) * spec.total_p() == spec.p()[j] * 6);
      CHECK((d.on_dc[j + 1].y - d.on_dc[j].y) * spec.total_p_prime() == spec.p_prime()[j] * 3);
    }
  }
}

TEST_CASE("apex_of") {
  const ApexResult r = apex_of(apex_example(), unit3());
  REQUIRE(std::holds_alternative<ApexFrame>(r));
  const ApexFrame& f = std::get<ApexFrame>(r);
  CHECK(f.apex == O);
  CHECK(f.branch == Branch::Q1);
  CHECK(f.p0 == 1);
  CHECK(f.p0_prime == 1);
  CHECK(f.s == 1);

  const ConvexQuad square = ConvexQuad::make({0, 0}, {1, 0}, {1, 1}, {0, 1});
  CHECK(std::holds_alternative<ParallelMarker>(apex_of(square, unit3())));

  // Reflection across x = 5 reverses orientation; relabel to keep CCW.
  const auto reflect = [](const Point& p) { return Point{10 - p.x, p.y}; };
  const ConvexQuad q = apex_example();
  const ConvexQuad mirrored =
      ConvexQuad::make(reflect(q.b()), reflect(q.a()), reflect(q.d()), reflect(q.c()));
  CHECK_FALSE(mirrored.note());
  const ApexResult m = apex_of(mirrored, unit3());
  REQUIRE(std::holds_alternative<ApexFrame>(m));
  CHECK(std::get<ApexFrame>(m).branch == Branch::Q2);
  CHECK(std::get<ApexFrame>(m).apex == Point{10, 0});
}

TEST_CASE("apex parameters reproduce the nested triangle areas") {
  oracle::Gen g(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 6));
    const DivisionSpec spec(g.positive_tuple(n), g.positive_tuple(n));
    const Rational p0 = g.positive(), p0p = g.positive(), s = g.positive();
    // Apex at the origin, sides along the axes.
    const Rational z = 0;
    const ConvexQuad q = ConvexQuad::make({2 * p0, z}, {2 * (p0 + spec.total_p()), z},
                                          {z, s * (p0p + spec.total_p_prime())}, {z, s * p0p});
    const ApexResult r = apex_of(q, spec);
    REQUIRE(std::holds_alternative<ApexFrame>(r));
    const ApexFrame& f = std::get<ApexFrame>(r);
    CHECK(f.branch == Branch::Q1);
    CHECK(f.p0 == p0);
    CHECK(f.p0_prime == p0p);
    CHECK(f.s == s);
    // [EAD] = s p0 p0'
    const std::vector<Point> ead = {O, q.a(), q.d()};
    CHECK(polygon_area(ead) == s * p0 * p0p);
  }
}
