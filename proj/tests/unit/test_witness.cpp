#include "quadareas/witness.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace quadareas;

namespace {

const DivisionSpec kUnit({1, 1, 1}, {1, 1, 1});

std::vector<std::pair<Rational, Rational>> pairs(const ConvexQuad& q) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const Point& p : q.vertices()) out.emplace_back(p.x, p.y);
  return out;
}

/// Round trip through the test-side area computation.
void check_round_trip(const DivisionSpec& spec, const Tuple& x, Mode mode = Mode::Audited) {
  const WitnessOutput w = synthesize_witness(spec, x, mode);
  CHECK(is_convex_ccw(w.quad.a(), w.quad.b(), w.quad.c(), w.quad.d()));
  CHECK(oracle::strip_areas(pairs(w.quad), spec.p(), spec.p_prime()) == x);
  CHECK(strip_areas(w.quad, spec) == x);
  const DivisionPoints d = subdivide(w.quad, spec);
  CHECK(d.on_ab == w.division.on_ab);
  CHECK(d.on_dc == w.division.on_dc);

  const ApexResult apex = apex_of(w.quad, spec);
  switch (w.construction) {
    case Construction::ApexQ1:
      REQUIRE(std::holds_alternative<ApexFrame>(apex));
      CHECK(std::get<ApexFrame>(apex).branch == Branch::Q1);
      break;
    case Construction::ApexQ2:
      REQUIRE(std::holds_alternative<ApexFrame>(apex));
      CHECK(std::get<ApexFrame>(apex).branch == Branch::Q2);
      break;
    case Construction::Trapezoid:
    case Construction::TrapezoidRay:
      CHECK(std::holds_alternative<ParallelMarker>(apex));
      break;
  }
}

}  // namespace

TEST_CASE("apex_areas examples") {
  const ApexFrame f{{0, 0}, 1, 1, 1, Branch::Q1};
  CHECK(apex_areas(f, kUnit) == Tuple{3, 5, 7});
  CHECK(apex_areas(f, DivisionSpec({1, 2, 3}, {1, 1, 1})) == Tuple{3, 8, 16});
  CHECK(apex_areas({{0, 0}, 1, 1, 1, Branch::Q2}, kUnit) == Tuple{7, 5, 3});
}

TEST_CASE("apex_areas reproduce the geometry") {
  oracle::Gen g(51);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 8));
    const DivisionSpec spec(g.positive_tuple(n), g.positive_tuple(n));
    const Rational p0 = g.positive(), p0p = g.positive(), s = g.positive();
    const Branch branch = trial % 2 ? Branch::Q1 : Branch::Q2;
    const ConvexQuad q = apex_quad(spec, p0, p0p, s, branch);
    const ApexResult r = apex_of(q, spec);
    REQUIRE(std::holds_alternative<ApexFrame>(r));
    const ApexFrame& f = std::get<ApexFrame>(r);
    CHECK(f.branch == branch);
    CHECK(f.p0 == p0);
    CHECK(f.p0_prime == p0p);
    CHECK(f.s == s);
    CHECK(apex_areas(f, spec) == oracle::strip_areas(pairs(q), spec.p(), spec.p_prime()));
  }
}

TEST_CASE("witness examples") {
  const WitnessOutput w = synthesize_witness(kUnit, {3, 5, 7});
  CHECK(w.construction == Construction::ApexQ1);
  CHECK(w.quad.a() == Point{2, 0});
  CHECK(w.quad.b() == Point{8, 0});
  CHECK(w.quad.c() == Point{0, 4});
  CHECK(w.quad.d() == Point{0, 1});

  const DivisionSpec two({1, 2}, {2, 1});
  const WitnessOutput t = synthesize_witness(two, {2, make_rational(5, 2)});
  CHECK(t.construction == Construction::Trapezoid);
  CHECK(t.quad.vertices() == std::vector<Point>{{0, 0}, {6, 0}, {3, 1}, {0, 1}});

  const WitnessOutput sq = synthesize_witness(kUnit, {1, 1, 1});
  CHECK(sq.construction == Construction::TrapezoidRay);
  CHECK(sq.quad.vertices() == std::vector<Point>{{0, 0}, {3, 0}, {3, 1}, {0, 1}});
  CHECK(strip_areas(sq.quad, kUnit) == Tuple{1, 1, 1});

  const WitnessOutput mirrored = synthesize_witness(kUnit, {7, 5, 3});
  CHECK(mirrored.construction == Construction::ApexQ2);
  check_round_trip(kUnit, {7, 5, 3});
}

TEST_CASE("witness refuses unattainable tuples with the membership reason") {
  try {
    synthesize_witness(kUnit, {1, 1, 5});
    FAIL("expected refusal");
  } catch (const NotAttainableError& e) {
    CHECK(e.reason() == RejectionReason::OffSubspace);
    CHECK(e.kind() == ErrorKind::NotAttainable);
  }
  const DivisionSpec spec({1, 2, 3}, {1, 1, 1});
  CHECK_THROWS_AS(synthesize_witness(spec, {3, 5, 7}, Mode::Strict), NotAttainableError);
  check_round_trip(spec, {3, 5, 7}, Mode::Audited);
}

TEST_CASE("witness round trips across spec classes") {
  oracle::Gen g(52);
  const std::vector<DivisionSpec> degenerate = {
      kUnit, DivisionSpec({1, 1, 1}, {1, 2, 6}), DivisionSpec({1, 2}, {2, 1}),
      DivisionSpec({1, 2, 3, 5}, {2, 4, 6, 10}),
      DivisionSpec({1, 1, 1, make_rational(1, 2)}, {1, 2, 6, 12})};
  for (const DivisionSpec& spec : degenerate) {
    const ConeFrame f = frame(spec);
    for (int trial = 0; trial < 40; ++trial) {
      const Tuple x = combine(g.positive(), f.v3, g.positive(), f.v4);
      check_round_trip(spec, x);
    }
  }
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(3, 8));
    const DivisionSpec spec(g.positive_tuple(n), g.positive_tuple(n));
    const ConeFrame f = frame(spec);
    Tuple x;
    switch (trial % 4) {
      case 0: x = combine(1, combine(g.positive(), f.v1, g.positive(), f.v2), g.positive(), f.v3); break;
      case 1: x = combine(1, combine(g.positive(), f.v1, g.positive(), f.v2), g.positive(), f.v4); break;
      case 2: x = combine(g.positive(), f.v1, g.positive(), f.v2); break;
      default: x = scaled(g.positive(), f.v0); break;
    }
    check_round_trip(spec, x);
  }
}

TEST_CASE("degenerate witnesses use an interior redecomposition") {
  oracle::Gen g(53);
  const DivisionSpec spec({1, 1, 1}, {1, 2, 6});
  const ConeFrame f = frame(spec);
  for (int trial = 0; trial < 50; ++trial) {
    const Tuple x = combine(g.positive(), f.v3, g.positive(), f.v4);
    const WitnessOutput w = synthesize_witness(spec, x);
    const Verdict v = member(spec, x);
    REQUIRE(v.attainable);
    if (w.construction == Construction::ApexQ1 || w.construction == Construction::ApexQ2) {
      const ApexFrame fr = std::get<ApexFrame>(apex_of(w.quad, spec));
      bool inside = false;
      for (const Redecomposition& r : v.certificate->redecompositions)
        if (r.branch == fr.branch && r.range.contains(fr.s)) inside = true;
      CHECK(inside);
    }
  }
}

TEST_CASE("scaling x scales only the DC coordinates of an apex witness") {
  oracle::Gen g(54);
  const DivisionSpec spec({1, 2, 3}, {1, 1, 1});
  const ConeFrame f = frame(spec);
  for (int trial = 0; trial < 50; ++trial) {
    const Tuple x = combine(1, combine(g.positive(), f.v1, g.positive(), f.v2), g.positive(), f.v3);
    const Rational t = g.positive();
    const WitnessOutput a = synthesize_witness(spec, x), b = synthesize_witness(spec, scaled(t, x));
    REQUIRE(a.construction == Construction::ApexQ1);
    const auto stretch = [&](const Point& u) { return Point{u.x, t * u.y}; };
    CHECK(b.quad.a() == stretch(a.quad.a()));
    CHECK(b.quad.b() == stretch(a.quad.b()));
    CHECK(b.quad.c() == stretch(a.quad.c()));
    CHECK(b.quad.d() == stretch(a.quad.d()));
  }
}

TEST_CASE("construction names") {
  CHECK(to_string(Construction::ApexQ1) == "apex-Q1");
  CHECK(to_string(Construction::ApexQ2) == "apex-Q2");
  CHECK(to_string(Construction::Trapezoid) == "trapezoid");
  CHECK(to_string(Construction::TrapezoidRay) == "trapezoid-l0");
}
