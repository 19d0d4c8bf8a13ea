#include "quadareas/rational.hpp"
#include "quadareas/text_format.hpp"

#include <doctest.h>

using namespace quadareas;

TEST_CASE("rationals parse to lowest terms") {
  CHECK(parse_rational("4/6") == make_rational(2, 3));
  CHECK(parse_rational(" -3 ") == -3);
  CHECK(parse_rational("+5/10") == make_rational(1, 2));
  CHECK(parse_rational("0") == 0);
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1.5", "/3", "3/", "--1", "10/-4"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("to_string omits unit denominators") {
  CHECK(to_string(make_rational(7, 12)) == "7/12");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(to_string(make_rational(-1, 3)) == "-1/3");
}

TEST_CASE("tuple parsing") {
  CHECK(parse_tuple("1,2,3").values == Tuple{1, 2, 3});
  CHECK(parse_tuple("4/6,1").values == Tuple{make_rational(2, 3), 1});
  try {
    parse_tuple("1,-2");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "entry 2 must be positive");
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
  CHECK(parse_tuple("1,-2", false).values == Tuple{1, -2});
  CHECK_THROWS_AS(parse_tuple("1,,2"), Error);
  CHECK_THROWS_AS(parse_tuple(""), Error);
}

TEST_CASE("tuple parsing with a tail suffix") {
  const ParsedTuple t = parse_tuple("1,1/2 | tail=1/2");
  CHECK(t.values == Tuple{1, make_rational(1, 2)});
  REQUIRE(t.tail);
  CHECK(*t.tail == make_rational(1, 2));
  CHECK_FALSE(parse_tuple("1,2").tail);
  CHECK_THROWS_AS(parse_tuple("1,2 | tail=-1"), Error);
  CHECK_THROWS_AS(parse_tuple("1,2 | foo=1"), Error);
}

TEST_CASE("formatting round-trips") {
  const Tuple t = {make_rational(7, 12), -3, make_rational(5, 2)};
  CHECK(parse_tuple(format_tuple(t), false).values == t);
  const std::vector<Point> poly = {{2, 0}, {8, 0}, {0, 4}, {0, make_rational(1, 3)}};
  CHECK(format_polygon(poly) == "2,0;8,0;0,4;0,1/3");
  CHECK(parse_polygon(format_polygon(poly)) == poly);
  CHECK_THROWS_AS(parse_point("1,2,3"), Error);
}

TEST_CASE("vector helpers") {
  const Tuple u = {1, 2}, v = {3, 5};
  CHECK(sum(u) == 3);
  CHECK(combine(2, u, -1, v) == Tuple{-1, -1});
  CHECK(scaled(make_rational(1, 2), v) == Tuple{make_rational(3, 2), make_rational(5, 2)});
  CHECK(dot(u, v) == 13);
  CHECK(sign(make_rational(-1, 7)) == -1);
}
