#pragma once

#include "quadareas/core_types.hpp"
#include "quadareas/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace quadareas {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& t, const Point& a);

/// z-component of (a x b).
Rational cross(const Point& a, const Point& b);

/// A strictly convex quadrilateral ABCD traversed counterclockwise.
class ConvexQuad {
 public:
  /// Accepts either orientation. Clockwise input is reflected into
  /// counterclockwise order by swapping B and D, and note() says so.
  /// Throws Error{InvalidInput} if the four points are not strictly convex.
  static ConvexQuad make(Point a, Point b, Point c, Point d);

  const Point& a() const noexcept { return a_; }
  const Point& b() const noexcept { return b_; }
  const Point& c() const noexcept { return c_; }
  const Point& d() const noexcept { return d_; }
  std::vector<Point> vertices() const { return {a_, b_, c_, d_}; }
  const std::optional<std::string>& note() const noexcept { return note_; }

  friend bool operator==(const ConvexQuad& l, const ConvexQuad& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }

 private:
  ConvexQuad(Point a, Point b, Point c, Point d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Point a_, b_, c_, d_;
  std::optional<std::string> note_;
};

/// A = A0, A1, ..., An = B and D = D0, D1, ..., Dn = C.
struct DivisionPoints {
  std::vector<Point> on_ab;
  std::vector<Point> on_dc;
};

/// Signed shoelace area, positive for counterclockwise order.
Rational polygon_area(std::span<const Point> vertices);

/// True iff the four points are pairwise distinct and every consecutive
/// cross product is strictly positive.
bool is_convex_ccw(const Point& a, const Point& b, const Point& c, const Point& d);

DivisionPoints subdivide(const ConvexQuad& q, const DivisionSpec& spec);

/// Areas [A(i-1) Ai Di D(i-1)] for i = 1..n.
Tuple strip_areas(const ConvexQuad& q, const DivisionSpec& spec);

/// Apex data of a quadrilateral whose sides AB and DC are not parallel.
///
/// For Q1, EA:AA1 = p0:p1, ED:DD1 = p0':p1' and [EAD] = s*p0*p0'.
/// For Q2 the same relations are measured from the B/C end of the sides:
/// EB:BA(n-1) = p0:pn, EC:CD(n-1) = p0':p'n and [EBC] = s*p0*p0'.
struct ApexFrame {
  Point apex;
  Rational p0;
  Rational p0_prime;
  Rational s;
  Branch branch;  // Q1 or Q2

  friend bool operator==(const ApexFrame&, const ApexFrame&) = default;
};

struct ParallelMarker {
  friend bool operator==(const ParallelMarker&, const ParallelMarker&) = default;
};

using ApexResult = std::variant<ApexFrame, ParallelMarker>;

/// Throws Error{InconsistentQuad} if E falls on segment AB or DC, or the two
/// sides disagree about which end is nearer E.
ApexResult apex_of(const ConvexQuad& q, const DivisionSpec& spec);

}  // namespace quadareas
