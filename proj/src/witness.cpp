#include "quadareas/witness.hpp"

#include "quadareas/cone_core.hpp"

#include <string>

namespace quadareas {

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::ApexQ1: return "apex-Q1";
    case Construction::ApexQ2: return "apex-Q2";
    case Construction::Trapezoid: return "trapezoid";
    case Construction::TrapezoidRay: return "trapezoid-l0";
  }
  return "?";
}

NotAttainableError::NotAttainableError(RejectionReason reason)
    : Error(ErrorKind::NotAttainable,
            "area tuple is not attainable (" + std::string(to_string(reason)) + ")"),
      reason_(reason) {}

Tuple apex_areas(const ApexFrame& fr, const DivisionSpec& spec) {
  const ConeFrame f = frame(spec);
  const Tuple& cumulants = fr.branch == Branch::Q2 ? f.v4 : f.v3;
  Tuple out(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i)
    out[i] = fr.s * (fr.p0 * spec.p_prime()[i] + fr.p0_prime * spec.p()[i] + cumulants[i]);
  return out;
}

ConvexQuad apex_quad(const DivisionSpec& spec, const Rational& p0, const Rational& p0_prime,
                     const Rational& s, Branch branch) {
  if (sgn(p0) <= 0 || sgn(p0_prime) <= 0 || sgn(s) <= 0)
    fail(ErrorKind::InvalidInput, "apex parameters must be positive");
  if (branch == Branch::Q2) {
    const ConvexQuad mirror = apex_quad(spec.reversed(), p0, p0_prime, s, Branch::Q1);
    const auto reflect = [](const Point& u) { return Point{-u.x, u.y}; };
    return ConvexQuad::make(reflect(mirror.b()), reflect(mirror.a()), reflect(mirror.d()),
                            reflect(mirror.c()));
  }
  if (branch != Branch::Q1) fail(ErrorKind::InvalidInput, "apex construction needs q1 or q2");
  const Rational zero = 0;
  return ConvexQuad::make({2 * p0, zero}, {2 * (p0 + spec.total_p()), zero},
                          {zero, s * (p0_prime + spec.total_p_prime())}, {zero, s * p0_prime});
}

ConvexQuad trapezoid_quad(const DivisionSpec& spec, const Rational& a, const Rational& b) {
  if (sgn(a) <= 0 || sgn(b) <= 0) fail(ErrorKind::InvalidInput, "trapezoid scalings must be positive");
  const Rational zero = 0, one = 1;
  return ConvexQuad::make({zero, zero}, {2 * a * spec.total_p(), zero},
                          {2 * b * spec.total_p_prime(), one}, {zero, one});
}

namespace {

struct Plan {
  ConvexQuad quad;
  Construction construction;
};

Plan apex_plan(const DivisionSpec& spec, Branch branch, const Rational& a, const Rational& b,
               const Rational& c) {
  // (a, b, c) = (s p0', s p0, s)
  return {apex_quad(spec, b / c, a / c, c, branch),
          branch == Branch::Q1 ? Construction::ApexQ1 : Construction::ApexQ2};
}

Plan parallel_plan(const DivisionSpec& spec, const Rational& a, const Rational& b) {
  return {trapezoid_quad(spec, a, b), a == b ? Construction::TrapezoidRay : Construction::Trapezoid};
}

Plan plan_for(const DivisionSpec& spec, const Certificate& c) {
  const Tuple& k = c.coefficients;
  switch (c.branch) {
    case Branch::Q1:
    case Branch::Q2: return apex_plan(spec, c.branch, k[0], k[1], k[2]);
    case Branch::Face: return parallel_plan(spec, k[0], k[1]);
    case Branch::Ray: return parallel_plan(spec, k[0], k[0]);
    case Branch::Degenerate:
      if (c.face) return parallel_plan(spec, (*c.face)[0], (*c.face)[1]);
      if (!c.redecompositions.empty()) {
        const Redecomposition& r = c.redecompositions.front();
        return apex_plan(spec, r.branch, r.chosen[0], r.chosen[1], r.chosen[2]);
      }
      break;
  }
  fail(ErrorKind::Internal, "certificate carries no realizable decomposition");
}

}  // namespace

WitnessOutput synthesize_witness(const DivisionSpec& spec, const Tuple& x, Mode mode) {
  const Verdict v = member(spec, x, mode);
  if (!v.attainable) throw NotAttainableError(*v.reason);

  Plan plan = plan_for(spec, *v.certificate);
  const ConvexQuad& q = plan.quad;
  if (!is_convex_ccw(q.a(), q.b(), q.c(), q.d()) || strip_areas(q, spec) != x)
    fail(ErrorKind::Internal, "witness does not reproduce the requested areas");
  DivisionPoints division = subdivide(q, spec);
  return {std::move(plan.quad), std::move(division), *v.certificate, plan.construction};
}

}  // namespace quadareas
