#pragma once

#include "quadareas/core_types.hpp"
#include "quadareas/exact_geometry.hpp"
#include "quadareas/membership.hpp"

#include <string_view>

namespace quadareas {

enum class Construction { ApexQ1, ApexQ2, Trapezoid, TrapezoidRay };

std::string_view to_string(Construction c);

struct WitnessOutput {
  ConvexQuad quad;
  DivisionPoints division;
  Certificate certificate;
  Construction construction;
};

/// Q1: A_i = s(p0 p'_i + p0' p_i + s_i);  Q2: the same with t_i.
Tuple apex_areas(const ApexFrame& frame, const DivisionSpec& spec);

/// Apex construction with E at the origin, AB on the x-axis (EA = 2 p0) and
/// DC on the y-axis (ED = s p0'). Q2 mirrors the Q1 construction of the
/// reversed spec and relabels A<->B, D<->C.
ConvexQuad apex_quad(const DivisionSpec& spec, const Rational& p0, const Rational& p0_prime,
                     const Rational& s, Branch branch);

/// Trapezoid A(0,0), B(2a sum p, 0), C(2b sum p', 1), D(0,1); its strip
/// areas are a p + b p'.
ConvexQuad trapezoid_quad(const DivisionSpec& spec, const Rational& a, const Rational& b);

/// Builds a quadrilateral whose strip areas equal x exactly.
/// Throws NotAttainableError if member(spec, x, mode) rejects x.
WitnessOutput synthesize_witness(const DivisionSpec& spec, const Tuple& x,
                                 Mode mode = Mode::Audited);

class NotAttainableError : public Error {
 public:
  explicit NotAttainableError(RejectionReason reason);
  RejectionReason reason() const noexcept { return reason_; }

 private:
  RejectionReason reason_;
};

}  // namespace quadareas
