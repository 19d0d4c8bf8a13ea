#include "quadareas/membership.hpp"

#include "linear_solve.hpp"

#include <string>

namespace quadareas {

std::string_view to_string(RejectionReason r) {
  switch (r) {
    case RejectionReason::OffSubspace: return "off-subspace";
    case RejectionReason::Boundary: return "boundary";
    case RejectionReason::NegativeCoefficient: return "negative-coefficient";
    case RejectionReason::NonPositiveEntry: return "non-positive-entry";
  }
  return "?";
}

std::string_view to_string(ParallelDiagnosis d) {
  switch (d) {
    case ParallelDiagnosis::ForcedParallel: return "forced-parallel";
    case ParallelDiagnosis::NotForced: return "not-forced";
    case ParallelDiagnosis::NotAttainable: return "not-attainable";
  }
  return "?";
}

bool CoefficientRange::contains(const Rational& c) const {
  if (pinned) return c == lower;
  return lower < c && (!upper || c < *upper);
}

Rational CoefficientRange::representative() const {
  if (pinned) return lower;
  if (upper) return (lower + *upper) / 2;
  return lower + 1;
}

Tuple reconstruct(const ConeFrame& f, const Certificate& c) {
  const Tuple& k = c.coefficients;
  switch (c.branch) {
    case Branch::Q1: return combine(1, combine(k[0], f.v1, k[1], f.v2), k[2], f.v3);
    case Branch::Q2: return combine(1, combine(k[0], f.v1, k[1], f.v2), k[2], f.v4);
    case Branch::Face: return combine(k[0], f.v1, k[1], f.v2);
    case Branch::Ray: return scaled(k[0], f.v0);
    case Branch::Degenerate: return combine(k[0], f.v3, k[1], f.v4);
  }
  fail(ErrorKind::Internal, "unknown branch");
}

namespace {

bool all_positive(const Tuple& t) {
  for (const Rational& v : t)
    if (sgn(v) <= 0) return false;
  return true;
}

std::optional<RejectionReason> sign_failure(const Tuple& coefficients) {
  bool zero = false;
  for (const Rational& c : coefficients) {
    if (sgn(c) < 0) return RejectionReason::NegativeCoefficient;
    if (sgn(c) == 0) zero = true;
  }
  if (zero) return RejectionReason::Boundary;
  return std::nullopt;
}

bool on_planes(const HyperplaneSet& planes, const Tuple& x) {
  for (const Tuple& eq : planes.equations)
    if (sgn(dot(eq, x)) != 0) return false;
  return true;
}

/// Two rows on which u and v are linearly independent.
std::optional<std::vector<std::size_t>> independent_rows(const Tuple& u, const Tuple& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return std::vector<std::size_t>{i, j};
  return std::nullopt;
}

/// Writes x in the independent pair (u, v); nullopt if x is off their span.
std::optional<std::array<Rational, 2>> coordinates2(const Tuple& u, const Tuple& v, const Tuple& x) {
  const auto rows = independent_rows(u, v);
  if (!rows) fail(ErrorKind::Internal, "basis vectors are parallel");
  const auto c = detail::coordinates_on_rows({&u, &v}, x, *rows);
  if (!c) fail(ErrorKind::Internal, "independent rows gave a singular minor");
  if (combine((*c)[0], u, (*c)[1], v) != x) return std::nullopt;
  return std::array<Rational, 2>{(*c)[0], (*c)[1]};
}

/// Feasible c with c > 0 and k0 - c*k1 > 0 for each (k0, k1) in `limits`.
std::optional<CoefficientRange> feasible_range(
    const std::vector<std::pair<Rational, Rational>>& limits) {
  CoefficientRange range{Rational(0), std::nullopt, false};
  for (const auto& [k0, k1] : limits) {
    if (sgn(k1) == 0) {
      if (sgn(k0) <= 0) return std::nullopt;
      continue;
    }
    const Rational bound = k0 / k1;
    if (sgn(k1) > 0) {
      if (!range.upper || bound < *range.upper) range.upper = bound;
    } else if (bound > range.lower) {
      range.lower = bound;
    }
  }
  if (range.upper && !(range.lower < *range.upper)) return std::nullopt;
  return range;
}

std::optional<Redecomposition> redecompose(Branch branch, const std::array<Rational, 2>& x_in_12,
                                           const std::array<Rational, 2>& w_in_12) {
  const auto range = feasible_range({{x_in_12[0], w_in_12[0]}, {x_in_12[1], w_in_12[1]}});
  if (!range) return std::nullopt;
  const Rational c = range->representative();
  return Redecomposition{branch, *range,
                         {Rational(x_in_12[0] - c * w_in_12[0]),
                          Rational(x_in_12[1] - c * w_in_12[1]), c}};
}

Verdict decide_case_a(const ConeFrame& f, std::size_t pivot, const Tuple& x, Mode mode) {
  const std::vector<std::size_t> rows = {pivot - 2, pivot - 1, pivot};
  const auto in_v3 = detail::coordinates_on_rows({&f.v1, &f.v2, &f.v3}, x, rows);
  if (!in_v3) fail(ErrorKind::Internal, "pivot minor singular although Delta_k != 0");
  if (combine(1, combine((*in_v3)[0], f.v1, (*in_v3)[1], f.v2), (*in_v3)[2], f.v3) != x)
    return Verdict::reject(RejectionReason::OffSubspace);

  const int c_sign = sgn((*in_v3)[2]);
  if (c_sign > 0) {
    if (auto r = sign_failure(*in_v3)) return Verdict::reject(*r);
    return Verdict::accept({Branch::Q1, *in_v3});
  }
  if (c_sign < 0) {
    const auto in_v4 = detail::coordinates_on_rows({&f.v1, &f.v2, &f.v4}, x, rows);
    if (!in_v4) fail(ErrorKind::Internal, "v1, v2, v4 minor singular although Delta_k != 0");
    if (auto r = sign_failure(*in_v4)) return Verdict::reject(*r);
    return Verdict::accept({Branch::Q2, *in_v4});
  }

  const Rational& a = (*in_v3)[0];
  const Rational& b = (*in_v3)[1];
  if (auto r = sign_failure({a, b})) return Verdict::reject(*r);
  if (a == b) return Verdict::accept({Branch::Ray, {a}});
  if (mode == Mode::Strict) return Verdict::reject(RejectionReason::Boundary);
  return Verdict::accept({Branch::Face, {a, b}});
}

}  // namespace

Verdict decide_degenerate(const DegenerateBasis& basis, const Tuple& x) {
  const auto ab = coordinates2(basis.v3, basis.v4, x);
  if (!ab) return Verdict::reject(RejectionReason::OffSubspace);
  const Rational& a = (*ab)[0];
  const Rational& b = (*ab)[1];
  if (auto r = sign_failure({a, b})) return Verdict::reject(*r);

  Certificate cert{Branch::Degenerate, {a, b}, {}, std::nullopt};
  if (basis.proportional) {
    // v2 = kappa v1 and v3 + v4 = K v1, so x = (a - b) v3 + b K v1.
    const Rational kappa = basis.v2[0] / basis.v1[0];
    const Rational big_k = basis.total_p_prime + kappa * basis.total_p;
    if (a > b) {
      const Rational along = b * big_k;
      const Rational c = a - b;
      cert.redecompositions.push_back(
          {Branch::Q1, {c, c, true}, {Rational(along / 2), Rational(along / (2 * kappa)), c}});
    } else if (b > a) {
      const Rational along = a * big_k;
      const Rational c = b - a;
      cert.redecompositions.push_back(
          {Branch::Q2, {c, c, true}, {Rational(along / 2), Rational(along / (2 * kappa)), c}});
    } else {
      const Rational t = b * big_k / (1 + kappa);
      cert.face = std::array<Rational, 2>{t, t};
    }
  } else {
    const auto x12 = coordinates2(basis.v1, basis.v2, x);
    const auto v3_12 = coordinates2(basis.v1, basis.v2, basis.v3);
    const auto v4_12 = coordinates2(basis.v1, basis.v2, basis.v4);
    if (!x12 || !v3_12 || !v4_12)
      fail(ErrorKind::Internal, "degenerate plane is not spanned by v1, v2");
    if (sgn((*x12)[0]) > 0 && sgn((*x12)[1]) > 0) cert.face = *x12;
    if (auto q1 = redecompose(Branch::Q1, *x12, *v3_12)) cert.redecompositions.push_back(*q1);
    if (auto q2 = redecompose(Branch::Q2, *x12, *v4_12)) cert.redecompositions.push_back(*q2);
  }

  for (const Redecomposition& r : cert.redecompositions) {
    const Tuple& w = r.branch == Branch::Q1 ? basis.v3 : basis.v4;
    if (!all_positive({r.chosen.begin(), r.chosen.end()}) ||
        combine(1, combine(r.chosen[0], basis.v1, r.chosen[1], basis.v2), r.chosen[2], w) != x)
      fail(ErrorKind::Internal, "degenerate re-decomposition does not reproduce x");
  }
  if (cert.redecompositions.empty() && !cert.face)
    fail(ErrorKind::Internal, "degenerate point admits neither apex nor parallel realization");
  return Verdict::accept(std::move(cert));
}

Verdict member(const DivisionSpec& spec, const Tuple& x, Mode mode) {
  if (x.size() != spec.size())
    fail(ErrorKind::InvalidInput, "area tuple has length " + std::to_string(x.size()) +
                                      ", expected " + std::to_string(spec.size()));
  if (!all_positive(x)) return Verdict::reject(RejectionReason::NonPositiveEntry);

  const ConeFrame f = frame(spec);
  const CaseLabel label = classify(spec);
  if (label.degenerate()) {
    if (spec.size() >= 3 && !on_planes(alpha_planes(spec), x))
      return Verdict::reject(RejectionReason::OffSubspace);
    return decide_degenerate({f.v1, f.v2, f.v3, f.v4, spec.total_p(), spec.total_p_prime(),
                              label.kind == CaseLabel::Kind::ProportionalB},
                             x);
  }
  if (spec.size() >= 4 && !on_planes(beta_planes(spec, label.pivot), x))
    return Verdict::reject(RejectionReason::OffSubspace);
  return decide_case_a(f, label.pivot, x, mode);
}

Cor2Result cor2_interval(const Tuple& p) {
  if (p.size() != 3) fail(ErrorKind::InvalidInput, "cor2_interval needs a triple");
  const DivisionSpec spec(p, p);
  const HyperplaneSet planes = alpha_planes(spec);
  const Rational lower = p[2] * p[2] / (p[0] * (p[0] + 2 * p[1] + 2 * p[2]));
  const Rational upper = p[2] * (2 * p[0] + 2 * p[1] + p[2]) / (p[0] * p[0]);
  return {planes.equations.front(), {lower, upper}};
}

ParallelDiagnosis parallel_diagnosis(const DivisionSpec& spec, const Tuple& x) {
  const Verdict v = member(spec, x, Mode::Audited);
  if (!v.attainable) return ParallelDiagnosis::NotAttainable;
  switch (v.certificate->branch) {
    case Branch::Q1:
    case Branch::Q2: return ParallelDiagnosis::NotForced;
    case Branch::Face:
    case Branch::Ray: return ParallelDiagnosis::ForcedParallel;
    case Branch::Degenerate:
      return v.certificate->redecompositions.empty() ? ParallelDiagnosis::ForcedParallel
                                                     : ParallelDiagnosis::NotForced;
  }
  return ParallelDiagnosis::NotAttainable;
}

}  // namespace quadareas
