#include "quadareas/reduction.hpp"

#include "quadareas/cone_core.hpp"

#include <string>

namespace quadareas {

TailSummedSequence::TailSummedSequence(Tuple prefix, Rational tail_sum, bool positive_prefix)
    : prefix_(std::move(prefix)), tail_sum_(std::move(tail_sum)) {
  if (prefix_.empty()) fail(ErrorKind::InvalidInput, "sequence prefix is empty");
  if (positive_prefix)
    for (std::size_t i = 0; i < prefix_.size(); ++i)
      if (sgn(prefix_[i]) <= 0)
        fail(ErrorKind::InvalidInput, "entry " + std::to_string(i + 1) + " must be positive");
  if (sgn(tail_sum_) < 0) fail(ErrorKind::InvalidInput, "tail sum must be non-negative");
}

Rational TailSummedSequence::sum_from(std::size_t i) const {
  Rational total = tail_sum_;
  for (std::size_t j = i; j <= prefix_.size(); ++j) total += prefix_[j - 1];
  return total;
}

Rational TailSummedSequence::sum_to(std::size_t i) const {
  Rational total = 0;
  for (std::size_t j = 1; j <= i && j <= prefix_.size(); ++j) total += prefix_[j - 1];
  return total;
}

namespace {

void require_same_length(const TailSummedSequence& a, const TailSummedSequence& b) {
  if (a.size() != b.size())
    fail(ErrorKind::InvalidInput, "sequence prefixes differ in length (" +
                                      std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

bool prefix_positive(const TailSummedSequence& x) {
  for (const Rational& v : x.prefix())
    if (sgn(v) <= 0) return false;
  return true;
}

std::optional<std::size_t> first_pivot(const Tuple& p, const Tuple& q) {
  for (std::size_t i = 2; i + 1 <= p.size(); ++i)
    if (sgn(delta_at(p, q, i)) != 0) return i;
  return std::nullopt;
}

bool on_planes(const HyperplaneSet& planes, const Tuple& x) {
  for (const Tuple& eq : planes.equations)
    if (sgn(dot(eq, x)) != 0) return false;
  return true;
}

/// Tail sum of the sequence a certificate stands for, beyond the prefix.
Rational certified_tail(const Certificate& c, const TailSummedSequence& p,
                        const TailSummedSequence& q, const FrameTails& tails) {
  const Tuple& k = c.coefficients;
  switch (c.branch) {
    case Branch::Q1: return k[0] * p.tail_sum() + k[1] * q.tail_sum() + k[2] * tails.v3;
    case Branch::Q2: return k[0] * p.tail_sum() + k[1] * q.tail_sum() + k[2] * tails.v4;
    case Branch::Face: return k[0] * p.tail_sum() + k[1] * q.tail_sum();
    case Branch::Ray: return k[0] * (p.tail_sum() + q.tail_sum());
    case Branch::Degenerate: return k[0] * tails.v3 + k[1] * tails.v4;
  }
  fail(ErrorKind::Internal, "unknown branch");
}

/// The non-degenerate certificate a collapsed verdict carries for `want`
/// (Q1 or Q2), or a Face/Ray certificate when `want` is Face.
std::optional<Certificate> pick(const Verdict& v, Branch want) {
  if (!v.attainable) return std::nullopt;
  const Certificate& c = *v.certificate;
  if (c.branch == Branch::Degenerate) {
    if (want == Branch::Face) {
      if (!c.face) return std::nullopt;
      const auto& f = *c.face;
      if (f[0] == f[1]) return Certificate{Branch::Ray, {f[0]}, {}, std::nullopt};
      return Certificate{Branch::Face, {f[0], f[1]}, {}, std::nullopt};
    }
    for (const Redecomposition& r : c.redecompositions)
      if (r.branch == want)
        return Certificate{want, {r.chosen[0], r.chosen[1], r.chosen[2]}, {}, std::nullopt};
    return std::nullopt;
  }
  if (c.branch == want) return c;
  if (want == Branch::Face && (c.branch == Branch::Face || c.branch == Branch::Ray)) return c;
  return std::nullopt;
}

}  // namespace

Cumulants tail_cumulants(const TailSummedSequence& p, const TailSummedSequence& q) {
  require_same_length(p, q);
  Cumulants out;
  Rational head_p = 0, head_q = 0;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    const Rational& pi = p.prefix()[i - 1];
    const Rational& qi = q.prefix()[i - 1];
    head_p += pi;
    head_q += qi;
    out.s.push_back(-pi * qi + pi * head_q + qi * head_p);
    out.t.push_back(-pi * qi + pi * q.sum_from(i) + qi * p.sum_from(i));
  }
  return out;
}

FrameTails frame_tails(const TailSummedSequence& p, const TailSummedSequence& q) {
  require_same_length(p, q);
  // s_i and t_i telescope: s_i = S_i S'_i - S_{i-1} S'_{i-1}, t_i = T_i T'_i - T_{i+1} T'_{i+1}.
  const std::size_t m = p.size();
  return {p.total() * q.total() - p.sum_to(m) * q.sum_to(m), p.tail_sum() * q.tail_sum()};
}

Rational cumulant_total(const TailSummedSequence& p, const TailSummedSequence& q) {
  const Cumulants c = tail_cumulants(p, q);
  const FrameTails tails = frame_tails(p, q);
  return sum(c.s) + sum(c.t) + tails.v3 + tails.v4;
}

CollapsedInstance collapse(const TailSummedSequence& p, const TailSummedSequence& q,
                           const TailSummedSequence& x, std::size_t k, Branch branch) {
  require_same_length(p, q);
  require_same_length(p, x);
  const std::size_t m = p.size();
  if (k < 2 || k + 1 > m)
    fail(ErrorKind::InvalidPivot, "pivot " + std::to_string(k) + " out of range");
  if (sgn(delta_at(p.prefix(), q.prefix(), k)) == 0)
    fail(ErrorKind::InvalidPivot, "Delta_" + std::to_string(k) + " vanishes");

  const auto at = [](const TailSummedSequence& s, std::size_t i) -> const Rational& {
    return s.prefix()[i - 1];
  };
  if (branch == Branch::Q1) {
    return {DivisionSpec({p.sum_to(k - 1), at(p, k), at(p, k + 1)},
                         {q.sum_to(k - 1), at(q, k), at(q, k + 1)}),
            {x.sum_to(k - 1), at(x, k), at(x, k + 1)}, k, branch};
  }
  if (branch == Branch::Q2) {
    return {DivisionSpec({at(p, k - 1), at(p, k), p.sum_from(k + 1)},
                         {at(q, k - 1), at(q, k), q.sum_from(k + 1)}),
            {at(x, k - 1), at(x, k), x.sum_from(k + 1)}, k, branch};
  }
  fail(ErrorKind::InvalidInput, "collapse branch must be q1 or q2");
}

CollapsedInstance collapse(const DivisionSpec& spec, const Tuple& x, std::size_t k, Branch branch) {
  return collapse(TailSummedSequence(spec.p()), TailSummedSequence(spec.p_prime()),
                  TailSummedSequence(x, 0, false), k, branch);
}

OpenInterval degenerate_ratio_bounds(const TailSummedSequence& p, const TailSummedSequence& q) {
  require_same_length(p, q);
  if (p.size() < 2) fail(ErrorKind::InvalidInput, "ratio bounds need a prefix of length >= 2");
  const Cumulants c = tail_cumulants(p, q);
  const Rational& p1 = p.prefix()[0];
  const Rational& p2 = p.prefix()[1];
  const Rational& q1 = q.prefix()[0];
  const Rational& q2 = q.prefix()[1];
  const Rational sigma1 = p1 * q1 + p1 * q.sum_from(2) + q1 * p.sum_from(2);
  const Rational sigma2 = p2 * q2 + p2 * q.sum_from(3) + q2 * p.sum_from(3);
  if (sigma1 != c.t[0] || sigma2 != c.t[1])
    fail(ErrorKind::Internal, "Sigma_1, Sigma_2 disagree with the tail cumulants");
  return {sigma2 / sigma1, c.s[1] / c.s[0]};
}

Verdict member_by_collapse(const TailSummedSequence& p, const TailSummedSequence& q,
                           const TailSummedSequence& x, Mode mode,
                           std::optional<std::size_t> pivot) {
  require_same_length(p, q);
  require_same_length(p, x);
  const std::size_t m = p.size();
  if (m < 3) fail(ErrorKind::InvalidInput, "collapse needs a prefix of length >= 3");
  if (!pivot) pivot = first_pivot(p.prefix(), q.prefix());
  if (!pivot) fail(ErrorKind::InvalidInput, "every Delta vanishes on the prefix; no pivot");

  Verdict out;
  out.prefix_certified = p.tail_sum() != 0 || q.tail_sum() != 0 || x.tail_sum() != 0;
  if (!prefix_positive(x)) {
    out.reason = RejectionReason::NonPositiveEntry;
    return out;
  }
  const DivisionSpec prefix_spec(p.prefix(), q.prefix());
  if (m >= 4 && !on_planes(beta_planes(prefix_spec, *pivot), x.prefix())) {
    out.reason = RejectionReason::OffSubspace;
    return out;
  }

  const CollapsedInstance head = collapse(p, q, x, *pivot, Branch::Q1);
  const Verdict head_verdict = member(head.spec3, head.x3, mode);
  std::optional<Certificate> cert = pick(head_verdict, Branch::Q1);
  if (!cert) cert = pick(head_verdict, Branch::Face);
  std::optional<RejectionReason> reason = head_verdict.reason;
  if (!cert) {
    const CollapsedInstance tail = collapse(p, q, x, *pivot, Branch::Q2);
    const Verdict tail_verdict = member(tail.spec3, tail.x3, mode);
    cert = pick(tail_verdict, Branch::Q2);
    if (!reason) reason = tail_verdict.reason;
  }
  if (!cert) {
    out.reason = reason.value_or(RejectionReason::NegativeCoefficient);
    return out;
  }
  if (certified_tail(*cert, p, q, frame_tails(p, q)) != x.tail_sum()) {
    out.reason = RejectionReason::OffSubspace;
    return out;
  }
  out.attainable = true;
  out.certificate = std::move(cert);
  return out;
}

Verdict member_tail(const TailSummedSequence& p, const TailSummedSequence& q,
                    const TailSummedSequence& x, Mode mode) {
  require_same_length(p, q);
  require_same_length(p, x);
  if (p.size() < 3) fail(ErrorKind::InvalidInput, "sequence decision needs a prefix of length >= 3");

  if (first_pivot(p.prefix(), q.prefix())) {
    Verdict v = member_by_collapse(p, q, x, mode);
    v.prefix_certified = true;
    return v;
  }

  Verdict out;
  out.prefix_certified = true;
  if (!prefix_positive(x)) {
    out.reason = RejectionReason::NonPositiveEntry;
    return out;
  }
  const DivisionSpec prefix_spec(p.prefix(), q.prefix());
  if (!on_planes(alpha_planes(prefix_spec), x.prefix())) {
    out.reason = RejectionReason::OffSubspace;
    return out;
  }
  const Cumulants c = tail_cumulants(p, q);
  Verdict v = decide_degenerate({p.prefix(), q.prefix(), c.s, c.t, p.total(), q.total(),
                                 prefix_spec.proportional()},
                                x.prefix());
  v.prefix_certified = true;
  if (!v.attainable) return v;

  const OpenInterval bounds = degenerate_ratio_bounds(p, q);
  const Rational ratio = x.prefix()[1] / x.prefix()[0];
  if (!bounds.contains(ratio))
    fail(ErrorKind::Internal, "accepted degenerate point violates the x2/x1 bounds");
  if (certified_tail(*v.certificate, p, q, frame_tails(p, q)) != x.tail_sum()) {
    out.reason = RejectionReason::OffSubspace;
    return out;
  }
  return v;
}

Rational extend_solution(const Tuple& p, const Tuple& q, const Rational& x1, const Rational& x2,
                         std::size_t i) {
  if (p.size() != q.size() || i < 1 || i + 1 > p.size())
    fail(ErrorKind::InvalidInput, "extension index out of range");
  const Rational den = p[1] * q[0] - p[0] * q[1];
  if (sgn(den) == 0)
    fail(ErrorKind::DegenerateDenominator, "p2 p'1 == p1 p'2; use the station form instead");
  const Rational& pn = p[i];
  const Rational& qn = q[i];
  return (x1 * (p[1] * qn - pn * q[1]) + x2 * (pn * q[0] - p[0] * qn)) / den;
}

StationReport cor4_station_check(const TailSummedSequence& p, const TailSummedSequence& x) {
  require_same_length(p, x);
  const std::size_t m = p.size();
  if (m < 3) fail(ErrorKind::InvalidInput, "station check needs a prefix of length >= 3");
  const Tuple& pp = p.prefix();

  StationReport r;
  const Rational head = pp[0] + pp[1];
  Rational inner = 0;  // sum_{j=2}^{i-1} p_j
  for (std::size_t i = 3; i <= m; ++i) {
    inner += pp[i - 2];
    r.sigma.push_back((pp[0] + pp[i - 1]) / head + 2 * inner / head);
  }
  r.bounds = {1 - head / (pp[0] + 2 * p.sum_from(2)), 2 + pp[1] / pp[0]};

  if (!prefix_positive(x)) {
    r.reason = RejectionReason::NonPositiveEntry;
    return r;
  }
  for (std::size_t i = 0; i < m; ++i) r.normalized.push_back(x.prefix()[i] / pp[i]);
  const Rational& y1 = r.normalized[0];
  const Rational& y2 = r.normalized[1];
  r.stations_hold = true;
  for (std::size_t i = 3; i <= m; ++i)
    if (r.normalized[i - 1] != y1 + r.sigma[i - 3] * (y2 - y1)) r.stations_hold = false;
  const Rational ratio = y2 / y1;
  r.ratio_inside = r.bounds.contains(ratio);

  if (!r.stations_hold)
    r.reason = RejectionReason::OffSubspace;
  else if (ratio == r.bounds.lower || ratio == r.bounds.upper)
    r.reason = RejectionReason::Boundary;
  else if (!r.ratio_inside)
    r.reason = RejectionReason::NegativeCoefficient;
  r.attainable = !r.reason;
  return r;
}

}  // namespace quadareas
