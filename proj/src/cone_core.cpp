#include "quadareas/cone_core.hpp"

#include "linear_solve.hpp"

#include <algorithm>
#include <string>

namespace quadareas {

DivisionSpec::DivisionSpec(Tuple p, Tuple p_prime)
    : p_(std::move(p)), p_prime_(std::move(p_prime)) {
  if (p_.size() != p_prime_.size())
    fail(ErrorKind::InvalidInput, "ratio tuples differ in length");
  if (p_.size() < 2) fail(ErrorKind::InvalidInput, "a division needs n >= 2 segments");
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (sgn(p_[i]) <= 0)
      fail(ErrorKind::InvalidInput, "p entry " + std::to_string(i + 1) + " must be positive");
    if (sgn(p_prime_[i]) <= 0)
      fail(ErrorKind::InvalidInput, "p' entry " + std::to_string(i + 1) + " must be positive");
  }
}

DivisionSpec DivisionSpec::reversed() const {
  return DivisionSpec(Tuple(p_.rbegin(), p_.rend()), Tuple(p_prime_.rbegin(), p_prime_.rend()));
}

bool DivisionSpec::proportional() const {
  for (std::size_t i = 1; i < p_.size(); ++i)
    if (p_[0] * p_prime_[i] != p_[i] * p_prime_[0]) return false;
  return true;
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Q1: return "q1";
    case Branch::Q2: return "q2";
    case Branch::Face: return "face";
    case Branch::Ray: return "ray";
    case Branch::Degenerate: return "degenerate";
  }
  return "?";
}

std::string_view to_string(Mode m) { return m == Mode::Strict ? "strict" : "audited"; }

const char* to_string(CaseLabel::Kind kind) {
  switch (kind) {
    case CaseLabel::Kind::CaseA: return "case-a";
    case CaseLabel::Kind::ProportionalB: return "case-b-proportional";
    case CaseLabel::Kind::NonProportionalB: return "case-b-nonproportional";
  }
  return "?";
}

Rational delta_at(const Tuple& p, const Tuple& q, std::size_t i) {
  const std::size_t m = i - 1;  // 0-based centre
  return (p[m - 1] + p[m] + p[m + 1]) * q[m - 1] * q[m + 1] * p[m] -
         (q[m - 1] + q[m] + q[m + 1]) * p[m - 1] * p[m + 1] * q[m];
}

DeltaProfile delta_profile(const DivisionSpec& spec) {
  DeltaProfile profile;
  for (std::size_t i = 2; i + 1 <= spec.size(); ++i)
    profile.deltas.push_back(delta_at(spec.p(), spec.p_prime(), i));
  return profile;
}

ConeFrame frame(const DivisionSpec& spec) {
  const Tuple& p = spec.p();
  const Tuple& q = spec.p_prime();
  const std::size_t n = spec.size();
  const Rational total_p = spec.total_p();
  const Rational total_q = spec.total_p_prime();

  ConeFrame f;
  f.v1 = p;
  f.v2 = q;
  f.v0 = combine(1, p, 1, q);
  f.v3.resize(n);
  f.v4.resize(n);
  Rational head_p = 0, head_q = 0;
  for (std::size_t i = 0; i < n; ++i) {
    head_p += p[i];
    head_q += q[i];
    const Rational tail_p = total_p - head_p + p[i];
    const Rational tail_q = total_q - head_q + q[i];
    f.v3[i] = -p[i] * q[i] + p[i] * head_q + q[i] * head_p;
    f.v4[i] = -p[i] * q[i] + p[i] * tail_q + q[i] * tail_p;
  }
  return f;
}

CaseLabel classify(const DivisionSpec& spec) {
  for (std::size_t i = 2; i + 1 <= spec.size(); ++i)
    if (sgn(delta_at(spec.p(), spec.p_prime(), i)) != 0)
      return {CaseLabel::Kind::CaseA, i};
  return {spec.proportional() ? CaseLabel::Kind::ProportionalB
                              : CaseLabel::Kind::NonProportionalB};
}

Tuple canonical_equation(const Tuple& coefficients) {
  mpz_class scale = 1;
  for (const Rational& c : coefficients) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(coefficients.size());
  mpz_class g = 0;
  for (const Rational& c : coefficients) {
    mpz_class v = c.get_num() * (scale / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (g == 0) return coefficients;
  const auto lead = std::find_if(ints.begin(), ints.end(), [](const mpz_class& v) { return v != 0; });
  if (*lead < 0) g = -g;
  Tuple out;
  out.reserve(ints.size());
  for (const mpz_class& v : ints) out.emplace_back(mpz_class(v / g));
  return out;
}

HyperplaneSet beta_planes(const DivisionSpec& spec, std::size_t k) {
  const std::size_t n = spec.size();
  if (k < 2 || k + 1 > n)
    fail(ErrorKind::InvalidPivot, "pivot " + std::to_string(k) + " out of range");
  if (sgn(delta_at(spec.p(), spec.p_prime(), k)) == 0)
    fail(ErrorKind::InvalidPivot, "Delta_" + std::to_string(k) + " vanishes");

  const ConeFrame f = frame(spec);
  const std::size_t lo = k - 2;  // 0-based index of x_{k-1}
  detail::Matrix m = {{f.v1[lo], f.v1[lo + 1], f.v1[lo + 2]},
                      {f.v2[lo], f.v2[lo + 1], f.v2[lo + 2]},
                      {f.v3[lo], f.v3[lo + 1], f.v3[lo + 2]}};
  HyperplaneSet set;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= lo && i <= lo + 2) continue;
    const auto c = detail::solve_square(m, {-f.v1[i], -f.v2[i], -f.v3[i]});
    if (!c) fail(ErrorKind::Internal, "pivot system singular although Delta_k != 0");
    Tuple eq(n, Rational(0));
    eq[i] = 1;
    eq[lo] = (*c)[0];
    eq[lo + 1] = (*c)[1];
    eq[lo + 2] = (*c)[2];
    set.equations.push_back(canonical_equation(eq));
  }
  return set;
}

HyperplaneSet alpha_planes(const DivisionSpec& spec) {
  const Tuple& p = spec.p();
  const Tuple& q = spec.p_prime();
  const std::size_t n = spec.size();
  const bool proportional = spec.proportional();
  HyperplaneSet set;
  for (std::size_t m = 1; m + 1 < n; ++m) {  // 0-based centre of alpha_{m+1}
    Tuple eq(n, Rational(0));
    if (proportional) {
      eq[m - 1] = (p[m + 1] + p[m]) / p[m - 1];
      eq[m] = -(p[m - 1] + 2 * p[m] + p[m + 1]) / p[m];
      eq[m + 1] = (p[m - 1] + p[m]) / p[m + 1];
    } else {
      eq[m - 1] = p[m] * q[m + 1] - p[m + 1] * q[m];
      eq[m] = p[m + 1] * q[m - 1] - p[m - 1] * q[m + 1];
      eq[m + 1] = p[m - 1] * q[m] - p[m] * q[m - 1];
    }
    set.equations.push_back(canonical_equation(eq));
  }
  return set;
}

HyperplaneSet hyperplane_set(const DivisionSpec& spec) {
  if (spec.size() < 3) fail(ErrorKind::InvalidInput, "hyperplanes need n >= 3");
  const CaseLabel label = classify(spec);
  if (label.kind == CaseLabel::Kind::CaseA) return beta_planes(spec, label.pivot);
  return alpha_planes(spec);
}

Rational continue_degenerate(const Tuple& p, const Tuple& q, const Rational& next_q) {
  if (p.size() != q.size() || p.size() < 2)
    fail(ErrorKind::InvalidInput, "prefixes must have equal length >= 2");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (sgn(p[i]) <= 0 || sgn(q[i]) <= 0)
      fail(ErrorKind::InvalidInput, "prefix entry " + std::to_string(i + 1) + " must be positive");
  if (sgn(next_q) <= 0) fail(ErrorKind::InvalidInput, "next p' must be positive");
  for (std::size_t i = 2; i + 1 <= p.size(); ++i)
    if (sgn(delta_at(p, q, i)) != 0)
      fail(ErrorKind::InvalidInput, "prefix has Delta_" + std::to_string(i) + " != 0");

  const std::size_t m = p.size() - 1;
  const Rational num = q[m - 1] * next_q * p[m] * (p[m - 1] + p[m]);
  const Rational den = (q[m - 1] + q[m] + next_q) * p[m - 1] * q[m] - q[m - 1] * next_q * p[m];
  if (sgn(den) == 0 || sgn(num) * sgn(den) <= 0)
    fail(ErrorKind::NoValidContinuation, "no positive continuation keeps Delta at zero");
  return num / den;
}

}  // namespace quadareas
