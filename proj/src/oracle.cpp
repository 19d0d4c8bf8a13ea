#include "quadareas/oracle.hpp"

#include "quadareas/cone_core.hpp"
#include "quadareas/membership.hpp"
#include "quadareas/reduction.hpp"
#include "quadareas/text_format.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

namespace quadareas {

Lcg64 Lcg64::for_sample(std::uint64_t seed, std::uint64_t index) {
  Lcg64 rng(seed ^ ((index + 1) * 0x9E3779B97F4A7C15ULL));
  rng.next();
  return rng;
}

std::uint32_t Lcg64::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return static_cast<std::uint32_t>(state_ >> 33);
}

Rational Lcg64::grid() { return make_rational(1 + static_cast<long>(next() % 64), 8); }

namespace {

using SampleFn = std::function<std::optional<Violation>(std::size_t)>;

/// Runs fn over [0, count) split into contiguous chunks; results are
/// collected by index.
std::vector<Violation> run_indexed(std::size_t count, unsigned workers, const SampleFn& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::vector<std::optional<Violation>> slots(count);
  const std::size_t chunk = (count + workers - 1) / workers;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(count, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) slots[i] = fn(i);
      });
    }
  }
  std::vector<Violation> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

SampleReport make_report(std::string family, const DivisionSpec& spec, Mode mode,
                         std::size_t count, std::uint64_t seed, std::vector<Violation> violations) {
  SampleReport r{std::move(family), spec, mode, count, 0, std::move(violations), seed};
  r.accepted = count - r.violations.size();
  return r;
}

ConvexQuad direct_apex_quad(const DivisionSpec& spec, const Rational& p0, const Rational& p0_prime,
                            const Rational& s, Branch branch) {
  const Rational zero = 0;
  const Rational near_ab = 2 * p0;
  const Rational far_ab = 2 * (p0 + spec.total_p());
  const Rational near_dc = s * p0_prime;
  const Rational far_dc = s * (p0_prime + spec.total_p_prime());
  if (branch == Branch::Q1)
    return ConvexQuad::make({near_ab, zero}, {far_ab, zero}, {zero, far_dc}, {zero, near_dc});
  return ConvexQuad::make({-far_ab, zero}, {-near_ab, zero}, {zero, near_dc}, {zero, far_dc});
}

/// Random rational affine map with positive determinant.
struct Affine {
  Rational a, b, c, d, tx, ty;

  Point operator()(const Point& u) const { return {a * u.x + b * u.y + tx, c * u.x + d * u.y + ty}; }
  ConvexQuad operator()(const ConvexQuad& q) const {
    return ConvexQuad::make((*this)(q.a()), (*this)(q.b()), (*this)(q.c()), (*this)(q.d()));
  }
};

Affine draw_affine(Lcg64& rng) {
  while (true) {
    Affine m{rng.grid(), rng.grid(), rng.grid(), rng.grid(), rng.grid() - 4, rng.grid() - 4};
    const Rational det = m.a * m.d - m.b * m.c;
    if (sgn(det) == 0) continue;
    if (sgn(det) < 0) {
      std::swap(m.a, m.b);
      std::swap(m.c, m.d);
    }
    return m;
  }
}

std::string branch_text(Branch b) { return std::string(to_string(b)); }

}  // namespace

std::string to_text(const SampleReport& r) {
  std::ostringstream out;
  out << "report family=" << r.family << " mode=" << to_string(r.mode) << " seed=" << r.seed
      << " total=" << r.total << " accepted=" << r.accepted
      << " violations=" << r.violations.size() << '\n';
  out << "spec p=" << format_tuple(r.spec.p()) << " pp=" << format_tuple(r.spec.p_prime()) << '\n';
  for (const Violation& v : r.violations) {
    out << "violation index=" << v.index << " x=" << format_tuple(v.x);
    if (v.quad) out << " quad=" << format_polygon(v.quad->vertices());
    out << " reason=" << v.reason << '\n';
  }
  return out.str();
}

SampleReport sample_convex_quads(const DivisionSpec& spec, std::size_t count, std::uint64_t seed,
                                 unsigned workers) {
  if (count == 0) fail(ErrorKind::InvalidInput, "count must be >= 1");
  const auto one = [&](std::size_t i) -> std::optional<Violation> {
    Lcg64 rng = Lcg64::for_sample(seed, i);
    const Rational p0 = rng.grid(), p0_prime = rng.grid(), s = rng.grid();
    const Branch built = (i % 3 == 0 || (i % 3 == 2 && (i / 3) % 2 == 0)) ? Branch::Q1 : Branch::Q2;
    ConvexQuad q = direct_apex_quad(spec, p0, p0_prime, s, built);
    if (i % 3 == 2) q = draw_affine(rng)(q);

    const Tuple x = strip_areas(q, spec);
    const auto report = [&](std::string why) { return Violation{i, q, x, std::move(why)}; };
    const ApexResult apex = apex_of(q, spec);
    const auto* fr = std::get_if<ApexFrame>(&apex);
    if (!fr) return report("generated quadrilateral has parallel sides");
    if (fr->branch != built) return report("apex_of reports " + branch_text(fr->branch));

    const Verdict v = member(spec, x, Mode::Audited);
    if (!v.attainable) return report("rejected: " + std::string(to_string(*v.reason)));
    const Certificate& c = *v.certificate;
    if (c.branch == Branch::Degenerate) {
      const auto it = std::find_if(c.redecompositions.begin(), c.redecompositions.end(),
                                   [&](const Redecomposition& r) { return r.branch == fr->branch; });
      if (it == c.redecompositions.end())
        return report("degenerate certificate lacks a " + branch_text(fr->branch) + " realization");
      if (!it->range.contains(fr->s)) return report("apex scale outside the feasible range");
      return std::nullopt;
    }
    if (c.branch != fr->branch)
      return report("branch " + branch_text(c.branch) + ", geometry says " + branch_text(fr->branch));
    const Tuple expected = {fr->s * fr->p0_prime, fr->s * fr->p0, fr->s};
    if (c.coefficients != expected)
      return report("certificate " + format_tuple(c.coefficients) + " != " + format_tuple(expected));
    return std::nullopt;
  };
  return make_report("convex-quads", spec, Mode::Audited, count, seed,
                     run_indexed(count, workers, one));
}

SampleReport sample_parallel_family(const DivisionSpec& spec, std::size_t count,
                                    std::uint64_t seed, Mode mode, unsigned workers) {
  if (count == 0) fail(ErrorKind::InvalidInput, "count must be >= 1");
  const ConeFrame f = frame(spec);
  const auto one = [&](std::size_t i) -> std::optional<Violation> {
    Lcg64 rng = Lcg64::for_sample(seed, i);
    const Rational mu = rng.grid(), mu_prime = rng.grid(), offset = rng.grid() - 4;
    const Rational zero = 0, one_ = 1;
    ConvexQuad q = ConvexQuad::make({zero, zero}, {mu * spec.total_p(), zero},
                                    {offset + mu_prime * spec.total_p_prime(), one_}, {offset, one_});
    Rational scale = 1;
    if (i % 2 == 1) {
      const Affine m = draw_affine(rng);
      q = m(q);
      scale = m.a * m.d - m.b * m.c;
    }
    const Tuple x = strip_areas(q, spec);
    const auto report = [&](std::string why) { return Violation{i, q, x, std::move(why)}; };
    if (!std::holds_alternative<ParallelMarker>(apex_of(q, spec)))
      return report("trapezoid sides not parallel");
    const Rational a = scale * mu / 2, b = scale * mu_prime / 2;
    if (combine(a, f.v1, b, f.v2) != x) return report("strip areas differ from a v1 + b v2");

    const Verdict v = member(spec, x, mode);
    if (!v.attainable) return report("rejected: " + std::string(to_string(*v.reason)));
    const Certificate& c = *v.certificate;
    switch (c.branch) {
      case Branch::Face:
        if (c.coefficients != Tuple{a, b}) return report("face certificate mismatch");
        return std::nullopt;
      case Branch::Ray:
        if (a != b || c.coefficients != Tuple{a}) return report("ray certificate mismatch");
        return std::nullopt;
      case Branch::Degenerate:
        if (!c.face || combine((*c.face)[0], f.v1, (*c.face)[1], f.v2) != x)
          return report("degenerate certificate lacks the parallel decomposition");
        return std::nullopt;
      default:
        return report("parallel sample certified as " + branch_text(c.branch));
    }
  };
  return make_report("parallel-family", spec, mode, count, seed, run_indexed(count, workers, one));
}

SampleReport cross_validate(const DivisionSpec& spec, std::size_t count, std::uint64_t seed,
                            unsigned workers) {
  if (count == 0) fail(ErrorKind::InvalidInput, "count must be >= 1");
  const CaseLabel label = classify(spec);
  if (label.degenerate()) fail(ErrorKind::InvalidInput, "cross-validation needs a spec with some Delta_k != 0");
  const ConeFrame f = frame(spec);
  const TailSummedSequence p(spec.p()), q(spec.p_prime());
  const std::size_t n = spec.size();

  const auto one = [&](std::size_t i) -> std::optional<Violation> {
    Lcg64 rng = Lcg64::for_sample(seed, i);
    Rational a = rng.grid(), b = rng.grid(), c = rng.grid();
    Tuple x;
    switch (i % 5) {
      case 0: x = combine(1, combine(a, f.v1, b, f.v2), c, f.v3); break;
      case 1: x = combine(1, combine(a, f.v1, b, f.v2), c, f.v4); break;
      case 2:
        if (rng.coin()) a = -a;
        if (rng.coin()) b = -b;
        if (rng.coin()) c = -c;
        x = combine(1, combine(a, f.v1, b, f.v2), c, rng.coin() ? f.v3 : f.v4);
        break;
      case 3: x = combine(a, f.v1, b, f.v2); break;
      default:
        x = combine(1, combine(a, f.v1, b, f.v2), c, f.v3);
        x[rng.next() % n] += make_rational(1, 8);
        break;
    }
    const Verdict direct = member(spec, x, Mode::Audited);
    const Verdict reduced = member_by_collapse(p, q, TailSummedSequence(x, 0, false), Mode::Audited,
                                               label.pivot);
    const auto describe = [](const Verdict& v) {
      if (!v.attainable) return "reject:" + std::string(to_string(*v.reason));
      return branch_text(v.certificate->branch) + ":" + format_tuple(v.certificate->coefficients);
    };
    const std::string lhs = describe(direct), rhs = describe(reduced);
    if (lhs != rhs) return Violation{i, std::nullopt, x, "direct " + lhs + " vs collapse " + rhs};
    return std::nullopt;
  };
  return make_report("cross-validate", spec, Mode::Audited, count, seed,
                     run_indexed(count, workers, one));
}

}  // namespace quadareas
