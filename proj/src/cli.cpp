#include "quadareas/cli.hpp"

#include "quadareas/cone_core.hpp"
#include "quadareas/membership.hpp"
#include "quadareas/oracle.hpp"
#include "quadareas/reduction.hpp"
#include "quadareas/svg.hpp"
#include "quadareas/text_format.hpp"
#include "quadareas/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace quadareas::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string p, pp, x, quad, tail;
  std::string mode = "audited";
  std::string format;
  std::string branch = "q1";
  std::string family = "quads";
  std::size_t count = 100;
  std::uint64_t seed = 42;
  std::optional<std::size_t> pivot;
  unsigned workers = 0;
};

/// Tuples as given on the command line; `sequence` is set when any tail sum
/// was supplied, either through --tail or a "| tail=r" suffix.
struct Inputs {
  ParsedTuple p, pp;
  std::optional<ParsedTuple> x;
  bool sequence = false;

  DivisionSpec spec() const {
    if (sequence) fail(ErrorKind::InvalidInput, "this verb does not accept tail sums");
    return DivisionSpec(p.values, pp.values);
  }
  TailSummedSequence seq_p() const { return TailSummedSequence(p.values, p.tail.value_or(0)); }
  TailSummedSequence seq_pp() const { return TailSummedSequence(pp.values, pp.tail.value_or(0)); }
  TailSummedSequence seq_x() const { return TailSummedSequence(x->values, x->tail.value_or(0), false); }
};

Inputs load_inputs(const Options& o, bool needs_x) {
  Inputs in;
  in.p = parse_tuple(o.p);
  in.pp = parse_tuple(o.pp);
  // sign of x is a verdict, not an input error
  if (needs_x) in.x = parse_tuple(o.x, false);
  if (!o.tail.empty()) {
    const ParsedTuple tails = parse_tuple(o.tail, false);
    const std::size_t want = needs_x ? 3 : 2;
    if (tails.values.size() != want && tails.values.size() != 2)
      fail(ErrorKind::InvalidInput, "--tail expects tail sums for p,pp" +
                                        std::string(needs_x ? "[,x]" : ""));
    for (const Rational& t : tails.values)
      if (sgn(t) < 0) fail(ErrorKind::InvalidInput, "tail sum must be non-negative");
    in.p.tail = tails.values[0];
    in.pp.tail = tails.values[1];
    if (needs_x) in.x->tail = tails.values.size() == 3 ? tails.values[2] : Rational(0);
  }
  in.sequence = in.p.tail || in.pp.tail || (in.x && in.x->tail);
  if (in.sequence && in.x && !in.x->tail) in.x->tail = Rational(0);
  return in;
}

Mode parse_mode(const std::string& m) { return m == "strict" ? Mode::Strict : Mode::Audited; }

json to_json(const Tuple& t) {
  json arr = json::array();
  for (const Rational& v : t) arr.push_back(to_string(v));
  return arr;
}

json to_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json to_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const Point& p : pts) arr.push_back(to_json(p));
  return arr;
}

json to_json(const CoefficientRange& r) {
  json j = {{"lower", to_string(r.lower)}, {"pinned", r.pinned}};
  j["upper"] = r.upper ? json(to_string(*r.upper)) : json(nullptr);
  return j;
}

json to_json(const Certificate& c) {
  json j = {{"branch", std::string(to_string(c.branch))}, {"coeffs", to_json(c.coefficients)}};
  if (c.face) j["face"] = to_json(Tuple{(*c.face)[0], (*c.face)[1]});
  if (!c.redecompositions.empty()) {
    json list = json::array();
    for (const Redecomposition& r : c.redecompositions)
      list.push_back({{"branch", std::string(to_string(r.branch))},
                      {"range", to_json(r.range)},
                      {"chosen", to_json(Tuple(r.chosen.begin(), r.chosen.end()))}});
    j["redecompositions"] = list;
  }
  return j;
}

json input_echo(const Options& o) {
  json j = json::object();
  if (!o.p.empty()) j["p"] = o.p;
  if (!o.pp.empty()) j["pp"] = o.pp;
  if (!o.x.empty()) j["x"] = o.x;
  if (!o.quad.empty()) j["quad"] = o.quad;
  if (!o.tail.empty()) j["tail"] = o.tail;
  return j;
}

json envelope(const std::string& verb, const Options& o, json result) {
  return {{"verb", verb}, {"input", input_echo(o)}, {"result", std::move(result)}};
}

std::string range_text(const CoefficientRange& r) {
  if (r.pinned) return "{" + to_string(r.lower) + "}";
  return "(" + to_string(r.lower) + "," + (r.upper ? to_string(*r.upper) : "inf") + ")";
}

void certificate_text(std::ostream& out, const Certificate& c) {
  for (const Redecomposition& r : c.redecompositions)
    out << "redecomposition branch=" << to_string(r.branch) << " range=" << range_text(r.range)
        << " chosen=" << format_tuple(Tuple(r.chosen.begin(), r.chosen.end())) << '\n';
  if (c.face) out << "face coeffs=" << format_tuple(Tuple{(*c.face)[0], (*c.face)[1]}) << '\n';
}

std::string interval_text(const OpenInterval& i) {
  return "(" + to_string(i.lower) + "," + to_string(i.upper) + ")";
}

// describe

int run_describe(const Options& o, std::ostream& out) {
  const Inputs in = load_inputs(o, false);
  const bool as_json = o.format == "json";
  json result;
  std::ostringstream text;

  if (in.sequence) {
    const TailSummedSequence p = in.seq_p(), pp = in.seq_pp();
    if (p.size() != pp.size()) fail(ErrorKind::InvalidInput, "p and pp prefixes differ in length");
    Tuple deltas;
    for (std::size_t i = 2; i < p.size(); ++i) deltas.push_back(delta_at(p.prefix(), pp.prefix(), i));
    const Cumulants c = tail_cumulants(p, pp);
    const FrameTails tails = frame_tails(p, pp);
    const Rational total = cumulant_total(p, pp);
    const bool degenerate = std::all_of(deltas.begin(), deltas.end(), [](const Rational& d) { return sgn(d) == 0; });
    result = {{"prefix", p.size()},
              {"deltas", to_json(deltas)},
              {"s", to_json(c.s)},
              {"t", to_json(c.t)},
              {"frame_tails", {{"v3", to_string(tails.v3)}, {"v4", to_string(tails.v4)}}},
              {"cumulant_total", to_string(total)}};
    text << "prefix=" << p.size() << " tail_p=" << to_string(p.tail_sum())
         << " tail_pp=" << to_string(pp.tail_sum()) << '\n'
         << "deltas=" << format_tuple(deltas) << '\n'
         << "s=" << format_tuple(c.s) << '\n'
         << "t=" << format_tuple(c.t) << '\n'
         << "tail_v3=" << to_string(tails.v3) << " tail_v4=" << to_string(tails.v4) << '\n'
         << "cumulant_total=" << to_string(total) << '\n';
    if (degenerate && p.size() >= 2) {
      const OpenInterval b = degenerate_ratio_bounds(p, pp);
      result["ratio_bounds"] = to_json(Tuple{b.lower, b.upper});
      text << "ratio_bounds=" << interval_text(b) << '\n';
    }
  } else {
    const DivisionSpec spec = in.spec();
    const DeltaProfile d = delta_profile(spec);
    const CaseLabel label = classify(spec);
    const ConeFrame f = frame(spec);
    HyperplaneSet planes;
    if (spec.size() >= 3) planes = hyperplane_set(spec);
    json eqs = json::array();
    for (const Tuple& e : planes.equations) eqs.push_back(to_json(e));
    result = {{"n", spec.size()},
              {"deltas", to_json(d.deltas)},
              {"case", to_string(label.kind)},
              {"frame",
               {{"v0", to_json(f.v0)}, {"v1", to_json(f.v1)}, {"v2", to_json(f.v2)},
                {"v3", to_json(f.v3)}, {"v4", to_json(f.v4)}}},
              {"hyperplanes", eqs}};
    if (!label.degenerate()) result["pivot"] = label.pivot;
    text << "n=" << spec.size() << " case=" << to_string(label.kind);
    if (!label.degenerate()) text << " pivot=" << label.pivot;
    text << '\n'
         << "deltas=" << format_tuple(d.deltas) << '\n'
         << "v0=" << format_tuple(f.v0) << '\n'
         << "v1=" << format_tuple(f.v1) << '\n'
         << "v2=" << format_tuple(f.v2) << '\n'
         << "v3=" << format_tuple(f.v3) << '\n'
         << "v4=" << format_tuple(f.v4) << '\n';
    for (const Tuple& e : planes.equations) text << "plane=" << format_tuple(e) << '\n';
  }
  if (as_json)
    out << envelope("describe", o, result).dump() << '\n';
  else
    out << text.str();
  return kOk;
}

// member

int run_member(const Options& o, std::ostream& out) {
  const Inputs in = load_inputs(o, true);
  const Mode mode = parse_mode(o.mode);
  const Verdict v = in.sequence ? member_tail(in.seq_p(), in.seq_pp(), in.seq_x(), mode)
                                : member(in.spec(), in.x->values, mode);
  if (o.format == "text") {
    if (v.attainable) {
      out << "attainable branch=" << to_string(v.certificate->branch)
          << " coeffs=" << format_tuple(v.certificate->coefficients);
      if (v.prefix_certified) out << " prefix-certified";
      out << '\n';
      certificate_text(out, *v.certificate);
    } else {
      out << "not-attainable reason=" << to_string(*v.reason) << '\n';
    }
  } else {
    json j = {{"attainable", v.attainable}};
    if (v.attainable) {
      j["branch"] = std::string(to_string(v.certificate->branch));
      j["coeffs"] = to_json(v.certificate->coefficients);
    } else {
      j["reason"] = std::string(to_string(*v.reason));
    }
    if (v.prefix_certified) j["prefix_certified"] = true;
    out << j.dump() << '\n';
  }
  return v.attainable ? kOk : kNotAttainable;
}

// witness

int run_witness(const Options& o, std::ostream& out, std::ostream& err) {
  const Inputs in = load_inputs(o, true);
  const DivisionSpec spec = in.spec();
  WitnessOutput w = [&] {
    try {
      return synthesize_witness(spec, in.x->values, parse_mode(o.mode));
    } catch (const NotAttainableError& e) {
      err << "not attainable: " << to_string(e.reason()) << '\n';
      throw;
    }
  }();
  const Tuple areas = strip_areas(w.quad, spec);
  if (o.format == "svg") {
    out << render_svg(w, spec);
  } else if (o.format == "json") {
    json quad = {{"A", to_json(w.quad.a())}, {"B", to_json(w.quad.b())},
                 {"C", to_json(w.quad.c())}, {"D", to_json(w.quad.d())}};
    json result = {{"quad", quad},
                   {"construction", std::string(to_string(w.construction))},
                   {"ab", to_json(w.division.on_ab)},
                   {"dc", to_json(w.division.on_dc)},
                   {"areas", to_json(areas)}};
    json j = envelope("witness", o, result);
    j["certificate"] = to_json(w.certificate);
    out << j.dump() << '\n';
  } else {
    out << "A=" << format_point(w.quad.a()) << " B=" << format_point(w.quad.b())
        << " C=" << format_point(w.quad.c()) << " D=" << format_point(w.quad.d())
        << " construction=" << to_string(w.construction) << '\n'
        << "AB=" << format_polygon(w.division.on_ab) << '\n'
        << "DC=" << format_polygon(w.division.on_dc) << '\n'
        << "areas=" << format_tuple(areas) << '\n';
  }
  return kOk;
}

// areas

int run_areas(const Options& o, std::ostream& out, std::ostream& err) {
  const Inputs in = load_inputs(o, false);
  const DivisionSpec spec = in.spec();
  const std::vector<Point> pts = parse_polygon(o.quad);
  if (pts.size() != 4) fail(ErrorKind::InvalidInput, "--quad needs exactly four vertices");
  const ConvexQuad q = ConvexQuad::make(pts[0], pts[1], pts[2], pts[3]);
  if (q.note()) err << "note: " << *q.note() << '\n';
  const Tuple areas = strip_areas(q, spec);
  const ApexResult apex = apex_of(q, spec);
  if (o.format == "json") {
    json result = {{"areas", to_json(areas)}, {"quad", to_json(q.vertices())}};
    if (const auto* f = std::get_if<ApexFrame>(&apex))
      result["apex"] = {{"branch", std::string(to_string(f->branch))}, {"point", to_json(f->apex)},
                        {"p0", to_string(f->p0)}, {"p0_prime", to_string(f->p0_prime)},
                        {"s", to_string(f->s)}};
    else
      result["apex"] = "parallel";
    out << envelope("areas", o, result).dump() << '\n';
  } else {
    out << "areas=" << format_tuple(areas) << '\n';
    if (const auto* f = std::get_if<ApexFrame>(&apex))
      out << "apex branch=" << to_string(f->branch) << " E=" << format_point(f->apex)
          << " p0=" << to_string(f->p0) << " p0'=" << to_string(f->p0_prime)
          << " s=" << to_string(f->s) << '\n';
    else
      out << "apex parallel\n";
  }
  return kOk;
}

// sample

int run_sample(const Options& o, std::ostream& out) {
  const Inputs in = load_inputs(o, false);
  const DivisionSpec spec = in.spec();
  SampleReport r = [&] {
    if (o.family == "parallel")
      return sample_parallel_family(spec, o.count, o.seed, parse_mode(o.mode), o.workers);
    if (o.family == "cross") return cross_validate(spec, o.count, o.seed, o.workers);
    return sample_convex_quads(spec, o.count, o.seed, o.workers);
  }();
  if (o.format == "json") {
    json violations = json::array();
    for (const Violation& v : r.violations) {
      json item = {{"index", v.index}, {"x", to_json(v.x)}, {"reason", v.reason}};
      if (v.quad) item["quad"] = to_json(v.quad->vertices());
      violations.push_back(item);
    }
    json result = {{"family", r.family}, {"mode", std::string(to_string(r.mode))},
                   {"seed", r.seed},     {"total", r.total},
                   {"accepted", r.accepted}};
    json j = envelope("sample", o, result);
    j["violations"] = violations;
    out << j.dump() << '\n';
  } else {
    out << to_text(r);
  }
  return r.violations.empty() ? kOk : kViolations;
}

// reduce

int run_reduce(const Options& o, std::ostream& out) {
  const Inputs in = load_inputs(o, true);
  const TailSummedSequence p = in.seq_p(), pp = in.seq_pp();
  const TailSummedSequence x(in.x->values, in.x->tail.value_or(0), false);
  std::size_t pivot = 0;
  if (o.pivot) {
    pivot = *o.pivot;
  } else {
    for (std::size_t i = 2; i < p.size() && i < pp.size(); ++i)
      if (sgn(delta_at(p.prefix(), pp.prefix(), i)) != 0) {
        pivot = i;
        break;
      }
    if (pivot == 0) fail(ErrorKind::InvalidPivot, "every Delta_k vanishes; no pivot to collapse at");
  }
  const Branch branch = o.branch == "q2" ? Branch::Q2 : Branch::Q1;
  const CollapsedInstance c = collapse(p, pp, x, pivot, branch);
  const Verdict v = member(c.spec3, c.x3, parse_mode(o.mode));
  if (o.format == "json") {
    json result = {{"pivot", c.pivot},
                   {"branch", std::string(to_string(c.branch))},
                   {"p", to_json(c.spec3.p())},
                   {"pp", to_json(c.spec3.p_prime())},
                   {"x", to_json(c.x3)},
                   {"attainable", v.attainable}};
    json j = envelope("reduce", o, result);
    if (v.attainable)
      j["certificate"] = to_json(*v.certificate);
    else
      j["result"]["reason"] = std::string(to_string(*v.reason));
    out << j.dump() << '\n';
  } else {
    out << "pivot=" << c.pivot << " branch=" << to_string(c.branch) << '\n'
        << "p=" << format_tuple(c.spec3.p()) << '\n'
        << "pp=" << format_tuple(c.spec3.p_prime()) << '\n'
        << "x=" << format_tuple(c.x3) << '\n';
    if (v.attainable)
      out << "attainable branch=" << to_string(v.certificate->branch)
          << " coeffs=" << format_tuple(v.certificate->coefficients) << '\n';
    else
      out << "not-attainable reason=" << to_string(*v.reason) << '\n';
  }
  return kOk;
}

void add_spec_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "ratios on AB, e.g. 1,2,3 or 1,1/2 | tail=1/2")->required();
  cmd->add_option("--pp", o.pp, "ratios on DC")->required();
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_mode_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "strict or audited")
      ->check(CLI::IsMember({"strict", "audited"}))
      ->capture_default_str();
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact strip-area attainability for divided convex quadrilaterals", "quadareas"};
  app.require_subcommand(1);
  Options o;

  auto* describe = app.add_subcommand("describe", "discriminants, frame vectors and hyperplanes");
  add_spec_options(describe, o);
  describe->add_option("--tail", o.tail, "tail sums p,pp");

  auto* member_cmd = app.add_subcommand("member", "decide attainability of an area tuple");
  add_spec_options(member_cmd, o);
  add_mode_option(member_cmd, o);
  member_cmd->add_option("--x", o.x, "area tuple")->required();
  member_cmd->add_option("--tail", o.tail, "tail sums p,pp[,x]");

  auto* witness = app.add_subcommand("witness", "build a quadrilateral with the given strip areas");
  witness->add_option("--p", o.p)->required();
  witness->add_option("--pp", o.pp)->required();
  witness->add_option("--x", o.x, "area tuple")->required();
  witness->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "svg"}));
  add_mode_option(witness, o);

  auto* areas = app.add_subcommand("areas", "strip areas of a quadrilateral");
  add_spec_options(areas, o);
  areas->add_option("--quad", o.quad, "vertices A;B;C;D as x,y;x,y;...")->required();

  auto* sample = app.add_subcommand("sample", "randomized oracle run");
  add_spec_options(sample, o);
  add_mode_option(sample, o);
  sample->add_option("--family", o.family, "quads, parallel or cross")
      ->check(CLI::IsMember({"quads", "parallel", "cross"}))
      ->capture_default_str();
  sample->add_option("--count", o.count)->capture_default_str()->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed)->capture_default_str();
  sample->add_option("--workers", o.workers, "0 = hardware concurrency")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "collapse to a triple around a pivot");
  add_spec_options(reduce, o);
  add_mode_option(reduce, o);
  reduce->add_option("--x", o.x, "area tuple")->required();
  reduce->add_option("--pivot", o.pivot, "1-based pivot (default: smallest with Delta != 0)");
  reduce->add_option("--branch", o.branch)->check(CLI::IsMember({"q1", "q2"}))->capture_default_str();
  reduce->add_option("--tail", o.tail, "tail sums p,pp[,x]");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (describe->parsed()) return run_describe(o, out);
    if (member_cmd->parsed()) return run_member(o, out);
    if (witness->parsed()) return run_witness(o, out, err);
    if (areas->parsed()) return run_areas(o, out, err);
    if (sample->parsed()) return run_sample(o, out);
    if (reduce->parsed()) return run_reduce(o, out);
  } catch (const NotAttainableError&) {
    return kNotAttainable;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace quadareas::cli
