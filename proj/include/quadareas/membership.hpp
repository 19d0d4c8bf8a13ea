#pragma once

#include "quadareas/cone_core.hpp"
#include "quadareas/core_types.hpp"
#include "quadareas/rational.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace quadareas {

enum class RejectionReason { OffSubspace, Boundary, NegativeCoefficient, NonPositiveEntry };

std::string_view to_string(RejectionReason r);

/// Open range of admissible values for the v3 (Q1) or v4 (Q2) coefficient
/// when a degenerate point is rewritten in the basis (v1, v2, v3|v4).
/// `pinned` marks a single admissible value (proportional tuples), in which
/// case upper == lower.
struct CoefficientRange {
  Rational lower;
  std::optional<Rational> upper;
  bool pinned = false;

  bool contains(const Rational& c) const;
  /// The midpoint, lower + 1 when unbounded, or the pinned value.
  Rational representative() const;

  friend bool operator==(const CoefficientRange&, const CoefficientRange&) = default;
};

/// One Q1 or Q2 realization of a degenerate point: the chosen coefficients
/// (a, b, c) with x = a v1 + b v2 + c v3 (Q1) or c v4 (Q2), all positive.
struct Redecomposition {
  Branch branch;
  CoefficientRange range;
  std::array<Rational, 3> chosen;

  friend bool operator==(const Redecomposition&, const Redecomposition&) = default;
};

struct Certificate {
  Branch branch;
  /// Q1: (a,b,c) on (v1,v2,v3). Q2: (a,b,c) on (v1,v2,v4). Face: (a,b) on
  /// (v1,v2). Ray: (t) on v0. Degenerate: (a,b) on (v3,v4).
  Tuple coefficients;

  // Degenerate only.
  std::vector<Redecomposition> redecompositions{};
  /// Positive (a,b) on (v1,v2) when the point also lies on the open face.
  std::optional<std::array<Rational, 2>> face{};

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Verdict {
  bool attainable = false;
  std::optional<Certificate> certificate;
  std::optional<RejectionReason> reason;
  /// Set by the sequence-space decision: only prefix constraints were checked.
  bool prefix_certified = false;

  static Verdict accept(Certificate c) { return {true, std::move(c), std::nullopt}; }
  static Verdict reject(RejectionReason r) { return {false, std::nullopt, r}; }
};

/// Recomputes the tuple a certificate stands for.
Tuple reconstruct(const ConeFrame& f, const Certificate& c);

/// Decides whether x is a strip-area tuple for `spec`.
/// Throws Error{InvalidInput} when x has the wrong length.
Verdict member(const DivisionSpec& spec, const Tuple& x, Mode mode = Mode::Audited);

/// Certificate search for degenerate specs, shared with the sequence-space
/// decision. Vectors may be prefixes; totals are the full sums of p and p'.
/// Returns nullopt if x is not in the span of v3, v4.
struct DegenerateBasis {
  const Tuple& v1;
  const Tuple& v2;
  const Tuple& v3;
  const Tuple& v4;
  Rational total_p;
  Rational total_p_prime;
  bool proportional;
};
Verdict decide_degenerate(const DegenerateBasis& basis, const Tuple& x);

struct OpenInterval {
  Rational lower;
  Rational upper;

  bool contains(const Rational& v) const { return lower < v && v < upper; }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

struct Cor2Result {
  Tuple plane;              // canonical coefficients of the p-only plane
  OpenInterval x3_over_x1;  // admissible open range of x3/x1
};

/// For p = p' with n = 3. Throws Error{InvalidInput} unless p has 3
/// positive entries.
Cor2Result cor2_interval(const Tuple& p);

enum class ParallelDiagnosis { ForcedParallel, NotForced, NotAttainable };

std::string_view to_string(ParallelDiagnosis d);

/// forced-parallel iff x is attainable (audited) but has no Q1 or Q2
/// realization, so every realizing quadrilateral has AB parallel to DC.
ParallelDiagnosis parallel_diagnosis(const DivisionSpec& spec, const Tuple& x);

}  // namespace quadareas
