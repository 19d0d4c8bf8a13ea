#pragma once

#include "quadareas/core_types.hpp"
#include "quadareas/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace quadareas {

/// Discriminants Delta_i for i = 2..n-1 (1-based), in index order:
///   Delta_i = (p(i-1)+p(i)+p(i+1)) p'(i-1) p'(i+1) p(i)
///           - (p'(i-1)+p'(i)+p'(i+1)) p(i-1) p(i+1) p'(i)
struct DeltaProfile {
  Tuple deltas;

  /// Delta at 1-based index i, 2 <= i <= n-1.
  const Rational& at(std::size_t i) const { return deltas.at(i - 2); }
};

/// The vectors whose positive hulls make up the attainable set.
///
///   v1 = p, v2 = p', v0 = v1 + v2,
///   v3 = (s_i), s_i = -p_i p'_i + p_i sum_{j<=i} p'_j + p'_i sum_{j<=i} p_j,
///   v4 = (t_i), t_i = -p_i p'_i + p_i sum_{j>=i} p'_j + p'_i sum_{j>=i} p_j.
struct ConeFrame {
  Tuple v0, v1, v2, v3, v4;

  const Tuple& s_cumulants() const noexcept { return v3; }
  const Tuple& t_cumulants() const noexcept { return v4; }
};

/// Equations sum_i c_i x_i = 0, each stored in canonical form: integer
/// coefficients with gcd 1 and a positive first nonzero entry.
struct HyperplaneSet {
  std::vector<Tuple> equations;
};

struct CaseLabel {
  enum class Kind { CaseA, ProportionalB, NonProportionalB };

  Kind kind;
  std::size_t pivot = 0;  // CaseA: smallest 1-based k with Delta_k != 0

  bool degenerate() const noexcept { return kind != Kind::CaseA; }
  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

const char* to_string(CaseLabel::Kind kind);

Rational delta_at(const Tuple& p, const Tuple& p_prime, std::size_t i);

DeltaProfile delta_profile(const DivisionSpec& spec);

ConeFrame frame(const DivisionSpec& spec);

CaseLabel classify(const DivisionSpec& spec);

/// Canonical hyperplanes cutting out the span of the attainable set.
///
/// Degenerate case: n-2 planes alpha_i (cross-ratio form for non-proportional
/// tuples, the p-only form for proportional ones). CaseA: n-3 planes beta_i
/// around the smallest pivot. Throws Error{InvalidInput} for n < 3.
HyperplaneSet hyperplane_set(const DivisionSpec& spec);

/// The beta planes around an explicit 1-based pivot k (Delta_k != 0), with
/// the x_i coefficient fixed to 1 before canonicalization. Throws
/// Error{InvalidPivot} if Delta_k == 0 or k is out of range.
HyperplaneSet beta_planes(const DivisionSpec& spec, std::size_t k);

/// alpha_i planes for degenerate specs, 2 <= i <= n-1.
HyperplaneSet alpha_planes(const DivisionSpec& spec);

/// Scales to integer coefficients with gcd 1 and a positive leading entry.
Tuple canonical_equation(const Tuple& coefficients);

/// Given prefixes with every Delta_i == 0, returns the unique p(m+1) > 0
/// making Delta_m == 0 once p'(m+1) = next_p_prime is appended.
/// Throws Error{NoValidContinuation} when no positive value exists.
Rational continue_degenerate(const Tuple& p_prefix, const Tuple& p_prime_prefix,
                             const Rational& next_p_prime);

}  // namespace quadareas
