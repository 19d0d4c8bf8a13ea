#pragma once

#include "quadareas/rational.hpp"

#include <cstddef>
#include <string_view>

namespace quadareas {

/// The pair of positive ratio tuples (p, p') that subdivide sides AB and DC:
/// AA1:A1A2:...:A(n-1)B = p1:...:pn and DD1:...:D(n-1)C = p'1:...:p'n.
class DivisionSpec {
 public:
  /// Throws Error{InvalidInput} unless n >= 2, both tuples have the same
  /// length and every entry is strictly positive.
  DivisionSpec(Tuple p, Tuple p_prime);

  const Tuple& p() const noexcept { return p_; }
  const Tuple& p_prime() const noexcept { return p_prime_; }
  std::size_t size() const noexcept { return p_.size(); }

  Rational total_p() const { return sum(p_); }
  Rational total_p_prime() const { return sum(p_prime_); }

  /// Reverses both tuples (the Q2 construction mirrors Q1 on this spec).
  DivisionSpec reversed() const;

  /// True when p1:p2:...:pn = p'1:p'2:...:p'n.
  bool proportional() const;

  friend bool operator==(const DivisionSpec&, const DivisionSpec&) = default;

 private:
  Tuple p_;
  Tuple p_prime_;
};

/// Which cone a realization or certificate belongs to.
///
/// Q1: A lies between the apex E and B.  Q2: B lies between A and E.
/// Face: positive hull of v1, v2 (parallel sides, unequal scalings).
/// Ray: the ray through v0 (parallel sides, equal scalings).
/// Degenerate: all discriminants vanish; expressed in the (v3, v4) basis.
enum class Branch { Q1, Q2, Face, Ray, Degenerate };

std::string_view to_string(Branch b);

/// strict reproduces the literal characterization in which parallel
/// quadrilaterals only contribute the ray through v0; audited also admits
/// the whole open face spanned by v1 and v2, which trapezoids realize.
enum class Mode { Strict, Audited };

std::string_view to_string(Mode m);

}  // namespace quadareas
