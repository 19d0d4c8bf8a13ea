#pragma once

#include "quadareas/core_types.hpp"
#include "quadareas/membership.hpp"
#include "quadareas/rational.hpp"

#include <cstddef>
#include <optional>

namespace quadareas {

/// An element of l1 held as an exact finite prefix plus the exact sum of all
/// remaining terms. tail_sum == 0 embeds a finite tuple.
class TailSummedSequence {
 public:
  /// Throws Error{InvalidInput} on an empty prefix, a non-positive prefix
  /// entry (when `positive_prefix`), or a negative tail sum.
  explicit TailSummedSequence(Tuple prefix, Rational tail_sum = 0, bool positive_prefix = true);

  const Tuple& prefix() const noexcept { return prefix_; }
  const Rational& tail_sum() const noexcept { return tail_sum_; }
  std::size_t size() const noexcept { return prefix_.size(); }
  Rational total() const { return sum(prefix_) + tail_sum_; }

  /// Sum of entries at 1-based indices >= i (i may be size()+1).
  Rational sum_from(std::size_t i) const;
  /// Sum of entries at 1-based indices <= i.
  Rational sum_to(std::size_t i) const;

  friend bool operator==(const TailSummedSequence&, const TailSummedSequence&) = default;

 private:
  Tuple prefix_;
  Rational tail_sum_;
};

struct Cumulants {
  Tuple s;  // head cumulants over the prefix
  Tuple t;  // tail cumulants over the prefix, using the exact tail sums
};

Cumulants tail_cumulants(const TailSummedSequence& p, const TailSummedSequence& p_prime);

/// sum over all i of (s_i + t_i): prefix terms from the cumulants, terms
/// beyond the prefix in closed form (p_i sum p' + p'_i sum p summed over
/// the tail).
Rational cumulant_total(const TailSummedSequence& p, const TailSummedSequence& p_prime);

/// Exact tail sums of v3 and v4 beyond the prefix.
struct FrameTails {
  Rational v3;
  Rational v4;
};
FrameTails frame_tails(const TailSummedSequence& p, const TailSummedSequence& p_prime);

struct CollapsedInstance {
  DivisionSpec spec3;
  Tuple x3;
  std::size_t pivot;
  Branch branch;
};

/// Collapses to a triple around 1-based pivot k:
///   Q1: ((sum_{j<k} p_j, p_k, p_{k+1}), ...), x3 = (sum_{j<k} x_j, x_k, x_{k+1})
///   Q2: ((p_{k-1}, p_k, sum_{j>k} p_j), ...), x3 = (x_{k-1}, x_k, sum_{j>k} x_j)
/// Throws Error{InvalidPivot} if Delta_k == 0 or k is out of range.
CollapsedInstance collapse(const TailSummedSequence& p, const TailSummedSequence& p_prime,
                           const TailSummedSequence& x, std::size_t k, Branch branch);
CollapsedInstance collapse(const DivisionSpec& spec, const Tuple& x, std::size_t k, Branch branch);

/// Bounds (t2/t1, s2/s1) on x2/x1 for degenerate sequence pairs.
OpenInterval degenerate_ratio_bounds(const TailSummedSequence& p,
                                     const TailSummedSequence& p_prime);

/// Membership for sequence pairs, decided on the shared prefix (length >= 3).
/// The verdict is flagged prefix_certified: hyperplane constraints at
/// indices beyond the prefix are not checked.
Verdict member_tail(const TailSummedSequence& p, const TailSummedSequence& p_prime,
                    const TailSummedSequence& x, Mode mode = Mode::Audited);

/// Non-degenerate decision through the two triple collapses at pivot k
/// (defaults to the smallest pivot). Throws Error{InvalidInput} when every
/// prefix Delta vanishes.
Verdict member_by_collapse(const TailSummedSequence& p, const TailSummedSequence& p_prime,
                           const TailSummedSequence& x, Mode mode = Mode::Audited,
                           std::optional<std::size_t> pivot = std::nullopt);

/// x_{i+1} making det[(p1,p2,p_{i+1}); (p'1,p'2,p'_{i+1}); (x1,x2,x_{i+1})]
/// vanish. i is 1-based with 2 <= i < size. Throws
/// Error{DegenerateDenominator} when p2 p'1 == p1 p'2.
Rational extend_solution(const Tuple& p, const Tuple& p_prime, const Rational& x1,
                         const Rational& x2, std::size_t i);

/// Station check for p = p'. Station coefficients are
///   sigma_i = (p1 + p_i)/(p1 + p2) + 2/(p1 + p2) * sum_{j=2}^{i-1} p_j,  i >= 3,
/// and the normalized tuple y_i = x_i / p_i must satisfy
///   y_i = y_1 + sigma_i (y_2 - y_1)  with  y_2/y_1 strictly inside `bounds`.
struct StationReport {
  Tuple sigma;          // sigma_3 .. sigma_m
  OpenInterval bounds;  // for y2/y1
  Tuple normalized;     // y_1 .. y_m
  bool stations_hold = false;
  bool ratio_inside = false;
  bool attainable = false;
  std::optional<RejectionReason> reason;
};

StationReport cor4_station_check(const TailSummedSequence& p, const TailSummedSequence& x);

}  // namespace quadareas
