#pragma once

#include "quadareas/core_types.hpp"
#include "quadareas/exact_geometry.hpp"
#include "quadareas/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quadareas {

/// 64-bit linear congruential generator (Knuth's MMIX constants):
///   state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// next() returns the high 31 bits of the new state. Sample i of a batch
/// seeded with `seed` uses the stream started at
///   seed ^ ((i + 1) * 0x9E3779B97F4A7C15),
/// so reports do not depend on how a batch is split across workers.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t state) : state_(state) {}
  static Lcg64 for_sample(std::uint64_t seed, std::uint64_t index);

  std::uint32_t next();
  /// Uniform draw from {1/8, 2/8, ..., 64/8}.
  Rational grid();
  bool coin() { return (next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

struct Violation {
  std::size_t index;
  std::optional<ConvexQuad> quad;
  Tuple x;
  std::string reason;
};

struct SampleReport {
  std::string family;  // convex-quads | parallel-family | cross-validate
  DivisionSpec spec;
  Mode mode;
  std::size_t total = 0;
  std::size_t accepted = 0;
  std::vector<Violation> violations;
  std::uint64_t seed = 0;
};

/// Line-oriented rendering; identical inputs give byte-identical text.
std::string to_text(const SampleReport& r);

/// Apex-Q1, apex-Q2 and affine images of either, in rotation. Every sample
/// must be audited-attainable with the branch apex_of reports and, for
/// non-degenerate specs, the certificate (s p0', s p0, s).
/// `workers == 0` uses the hardware concurrency.
SampleReport sample_convex_quads(const DivisionSpec& spec, std::size_t count, std::uint64_t seed,
                                 unsigned workers = 0);

/// Trapezoids with independent side scalings mu, mu' (and affine images).
/// A violation is any sample the membership test rejects in `mode`, or an
/// accepted one whose certificate is not the parallel decomposition.
SampleReport sample_parallel_family(const DivisionSpec& spec, std::size_t count,
                                    std::uint64_t seed, Mode mode, unsigned workers = 0);

/// Compares the direct n-dimensional decision with the two-collapse
/// decision on random combinations of the frame vectors. Throws
/// Error{InvalidInput} for degenerate specs.
SampleReport cross_validate(const DivisionSpec& spec, std::size_t count, std::uint64_t seed,
                            unsigned workers = 0);

}  // namespace quadareas
