#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quadareas {

/// Exact rational number in lowest terms with a positive denominator.
///
/// All arithmetic in the library goes through this type. Beware of `auto`
/// with gmpxx expression templates: spell out `Rational` for temporaries.
using Rational = mpq_class;

/// An ordered tuple of exact rationals (ratio tuples, area tuples, frame
/// vectors).
using Tuple = std::vector<Rational>;

enum class ErrorKind {
  InvalidInput,
  InconsistentQuad,
  Internal,
  NoValidContinuation,
  InvalidPivot,
  DegenerateDenominator,
  NotAttainable,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int sign(const Rational& r);

/// "a/b" or "a"; denominators of 1 are omitted.
std::string to_string(const Rational& r);

/// Parses "a", "-a", "a/b" (whitespace around the literal is ignored).
/// Throws Error{InvalidInput} on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

Rational sum(std::span<const Rational> values);

/// Componentwise a*u + b*v.
Tuple combine(const Rational& a, std::span<const Rational> u,
              const Rational& b, std::span<const Rational> v);

Tuple scaled(const Rational& t, std::span<const Rational> u);

Rational dot(std::span<const Rational> u, std::span<const Rational> v);

}  // namespace quadareas
