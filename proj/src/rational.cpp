#include "quadareas/rational.hpp"

#include <cctype>

namespace quadareas {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InconsistentQuad: return "inconsistent-quad";
    case ErrorKind::Internal: return "internal";
    case ErrorKind::NoValidContinuation: return "no-valid-continuation";
    case ErrorKind::InvalidPivot: return "invalid-pivot";
    case ErrorKind::DegenerateDenominator: return "degenerate-denominator";
    case ErrorKind::NotAttainable: return "not-attainable";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

int sign(const Rational& r) { return sgn(r); }

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view literal = trim(text);
  std::string_view body = literal;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);

  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    fail(ErrorKind::InvalidInput,
         "malformed rational literal '" + std::string(literal) + "'");

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    fail(ErrorKind::InvalidInput,
         "zero denominator in '" + std::string(literal) + "'");
  if (literal.front() == '-') n = -n;

  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

Tuple combine(const Rational& a, std::span<const Rational> u,
              const Rational& b, std::span<const Rational> v) {
  if (u.size() != v.size())
    fail(ErrorKind::InvalidInput, "combine: length mismatch");
  Tuple out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = a * u[i] + b * v[i];
  return out;
}

Tuple scaled(const Rational& t, std::span<const Rational> u) {
  Tuple out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = t * u[i];
  return out;
}

Rational dot(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size())
    fail(ErrorKind::InvalidInput, "dot: length mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) total += u[i] * v[i];
  return total;
}

}  // namespace quadareas
