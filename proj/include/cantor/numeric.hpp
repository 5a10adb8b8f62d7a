#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cantor {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator. Every arithmetic operator on mpq_class returns a canonical value;
/// use make_rational() when building one from a raw numerator/denominator pair.
using Rational = mpq_class;

/// Malformed textual input (rational literal, Q-spec, digit string).
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Well-formed input outside an operation's domain, e.g. x outside [0,1).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A runtime cross-check between two routes to the same quantity failed.
/// This is always a bug, never a data error.
class IdentityViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Greatest integer <= x, also for negative x.
Integer int_part(const Rational& x);

/// x - int_part(x), always in [0,1).
Rational frac_part(const Rational& x);

bool is_integer(const Rational& x);

/// Parses "a/b" (b > 0) or a plain integer. A leading '-' is allowed on the
/// numerator only.
Rational parse_rational(std::string_view text);

/// Parses a non-negative decimal integer.
Integer parse_natural(std::string_view text, std::size_t offset = 0);

/// "a/b", or just "a" when the denominator is 1. Re-parses with parse_rational.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Decimal approximation for human-readable output only.
std::string approximate(const Rational& x, int significant_digits = 12);

}  // namespace cantor

#ifdef CANTOR_CHECK_IDENTITIES
#define CANTOR_CHECK(cond, msg)                        \
  do {                                                 \
    if (!(cond)) throw ::cantor::IdentityViolation(msg); \
  } while (0)
#else
#define CANTOR_CHECK(cond, msg) \
  do {                          \
  } while (0)
#endif
