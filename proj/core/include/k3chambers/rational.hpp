#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace k3chambers {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses "n", "-n" or "p/q" (q != 0). Throws Error{ParseError}.
Rational parse_rational(std::string_view text);

/// num / den in lowest terms. Throws InvalidArgument for den == 0.
Rational ratio(long num, long den);

/// Canonical text form: "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace k3chambers
