#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace wfm {

/// Exact rational scalar. GMP keeps results of arithmetic in canonical
/// form (reduced, positive denominator, zero as 0/1).
using Rational = mpq_class;

/// Builds num/den in canonical form. den must be nonzero.
Rational frac(long num, long den);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

/// Accepts exactly the strings produced by to_string: optional '-', no
/// leading zeros, no "+", denominator > 1 and coprime to the numerator,
/// no "-0". Anything else yields nullopt.
std::optional<Rational> parse_canonical_rational(std::string_view text);

}  // namespace wfm
