#include "wfm/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wfm {

Rational frac(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

bool is_plain_natural(std::string_view digits) {
  if (digits.empty()) return false;
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return false;
  return digits.size() == 1 || digits.front() != '0';
}

}  // namespace

std::optional<Rational> parse_canonical_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!is_plain_natural(num)) return std::nullopt;
  if (negative && num == "0") return std::nullopt;

  Rational value;
  if (slash == std::string_view::npos) {
    value = Rational(mpz_class(std::string(num)));
  } else {
    const std::string_view den = body.substr(slash + 1);
    if (!is_plain_natural(den)) return std::nullopt;
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d <= 1 || n == 0) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) return std::nullopt;
    value = Rational(n, d);
  }
  if (negative) value = -value;
  return value;
}

}  // namespace wfm
