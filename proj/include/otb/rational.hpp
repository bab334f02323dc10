#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace otb {

using Integer = mpz_class;

/// Arbitrary precision rational; GMP keeps results of arithmetic in lowest
/// terms with a positive denominator.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace otb
