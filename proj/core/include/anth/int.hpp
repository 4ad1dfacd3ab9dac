#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace anth {

/// Arbitrary-precision signed integer. Every quotient and coefficient in the
/// library is an Int; nothing is narrowed to a fixed-width type.
using Int = mpz_class;

/// Floor of the square root: the r with r*r <= n < (r+1)*(r+1).
/// Throws DomainError for negative n.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

/// Number of decimal digits of |n| (1 for zero).
std::size_t decimal_digits(const Int& n);

/// Parses an optionally signed decimal string. Throws DomainError on
/// malformed input.
Int parse_int(const std::string& text);

inline std::string to_string(const Int& n) { return n.get_str(10); }

}  // namespace anth
