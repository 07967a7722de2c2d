#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace octoform {

/// Exact rational scalar used by every algebraic module. The numeric
/// (floating point) layer lives entirely in numform/conegeo and never
/// feeds back into rational computations.
using Rational = mpq_class;

/// num/den with canonicalization (den must be nonzero).
Rational rational_of(long num, long den = 1);

/// Parses "p", "-p", "p/q". Returns nullopt on malformed input or q = 0.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical "p" / "p/q" rendering, matching what parse_rational accepts.
std::string to_string(const Rational& q);

} // namespace octoform
