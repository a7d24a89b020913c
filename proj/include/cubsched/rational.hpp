#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace cubsched {

/// Exact arithmetic for speeds, loads and makespans.  All quantities the
/// solver reports are ratios of small integers, so 64-bit components are
/// far more than enough.
using Rational = boost::rational<long long>;

/// Parses "p" or "p/q" with positive integer p and q.  Throws SolverError
/// (malformed_input) on anything else, including zero or negative values.
Rational parse_positive_rational(std::string_view text);

/// Canonical text form: lowest terms, "p/q", or just "p" when q == 1.
std::string format_rational(const Rational& value);

/// Largest integer m with m <= value.
long long floor_rational(const Rational& value);

/// Smallest integer m with m >= value.
long long ceil_rational(const Rational& value);

}  // namespace cubsched
