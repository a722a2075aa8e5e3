#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dtg {

/// Exact arbitrary-precision rational. Always kept canonical (reduced, q > 0).
using Rational = mpq_class;

/// "p/q" with q >= 1, e.g. "4/1", "-3/4".
std::string to_string(const Rational& r);

/// Accepts "p/q" or "p". Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

}  // namespace dtg
