#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace alg2 {

/// Exact rational number. GMP keeps every mpq_class result in lowest terms with a
/// positive denominator; values parsed from text are canonicalized on entry.
using Scalar = mpq_class;

/// "p/q" (or "p" for integers), the canonical GMP rendering.
std::string to_string(const Scalar& x);

/// Accepts "p", "-p", "p/q". Throws ParseError on anything else, including q = 0.
Scalar parse_scalar(std::string_view text);

}  // namespace alg2
