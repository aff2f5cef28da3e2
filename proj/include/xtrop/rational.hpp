#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace xtrop {

// Arbitrary-precision exact rational, always kept in lowest terms with a
// positive denominator.
using Rational = mpq_class;

/// Parses `-?digits(/digits)?` or `-?digits(.digits)?`. Decimals are
/// converted exactly (2.5 -> 5/2). Throws Error(Parse) on anything else.
Rational parse_rational(std::string_view text);

/// Lowest-terms form: "3", "-1/2".
std::string format_rational(const Rational& q);

}  // namespace xtrop
