// Exact rational scalar type plus parsing/formatting helpers used everywhere else.
// All arithmetic in this library is exact; floating point only ever appears in
// human-facing decimal renderings and one explicitly diagnostic regression fit.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fivesel {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "7", "-3/4", "4.12", ".5", "-0.04" exactly (4.12 -> 103/25).
// Returns nullopt on malformed input instead of throwing; callers decide.
std::optional<Rat> parse_rat(std::string_view s);

// parse_rat that throws std::invalid_argument with the offending text.
Rat parse_rat_or_throw(std::string_view s);

// "103/25", or "7" when the denominator is 1.
std::string fraction_string(const Rat& q);

// Fixed-point decimal rounded to `places` digits, half away from zero.
// Exact inputs only; used for report rendering next to fraction_string.
std::string decimal_string(const Rat& q, int places = 6);

// Integer powers. pow_rat handles negative exponents (q != 0).
Int pow_int(const Int& base, unsigned long exp);
Rat pow_rat(const Rat& base, long exp);

// Floor integer roots of nonnegative integers.
Int isqrt(const Int& n);
Int icbrt(const Int& n);
Int iroot(const Int& n, unsigned long k);

// abs/min/max convenience that stay in exact types.
inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

}  // namespace fivesel
