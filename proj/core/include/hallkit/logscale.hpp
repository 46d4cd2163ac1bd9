#pragma once
#include <optional>
#include <string>

#include "hallkit/bigfloat.hpp"
#include "hallkit/int_types.hpp"

namespace hallkit {

// A positive real stored as an iterated exponential exp^height(mantissa),
// for magnitudes no floating-point exponent can reach.  Canonical form keeps
// the mantissa interval inside [0, 1) whenever height > 0 (height 0 carries
// any value below 1, including negatives); with that band, values compare
// lexicographically by (height, mantissa).  All mantissas are outward-rounded
// intervals: a comparison is only decided when the intervals separate.
struct LogScale {
  Index height = 0;
  Interval mantissa;
};

// Canonicalize by iterated log.  Throws when the working precision cannot
// place the value on one side of a band edge.
LogScale logscale_from_interval(Interval v);
LogScale logscale_from_int(const Int& v, mpfr_prec_t prec);

LogScale logscale_exp(const LogScale& x);
LogScale logscale_log(const LogScale& x);  // pre: value > 1 when height == 0

// Iterated exp back to a plain interval while the exponent stays
// floating-point-safe; nullopt when the value is too large.
std::optional<Interval> logscale_materialize(const LogScale& x);

// x^(num/den) for positive x, num/den >= 1 integers.  Exact height
// bookkeeping; descends the tower with certified error envelopes when the
// intermediate logarithm is itself too large to materialize.
LogScale logscale_pow_ratio(const LogScale& x, const Int& num, const Int& den);

// -1 / +1 when decided, nullopt when mantissa intervals overlap at equal
// heights.
std::optional<int> logscale_compare(const LogScale& a, const LogScale& b);

std::string logscale_render(const LogScale& x, std::size_t digits = 12);

}  // namespace hallkit
