#include "hallkit/logscale.hpp"

#include "hallkit/errors.hpp"

namespace hallkit {

namespace {

// exp(x) is floating-point-safe while x stays well under the mpfr exponent
// limit (~3e18 with 64-bit exponents); one more exp of the result is not.
bool exp_safe(const Interval& v) {
  return mpfr_cmp_d(v.hi.raw(), 1e18) < 0;
}

mpfr_prec_t prec_of(const Interval& v) { return v.lo.precision(); }

}  // namespace

LogScale logscale_from_interval(Interval v) {
  Index height = 0;
  for (;;) {
    int lo_cmp = mpfr_cmp_si(v.lo.raw(), 1);
    int hi_cmp = mpfr_cmp_si(v.hi.raw(), 1);
    if (hi_cmp < 0) break;
    if (lo_cmp < 0)
      throw DomainError(
          "logscale: the interval straddles a canonical band edge; raise the working precision");
    v = iv_log(v);
    ++height;
    if (height > 64) throw DomainError("logscale: tower too high to canonicalize");
  }
  return LogScale{height, v};
}

LogScale logscale_from_int(const Int& v, mpfr_prec_t prec) {
  return logscale_from_interval(iv_from_int(v, prec));
}

LogScale logscale_exp(const LogScale& x) {
  if (x.height == 0) {
    // The mantissa may be negative or otherwise off-band: go numeric.
    return logscale_from_interval(iv_exp(x.mantissa));
  }
  return LogScale{x.height + 1, x.mantissa};
}

LogScale logscale_log(const LogScale& x) {
  if (x.height == 0) {
    if (mpfr_sgn(x.mantissa.lo.raw()) <= 0)
      throw DomainError("logscale: log of a non-positive value");
    return logscale_from_interval(iv_log(x.mantissa));
  }
  if (x.height == 1) return logscale_from_interval(x.mantissa);
  return LogScale{x.height - 1, x.mantissa};
}

std::optional<Interval> logscale_materialize(const LogScale& x) {
  Interval v = x.mantissa;
  for (Index i = 0; i < x.height; ++i) {
    if (!exp_safe(v)) return std::nullopt;
    v = iv_exp(v);
  }
  return v;
}

namespace {

// value(base) + shift, as a canonical tower.  When the base is too large to
// materialize, ln(V + s) = ln V + ln(1 + s/V) and |ln(1 + s/V)| <= 2|s|/V;
// since V >= exp(1e18) here the correction is absorbed into an outward
// envelope and the recursion descends one tower level.
LogScale logscale_add_small(const LogScale& base, const Interval& shift) {
  if (auto v = logscale_materialize(base)) return logscale_from_interval(iv_add(*v, shift));
  mpfr_prec_t p = prec_of(base.mantissa);
  BigFloat bound(p);
  // |shift| * 2 * exp(-1e18): crude but certified, since value(base) >= exp(1e18).
  Interval a = iv_abs(shift);
  mpfr_set_d(bound.raw(), -1e18, MPFR_RNDU);
  mpfr_exp(bound.raw(), bound.raw(), MPFR_RNDU);
  mpfr_mul(bound.raw(), bound.raw(), a.hi.raw(), MPFR_RNDU);
  mpfr_mul_si(bound.raw(), bound.raw(), 2, MPFR_RNDU);
  Interval delta{BigFloat(p), BigFloat(p)};
  mpfr_neg(delta.lo.raw(), bound.raw(), MPFR_RNDD);
  mpfr_set(delta.hi.raw(), bound.raw(), MPFR_RNDU);
  return logscale_exp(logscale_add_small(logscale_log(base), delta));
}

}  // namespace

LogScale logscale_pow_ratio(const LogScale& x, const Int& num, const Int& den) {
  if (num < 1 || den < 1) throw DomainError("logscale: power exponent must be positive");
  mpfr_prec_t p = prec_of(x.mantissa);
  if (x.height == 0) {
    if (mpfr_sgn(x.mantissa.lo.raw()) <= 0)
      throw DomainError("logscale: power of a non-positive value");
    Interval w = iv_mul_ratio(iv_log(x.mantissa), num, den);
    return logscale_from_interval(iv_exp(w));
  }
  // ln(x^r) = r * exp^(height-1)(mantissa).
  LogScale lnx{x.height - 1, x.mantissa};
  if (auto v = logscale_materialize(lnx))
    return logscale_exp(logscale_from_interval(iv_mul_ratio(*v, num, den)));
  // Too big: x^r = exp^2(ln ln x + ln r).
  Interval lnr = iv_log(iv_from_ratio(num, den, p));
  return logscale_exp(logscale_exp(logscale_add_small(logscale_log(lnx), lnr)));
}

std::optional<int> logscale_compare(const LogScale& a, const LogScale& b) {
  if (a.height != b.height) return a.height < b.height ? -1 : 1;
  return iv_compare(a.mantissa, b.mantissa);
}

std::string logscale_render(const LogScale& x, std::size_t digits) {
  if (x.height == 0) return iv_str(x.mantissa, digits);
  return "exp^" + std::to_string(x.height) + "(" + iv_str(x.mantissa, digits) + ")";
}

}  // namespace hallkit
