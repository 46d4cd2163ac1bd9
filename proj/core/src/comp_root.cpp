#include "hallkit/comp_root.hpp"

#include <gmp.h>

#include <utility>

#include "hallkit/errors.hpp"

namespace hallkit {

namespace {

// mpq view of an exact rational, for the mpfr *_q entry points.
struct MPQ {
  mpq_t q;
  explicit MPQ(const Rational& r) {
    mpq_init(q);
    if (mpq_set_str(q, r.str().c_str(), 10) != 0)
      throw DomainError("comp root: unreadable rational cut");
    mpq_canonicalize(q);
  }
  ~MPQ() { mpq_clear(q); }
  MPQ(const MPQ&) = delete;
  MPQ& operator=(const MPQ&) = delete;
};

void validate(const CompRoot& r) {
  if (r.order < 2) throw DomainError("comp root: order must be at least 2");
  if (r.cuts.size() != static_cast<std::size_t>(r.order) + 1)
    throw DomainError("comp root: expected order + 1 cuts");
  if (r.cuts.front() != 0 || r.cuts.back() != 1)
    throw DomainError("comp root: cuts must run from 0 to 1");
  for (std::size_t i = 0; i + 1 < r.cuts.size(); ++i)
    if (!(r.cuts[i] < r.cuts[i + 1]))
      throw DomainError("comp root: cuts must increase strictly");
}

// One endpoint of the base map f0 on [0, 1).  Every leg has positive slope,
// so a single rounding direction propagates to a certified bound.  The top
// leg reports its result as the exponent, with delta_height = 1; the caller
// owes one exp.
BigFloat eval_f0(const CompRoot& r, const BigFloat& b, mpfr_rnd_t rnd, int& delta_height) {
  Index n = r.order;
  Index seg = 0;
  for (Index i = n - 1; i >= 1; --i) {
    MPQ ci(r.cuts[static_cast<std::size_t>(i)]);
    if (mpfr_cmp_q(b.raw(), ci.q) >= 0) {
      seg = i;
      break;
    }
  }
  std::size_t s = static_cast<std::size_t>(seg);
  Rational slope, intercept, anchor = r.cuts[s];
  if (seg <= n - 2) {
    delta_height = 0;
    slope = (r.cuts[s + 2] - r.cuts[s + 1]) / (r.cuts[s + 1] - r.cuts[s]);
    intercept = r.cuts[s + 1];
  } else {
    delta_height = 1;
    slope = (r.cuts[1] - r.cuts[0]) / (r.cuts[s + 1] - r.cuts[s]);
    intercept = r.cuts[0];
  }
  MPQ qa(anchor), qs(slope), qi(intercept);
  BigFloat out(b.precision());
  mpfr_sub_q(out.raw(), b.raw(), qa.q, rnd);
  mpfr_mul_q(out.raw(), out.raw(), qs.q, rnd);
  mpfr_add_q(out.raw(), out.raw(), qi.q, rnd);
  return out;
}

// Full numeric evaluation of one endpoint: descend by log into [0, 1),
// apply f0, re-ascend.  Monotone steps throughout, so the direction is
// preserved and the two-endpoint caller gets a certified interval.
BigFloat eval_endpoint(const CompRoot& r, BigFloat b, mpfr_rnd_t rnd) {
  if (!b.is_finite()) throw DomainError("froot: non-finite input");
  Index k = 0;
  while (mpfr_cmp_si(b.raw(), 1) >= 0) {
    mpfr_log(b.raw(), b.raw(), rnd);
    if (++k > 64) throw DomainError("froot: tower too high");
  }
  int delta = 0;
  BigFloat v = eval_f0(r, b, rnd, delta);
  for (Index i = 0; i < k + delta; ++i) mpfr_exp(v.raw(), v.raw(), rnd);
  return v;
}

}  // namespace

CompRoot make_comp_root(Index order) {
  CompRoot r;
  r.order = order;
  if (order < 2) throw DomainError("comp root: order must be at least 2");
  for (Index i = 0; i <= order; ++i) r.cuts.push_back(Rational(i, order));
  validate(r);
  return r;
}

CompRoot make_comp_root(Index order, const std::vector<Rational>& interior_cuts) {
  CompRoot r;
  r.order = order;
  if (order < 2) throw DomainError("comp root: order must be at least 2");
  if (interior_cuts.size() != static_cast<std::size_t>(order) - 1)
    throw DomainError("comp root: expected order - 1 interior cuts");
  r.cuts.push_back(Rational(0));
  for (const auto& c : interior_cuts) r.cuts.push_back(c);
  r.cuts.push_back(Rational(1));
  validate(r);
  return r;
}

Interval froot_eval(const CompRoot& r, const Interval& x) {
  validate(r);
  if (mpfr_sgn(x.lo.raw()) < 0) throw DomainError("froot: defined on [0, infinity)");
  return Interval{eval_endpoint(r, x.lo, MPFR_RNDD), eval_endpoint(r, x.hi, MPFR_RNDU)};
}

Interval froot_iterate(const CompRoot& r, const Interval& x, Index times) {
  if (times < 0) throw DomainError("froot: iteration count must be nonnegative");
  Interval v = x;
  for (Index i = 0; i < times; ++i) v = froot_eval(r, v);
  return v;
}

LogScale froot_eval_logscale(const CompRoot& r, const LogScale& x) {
  validate(r);
  if (mpfr_sgn(x.mantissa.lo.raw()) < 0) {
    if (x.height == 0) throw DomainError("froot: defined on [0, infinity)");
    throw DomainError("froot: mantissa below the canonical band");
  }
  if (mpfr_cmp_si(x.mantissa.hi.raw(), 1) >= 0)
    throw DomainError("froot: mantissa above the canonical band");
  int dlo = 0, dhi = 0;
  BigFloat vlo = eval_f0(r, x.mantissa.lo, MPFR_RNDD, dlo);
  BigFloat vhi = eval_f0(r, x.mantissa.hi, MPFR_RNDU, dhi);
  if (dlo != dhi)
    throw DomainError(
        "froot: the mantissa interval straddles the top breakpoint; raise the working precision");
  return LogScale{x.height + dlo, Interval{std::move(vlo), std::move(vhi)}};
}

LogScale froot_iterate_logscale(const CompRoot& r, const LogScale& x, Index times) {
  if (times < 0) throw DomainError("froot: iteration count must be nonnegative");
  LogScale v = x;
  for (Index i = 0; i < times; ++i) v = froot_eval_logscale(r, v);
  return v;
}

}  // namespace hallkit
