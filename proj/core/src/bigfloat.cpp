#include "hallkit/bigfloat.hpp"

#include <gmp.h>

#include <cstring>
#include <memory>
#include <vector>

#include "hallkit/errors.hpp"

namespace hallkit {

namespace {

// The stock exponent window (|exponent| < 2^30) overflows long before the
// iterated-exponential guards kick in; widen it to the platform maximum once
// per thread.  With the full range, exp stays finite up to ~3e18.
void ensure_exponent_range() {
  static thread_local const bool done = [] {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
    return true;
  }();
  (void)done;
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  ensure_exponent_range();
  mpfr_init2(x_, prec);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_swap(x_, o.x_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(x_, o.x_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(x_); }

mpfr_prec_t BigFloat::precision() const { return mpfr_get_prec(x_); }

BigFloat BigFloat::from_int(const Int& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat out(prec);
  const std::string s = v.str();
  if (mpfr_set_str(out.x_, s.c_str(), 10, rnd) != 0 && !mpfr_number_p(out.x_))
    throw DomainError("bigfloat: cannot parse integer " + s);
  return out;
}

BigFloat BigFloat::from_double(double v, mpfr_prec_t prec) {
  BigFloat out(prec);
  mpfr_set_d(out.x_, v, MPFR_RNDN);
  return out;
}

double BigFloat::to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

namespace {

Int mpfr_to_int(mpfr_srcptr x, mpfr_rnd_t rnd) {
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, x, rnd);
  char* s = mpz_get_str(nullptr, 10, z);
  Int out(s);
  void (*freefn)(void*, std::size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, std::strlen(s) + 1);
  mpz_clear(z);
  return out;
}

}  // namespace

Int BigFloat::ceil_int() const {
  if (!mpfr_number_p(x_)) throw DomainError("bigfloat: ceiling of a non-finite value");
  return mpfr_to_int(x_, MPFR_RNDU);
}

Int BigFloat::floor_int() const {
  if (!mpfr_number_p(x_)) throw DomainError("bigfloat: floor of a non-finite value");
  return mpfr_to_int(x_, MPFR_RNDD);
}

int BigFloat::cmp(const BigFloat& o) const { return mpfr_cmp(x_, o.x_); }

int BigFloat::cmp_int(long v) const { return mpfr_cmp_si(x_, v); }

bool BigFloat::is_finite() const { return mpfr_number_p(x_) != 0; }

std::string BigFloat::str(std::size_t digits) const {
  std::vector<char> buf(digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), x_);
  return std::string(buf.data());
}

namespace {

mpfr_prec_t prec_of(const Interval& a) { return mpfr_get_prec(a.lo.raw()); }

void check_ordered(const Interval& a, const char* what) {
  if (!a.lo.is_finite() || !a.hi.is_finite() || mpfr_cmp(a.lo.raw(), a.hi.raw()) > 0)
    throw DomainError(std::string("interval: ") + what + " produced an invalid range");
}

}  // namespace

Interval iv_from_int(const Int& v, mpfr_prec_t prec) {
  Interval out{BigFloat::from_int(v, prec, MPFR_RNDD), BigFloat::from_int(v, prec, MPFR_RNDU)};
  check_ordered(out, "from_int");
  return out;
}

Interval iv_from_ratio(const Int& num, const Int& den, mpfr_prec_t prec) {
  if (den == 0) throw DomainError("interval: zero denominator");
  Interval n = iv_from_int(num, prec), d = iv_from_int(den, prec);
  if (den < 0) {
    n = iv_neg(n);
    d = iv_neg(d);
  }
  Interval out{BigFloat(prec), BigFloat(prec)};
  mpfr_div(out.lo.raw(), n.lo.raw(), d.hi.raw(), MPFR_RNDD);
  mpfr_div(out.hi.raw(), n.hi.raw(), d.lo.raw(), MPFR_RNDU);
  check_ordered(out, "from_ratio");
  return out;
}

Interval iv_from_double(double v, mpfr_prec_t prec) {
  Interval out{BigFloat::from_double(v, prec), BigFloat::from_double(v, prec)};
  return out;
}

Interval iv_add(const Interval& a, const Interval& b) {
  mpfr_prec_t p = prec_of(a);
  Interval out{BigFloat(p), BigFloat(p)};
  mpfr_add(out.lo.raw(), a.lo.raw(), b.lo.raw(), MPFR_RNDD);
  mpfr_add(out.hi.raw(), a.hi.raw(), b.hi.raw(), MPFR_RNDU);
  check_ordered(out, "add");
  return out;
}

Interval iv_sub(const Interval& a, const Interval& b) {
  mpfr_prec_t p = prec_of(a);
  Interval out{BigFloat(p), BigFloat(p)};
  mpfr_sub(out.lo.raw(), a.lo.raw(), b.hi.raw(), MPFR_RNDD);
  mpfr_sub(out.hi.raw(), a.hi.raw(), b.lo.raw(), MPFR_RNDU);
  check_ordered(out, "sub");
  return out;
}

Interval iv_mul(const Interval& a, const Interval& b) {
  mpfr_prec_t p = prec_of(a);
  // Outward hull over the four endpoint products.
  BigFloat cand(p);
  Interval out{BigFloat(p), BigFloat(p)};
  mpfr_set_inf(out.lo.raw(), +1);
  mpfr_set_inf(out.hi.raw(), -1);
  const BigFloat* as[2] = {&a.lo, &a.hi};
  const BigFloat* bs[2] = {&b.lo, &b.hi};
  for (const BigFloat* av : as)
    for (const BigFloat* bv : bs) {
      mpfr_mul(cand.raw(), av->raw(), bv->raw(), MPFR_RNDD);
      if (mpfr_cmp(cand.raw(), out.lo.raw()) < 0) mpfr_set(out.lo.raw(), cand.raw(), MPFR_RNDD);
      mpfr_mul(cand.raw(), av->raw(), bv->raw(), MPFR_RNDU);
      if (mpfr_cmp(cand.raw(), out.hi.raw()) > 0) mpfr_set(out.hi.raw(), cand.raw(), MPFR_RNDU);
    }
  check_ordered(out, "mul");
  return out;
}

Interval iv_neg(const Interval& a) {
  mpfr_prec_t p = prec_of(a);
  Interval out{BigFloat(p), BigFloat(p)};
  mpfr_neg(out.lo.raw(), a.hi.raw(), MPFR_RNDD);
  mpfr_neg(out.hi.raw(), a.lo.raw(), MPFR_RNDU);
  return out;
}

Interval iv_exp(const Interval& a) {
  mpfr_prec_t p = prec_of(a);
  Interval out{BigFloat(p), BigFloat(p)};
  mpfr_exp(out.lo.raw(), a.lo.raw(), MPFR_RNDD);
  mpfr_exp(out.hi.raw(), a.hi.raw(), MPFR_RNDU);
  check_ordered(out, "exp");
  return out;
}

Interval iv_log(const Interval& a) {
  if (mpfr_sgn(a.lo.raw()) <= 0) throw DomainError("interval: log of a non-positive range");
  mpfr_prec_t p = prec_of(a);
  Interval out{BigFloat(p), BigFloat(p)};
  mpfr_log(out.lo.raw(), a.lo.raw(), MPFR_RNDD);
  mpfr_log(out.hi.raw(), a.hi.raw(), MPFR_RNDU);
  check_ordered(out, "log");
  return out;
}

Interval iv_pow_int(const Interval& a, long k) {
  if (k < 0) throw DomainError("interval: negative power");
  if (mpfr_sgn(a.lo.raw()) < 0) throw DomainError("interval: power of a range below zero");
  mpfr_prec_t p = prec_of(a);
  Interval out{BigFloat(p), BigFloat(p)};
  mpfr_pow_si(out.lo.raw(), a.lo.raw(), k, MPFR_RNDD);
  mpfr_pow_si(out.hi.raw(), a.hi.raw(), k, MPFR_RNDU);
  check_ordered(out, "pow_int");
  return out;
}

Interval iv_mul_ratio(const Interval& a, const Int& num, const Int& den) {
  return iv_mul(a, iv_from_ratio(num, den, prec_of(a)));
}

Interval iv_abs(const Interval& a) {
  mpfr_prec_t p = prec_of(a);
  if (mpfr_sgn(a.lo.raw()) >= 0) return a;
  if (mpfr_sgn(a.hi.raw()) <= 0) return iv_neg(a);
  Interval out{BigFloat(p), BigFloat(p)};
  mpfr_set_zero(out.lo.raw(), +1);
  BigFloat na(p);
  mpfr_neg(na.raw(), a.lo.raw(), MPFR_RNDU);
  if (mpfr_cmp(na.raw(), a.hi.raw()) > 0)
    mpfr_set(out.hi.raw(), na.raw(), MPFR_RNDU);
  else
    mpfr_set(out.hi.raw(), a.hi.raw(), MPFR_RNDU);
  return out;
}

Interval iv_hull(const Interval& a, const Interval& b) {
  Interval out = a;
  if (mpfr_cmp(b.lo.raw(), out.lo.raw()) < 0) out.lo = b.lo;
  if (mpfr_cmp(b.hi.raw(), out.hi.raw()) > 0) out.hi = b.hi;
  return out;
}

std::optional<int> iv_compare(const Interval& a, const Interval& b) {
  if (mpfr_cmp(a.hi.raw(), b.lo.raw()) < 0) return -1;
  if (mpfr_cmp(a.lo.raw(), b.hi.raw()) > 0) return 1;
  return std::nullopt;
}

std::optional<int> iv_compare_int(const Interval& a, const Int& v) {
  return iv_compare(a, iv_from_int(v, prec_of(a)));
}

bool iv_contains(const Interval& a, const Int& v) {
  Interval w = iv_from_int(v, prec_of(a));
  return mpfr_cmp(a.lo.raw(), w.hi.raw()) <= 0 && mpfr_cmp(a.hi.raw(), w.lo.raw()) >= 0;
}

std::optional<Int> iv_ceil(const Interval& a) {
  Int clo = a.lo.ceil_int(), chi = a.hi.ceil_int();
  if (clo == chi) return clo;
  return std::nullopt;
}

Interval iv_widen(const Interval& a, const BigFloat& eps) {
  mpfr_prec_t p = prec_of(a);
  Interval out{BigFloat(p), BigFloat(p)};
  mpfr_sub(out.lo.raw(), a.lo.raw(), eps.raw(), MPFR_RNDD);
  mpfr_add(out.hi.raw(), a.hi.raw(), eps.raw(), MPFR_RNDU);
  return out;
}

std::string iv_str(const Interval& a, std::size_t digits) {
  return "[" + a.lo.str(digits) + ", " + a.hi.str(digits) + "]";
}

}  // namespace hallkit
