#pragma once
#include <mpfr.h>

#include <optional>
#include <string>

#include "hallkit/int_types.hpp"

namespace hallkit {

// RAII wrapper over a single mpfr number.  Every arithmetic step goes through
// the Interval layer below with explicit directed rounding; BigFloat itself
// only owns storage and conversions.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }
  mpfr_prec_t precision() const;

  static BigFloat from_int(const Int& v, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static BigFloat from_double(double v, mpfr_prec_t prec);

  double to_double() const;
  // Integer ceiling / floor as exact big integers.
  Int ceil_int() const;
  Int floor_int() const;
  int cmp(const BigFloat& o) const;
  int cmp_int(long v) const;
  bool is_finite() const;
  std::string str(std::size_t digits = 20) const;

 private:
  mpfr_t x_;
};

// Closed interval [lo, hi] with outward rounding on every operation: the true
// real result of the modeled expression always lies inside.  Comparisons are
// only decided when the intervals separate.
struct Interval {
  BigFloat lo, hi;
};

Interval iv_from_int(const Int& v, mpfr_prec_t prec);
Interval iv_from_ratio(const Int& num, const Int& den, mpfr_prec_t prec);
Interval iv_from_double(double v, mpfr_prec_t prec);

Interval iv_add(const Interval& a, const Interval& b);
Interval iv_sub(const Interval& a, const Interval& b);
Interval iv_mul(const Interval& a, const Interval& b);
Interval iv_neg(const Interval& a);
Interval iv_exp(const Interval& a);
Interval iv_log(const Interval& a);  // pre a.lo > 0
Interval iv_pow_int(const Interval& a, long k);  // pre a.lo >= 0, k >= 0
Interval iv_mul_ratio(const Interval& a, const Int& num, const Int& den);
Interval iv_abs(const Interval& a);
Interval iv_hull(const Interval& a, const Interval& b);

// -1 (a < b), +1 (a > b), nullopt when the intervals overlap.
std::optional<int> iv_compare(const Interval& a, const Interval& b);
std::optional<int> iv_compare_int(const Interval& a, const Int& v);
bool iv_contains(const Interval& a, const Int& v);
// The common integer ceiling of both endpoints, when they agree.
std::optional<Int> iv_ceil(const Interval& a);
Interval iv_widen(const Interval& a, const BigFloat& eps);

std::string iv_str(const Interval& a, std::size_t digits = 20);

}  // namespace hallkit
