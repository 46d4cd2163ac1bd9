#include <mpfr.h>

#include "doctest.h"
#include "hallkit/bigfloat.hpp"
#include "hallkit/errors.hpp"

using namespace hallkit;

TEST_CASE("integer round trips and directed conversions") {
  Int big("123456789012345678901234567890");
  BigFloat d = BigFloat::from_int(big, 64, MPFR_RNDD);
  BigFloat u = BigFloat::from_int(big, 64, MPFR_RNDU);
  CHECK(d.cmp(u) <= 0);  // 64 bits cannot hold 30 digits, so the endpoints split
  CHECK(d.cmp(u) < 0);
  BigFloat exact = BigFloat::from_int(big, 128, MPFR_RNDD);
  CHECK(exact.floor_int() == big);
  CHECK(exact.ceil_int() == big);

  BigFloat half = BigFloat::from_double(2.5, 64);
  CHECK(half.floor_int() == 2);
  CHECK(half.ceil_int() == 3);
  BigFloat neg = BigFloat::from_double(-2.5, 64);
  CHECK(neg.floor_int() == -3);
  CHECK(neg.ceil_int() == -2);
}

TEST_CASE("interval arithmetic keeps the true value inside") {
  mpfr_prec_t p = 96;
  Interval third = iv_from_ratio(1, 3, p);
  CHECK(third.lo.cmp(third.hi) < 0);  // 1/3 is not a binary float
  Interval three = iv_mul(third, iv_from_int(3, p));
  CHECK(iv_contains(three, 1));

  Interval x = iv_from_int(2, p);
  Interval lg = iv_log(x);
  Interval back = iv_exp(lg);
  CHECK(iv_contains(back, 2));
  CHECK(back.lo.cmp_int(2) <= 0);
  CHECK(back.hi.cmp_int(2) >= 0);

  //  log is only defined on positive ranges
  Interval bad{BigFloat::from_double(-1.0, p), BigFloat::from_double(2.0, p)};
  CHECK_THROWS_AS(iv_log(bad), DomainError);

  Interval sq = iv_pow_int(iv_from_ratio(3, 2, p), 2);
  Interval scaled = iv_mul_ratio(sq, 4, 9);  // (3/2)^2 * 4/9 = 1
  CHECK(iv_contains(scaled, 1));

  Interval diff = iv_sub(iv_from_int(5, p), iv_from_ratio(7, 2, p));  // 3/2
  CHECK(iv_compare_int(diff, 1) == 1);
  CHECK(iv_compare_int(diff, 2) == -1);
  CHECK(!iv_contains(diff, Int(1)));
}

TEST_CASE("interval comparisons decide only on separation") {
  mpfr_prec_t p = 96;
  Interval a = iv_from_ratio(1, 3, p);
  Interval b = iv_from_ratio(2, 3, p);
  auto c = iv_compare(a, b);
  REQUIRE(c.has_value());
  CHECK(*c == -1);
  CHECK(iv_compare(b, a) == 1);
  CHECK(!iv_compare(a, a).has_value());

  CHECK(iv_compare_int(b, 1) == -1);
  CHECK(iv_compare_int(b, 0) == 1);
  Interval one = iv_from_int(1, p);
  CHECK(!iv_compare_int(one, 1).has_value());  // touching, not separated
}

TEST_CASE("interval ceilings") {
  mpfr_prec_t p = 128;
  Interval v = iv_from_ratio(7, 2, p);
  auto c = iv_ceil(v);
  REQUIRE(c.has_value());
  CHECK(*c == 4);
  // A range straddling an integer has no common ceiling.
  Interval wide{BigFloat::from_double(2.9, p), BigFloat::from_double(3.1, p)};
  CHECK(!iv_ceil(wide).has_value());
  // Widening by a visible epsilon undoes a decision.
  Interval w = iv_widen(v, BigFloat::from_double(1.0, p));
  CHECK(!iv_ceil(w).has_value());
  CHECK(iv_compare_int(w, 10) == -1);
}

TEST_CASE("directed exponentials bracket known values") {
  mpfr_prec_t p = 256;
  // e^30 = 10686474581524.46..., between the integer neighbors below.
  Interval e30 = iv_exp(iv_from_int(30, p));
  CHECK(iv_compare_int(e30, Int("10686474581524")) == 1);
  CHECK(iv_compare_int(e30, Int("10686474581525")) == -1);
  auto ceil30 = iv_ceil(e30);
  REQUIRE(ceil30.has_value());
  CHECK(*ceil30 == Int("10686474581525"));

  Interval ln30 = iv_log(iv_from_int(30, p));
  Interval undone = iv_exp(ln30);
  CHECK(iv_contains(undone, 30));
  Interval hullv = iv_hull(e30, iv_from_int(2, p));
  CHECK(iv_contains(hullv, 2));
  CHECK(iv_contains(hullv, Int("10686474581524")));
}
