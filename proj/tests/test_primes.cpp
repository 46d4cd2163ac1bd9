#include "doctest.h"
#include "hallkit/primes.hpp"

using namespace hallkit;

TEST_CASE("primality basics") {
  CHECK(!is_prime(-7));
  CHECK(!is_prime(0));
  CHECK(!is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(!is_prime(561));  // Carmichael
  CHECK(!is_prime(Int("340561")));
  CHECK(is_prime(Int("2305843009213693951")));  // 2^61 - 1
  CHECK(!is_prime(Int("2305843009213693953")));
  PrimalityCheck small = check_prime(97);
  CHECK(small.prime);
  CHECK(small.deterministic);
  PrimalityCheck huge = check_prime(Int("1000000000000000000000000000057"));
  CHECK(!huge.deterministic);
}

TEST_CASE("prime enumeration") {
  CHECK(nth_prime(0) == 2);
  CHECK(nth_prime(4) == 11);
  CHECK(nth_prime(24) == 97);
  CHECK(next_prime(30) == 31);
  CHECK(next_prime(31) == 37);
  CHECK(next_prime(1) == 2);
  CHECK(primorial_up_to(1) == 1);
  CHECK(primorial_up_to(2) == 2);
  CHECK(primorial_up_to(37) == Int("7420738134810"));
  // Independent recomputation of the same primorial.
  Int prod = 1;
  for (Index k = 0; nth_prime(k) <= 37; ++k) prod *= nth_prime(k);
  CHECK(primorial_up_to(37) == prod);
}

TEST_CASE("smallest prime avoiding a divisor set") {
  CHECK(find_small_prime_not_dividing(30) == 7);
  CHECK(find_small_prime_not_dividing(-4) == 3);
  CHECK(find_small_prime_not_dividing(9) == 2);
  CHECK(find_small_prime_not_dividing(1) == 2);
  CHECK(find_small_prime_not_dividing(-1) == 2);
  CHECK(find_small_prime_not_dividing(Int(1) << 20) == 3);
  CHECK_THROWS_AS(find_small_prime_not_dividing(0), DomainError);
}

TEST_CASE("factoring and orders") {
  auto f = prime_factors(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == 2);
  CHECK(f[1] == 3);
  CHECK(f[2] == 5);
  CHECK(prime_factors(-97).size() == 1);
  CHECK(powmod(3, 6, 7) == 1);
  CHECK(powmod(-1, 3, 7) == 6);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(1, 7) == 1);
  CHECK(multiplicative_order(6, 7) == 2);
  CHECK_THROWS_AS(multiplicative_order(7, 7), DomainError);
  CHECK_THROWS_AS(multiplicative_order(2, 8), DomainError);
  // order divides p-1 on a sample
  for (int a = 1; a < 23; ++a) CHECK(Int(22) % multiplicative_order(a, 23) == 0);
}
