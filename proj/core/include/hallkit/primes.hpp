#pragma once
#include <vector>

#include "hallkit/int_types.hpp"

namespace hallkit {

// Miller-Rabin with the 13-base set {2,...,41}: deterministic below
// 3317044064679887385961981, a strong probable-prime test beyond.
struct PrimalityCheck {
  bool prime = false;
  bool deterministic = true;
};
PrimalityCheck check_prime(const Int& x);
bool is_prime(const Int& x);

// p_0 = 2, p_1 = 3, ...
Int nth_prime(Index n);
// Least prime strictly greater than x.
Int next_prime(const Int& x);
// Product of all primes <= x (empty product = 1).
Int primorial_up_to(Index x);

// Least prime p with p not dividing x; pre x != 0 (x = +-1 gives 2).
Int find_small_prime_not_dividing(const Int& x);

// Distinct prime factors, ascending.  Trial division by primes up to
// trial_bound, then Miller-Rabin on the remainder; DomainError if a composite
// remainder survives.
std::vector<Int> prime_factors(const Int& x, Index trial_bound = 1 << 20);

Int powmod(const Int& base, const Int& exp, const Int& mod);

// Order of a in (Z/p)^*; pre p prime, a not divisible by p.
Int multiplicative_order(const Int& a, const Int& p);

}
