#include "hallkit/primes.hpp"

#include <algorithm>
#include <mutex>

namespace hallkit {

namespace {

std::mutex g_sieve_mu;
std::vector<std::uint64_t> g_primes = {2, 3, 5, 7, 11, 13};

// Extends the cached prime list to at least `count` primes, or until the last
// prime reaches `up_to` (either bound may be 0 to ignore).  Caller holds the
// lock.  Trial division by cached primes suffices: the list always contains
// every prime up to its last entry.
void extend_locked(std::size_t count, std::uint64_t up_to) {
  std::uint64_t cand = g_primes.back();
  while ((count != 0 && g_primes.size() < count) || (up_to != 0 && g_primes.back() < up_to)) {
    cand += 2;
    bool composite = false;
    for (std::uint64_t p : g_primes) {
      if (p * p > cand) break;
      if (cand % p == 0) {
        composite = true;
        break;
      }
    }
    if (!composite) g_primes.push_back(cand);
  }
}

const char* kDeterministicBoundStr = "3317044064679887385961981";
const int kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const Int& n) {
  Int d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (int b : kMrBases) {
    if (n == b) return true;
    Int x = powmod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace

PrimalityCheck check_prime(const Int& x) {
  static const Int kDeterministicBound(kDeterministicBoundStr);
  PrimalityCheck r;
  r.deterministic = x < kDeterministicBound;
  if (x < 2) {
    r.prime = false;
    r.deterministic = true;
    return r;
  }
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    if (x == p) return {true, true};
    if (x % p == 0) return {false, true};
  }
  r.prime = miller_rabin(x);
  return r;
}

bool is_prime(const Int& x) { return check_prime(x).prime; }

Int nth_prime(Index n) {
  if (n < 0) throw DomainError("prime index must be nonnegative");
  std::lock_guard<std::mutex> lk(g_sieve_mu);
  extend_locked(static_cast<std::size_t>(n) + 1, 0);
  return Int(g_primes[static_cast<std::size_t>(n)]);
}

Int next_prime(const Int& x) {
  if (x < 2) return Int(2);
  Int c = x + 1;
  if (c % 2 == 0) {
    if (c == 2) return c;
    ++c;
  }
  while (!is_prime(c)) c += 2;
  return c;
}

Int primorial_up_to(Index x) {
  if (x < 2) return Int(1);
  Int r = 1;
  std::lock_guard<std::mutex> lk(g_sieve_mu);
  extend_locked(0, static_cast<std::uint64_t>(x));
  for (std::uint64_t p : g_primes) {
    if (p > static_cast<std::uint64_t>(x)) break;
    r *= p;
  }
  return r;
}

Int find_small_prime_not_dividing(const Int& x) {
  if (x == 0) throw DomainError("find_small_prime_not_dividing needs x != 0");
  for (Index k = 0;; ++k) {
    Int p = nth_prime(k);
    if (x % p != 0) return p;
  }
}

std::vector<Int> prime_factors(const Int& x, Index trial_bound) {
  Int n = abs_int(x);
  if (n < 2) throw DomainError("prime_factors needs |x| >= 2");
  std::vector<Int> out;
  for (Index k = 0;; ++k) {
    Int p = nth_prime(k);
    if (p > trial_bound || p * p > n) break;
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) {
    PrimalityCheck c = check_prime(n);
    if (!c.prime)
      throw DomainError("prime_factors: composite remainder " + n.str() +
                        " beyond trial bound");
    out.push_back(n);
  }
  return out;
}

Int powmod(const Int& base, const Int& exp, const Int& mod) {
  if (mod <= 0) throw DomainError("powmod needs a positive modulus");
  if (exp < 0) throw DomainError("powmod needs a nonnegative exponent");
  return boost::multiprecision::powm(floor_mod_int(base, mod), exp, mod);
}

Int multiplicative_order(const Int& a, const Int& p) {
  if (!is_prime(p)) throw DomainError("multiplicative_order needs a prime modulus");
  Int b = floor_mod_int(a, p);
  if (b == 0) throw DomainError("multiplicative_order of zero residue");
  Int order = p - 1;
  for (const Int& f : prime_factors(p - 1)) {
    while (order % f == 0 && powmod(b, order / f, p) == 1) order /= f;
  }
  return order;
}

}
