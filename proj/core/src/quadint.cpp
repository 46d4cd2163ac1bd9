#include "hallkit/quadint.hpp"

#include "hallkit/errors.hpp"
#include "hallkit/primes.hpp"

namespace hallkit {

QuadInt quad_add(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.b + y.b}; }

QuadInt quad_neg(const QuadInt& x) { return {-x.a, -x.b}; }

QuadInt quad_mul(const QuadInt& x, const QuadInt& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadInt quad_pow(const QuadInt& x, const Int& e) {
  if (e < 0) throw DomainError("quad_pow needs e >= 0");
  QuadInt acc(1, 0);
  QuadInt base = x;
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) acc = quad_mul(acc, base);
    base = quad_mul(base, base);
    k >>= 1;
  }
  return acc;
}

QuadInt galois_conj(const QuadInt& x) { return {x.a, -x.b}; }

Int field_norm(const QuadInt& x) { return x.a * x.a - 2 * x.b * x.b; }

QuadInt unit_pow(const Int& k) {
  // u = 1 + sqrt(2), u^-1 = -1 + sqrt(2).
  QuadInt base = k >= 0 ? QuadInt(1, 1) : QuadInt(-1, 1);
  return quad_pow(base, abs_int(k));
}

std::string quad_render(const QuadInt& x) {
  if (x.b == 0) return x.a.str();
  std::string s;
  if (x.a != 0) {
    s += x.a.str();
    s += x.b > 0 ? " + " : " - ";
  } else if (x.b < 0) {
    s += "-";
  }
  Int ab = abs_int(x.b);
  if (ab != 1) {
    s += ab.str();
    s += "*";
  }
  s += "sqrt2";
  return s;
}

bool is_split_prime(const Int& p) {
  if (p < 3 || !is_prime(p)) return false;
  Int r = p % 8;
  return r == 1 || r == 7;
}

std::optional<Int> sqrt2_mod(const Int& p) {
  if (p < 3 || !is_prime(p)) throw DomainError("sqrt2_mod needs an odd prime");
  const Int two(2);
  if (powmod(two, (p - 1) / 2, p) != 1) return std::nullopt;
  Int root;
  if (p % 4 == 3) {
    root = powmod(two, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks; the non-residue scan is deterministic.
    Int q = p - 1;
    Int s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    Int z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    Int m = s;
    Int c = powmod(z, q, p);
    Int t = powmod(two, q, p);
    root = powmod(two, (q + 1) / 2, p);
    while (t != 1) {
      Int i = 0;
      Int t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        ++i;
      }
      Int b = c;
      for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      root = root * b % p;
    }
  }
  Int other = p - root;
  return root < other ? root : other;
}

Int residue(const QuadInt& x, const SplitPrimeWitness& w) {
  if (w.p < 3 || w.s < 1 || w.s >= w.p || (w.s * w.s - 2) % w.p != 0)
    throw DomainError("malformed split-prime witness");
  return floor_mod_int(x.a + x.b * w.s, w.p);
}

SplitPrimeWitness find_split_prime_avoiding(const QuadInt& x, const Int& start) {
  if (x.is_zero()) throw DomainError("find_split_prime_avoiding needs x != 0");
  Int p = start < 2 ? Int(2) : start;
  if (!is_prime(p)) p = next_prime(p);
  for (;; p = next_prime(p)) {
    if (!is_split_prime(p)) continue;
    auto s = sqrt2_mod(p);
    SplitPrimeWitness w{p, *s};
    if (residue(x, w) != 0) return w;
  }
}

}  // namespace hallkit
