#pragma once
#include <optional>
#include <string>

#include "hallkit/int_types.hpp"

namespace hallkit {

// Exact arithmetic in Z[sqrt(2)] plus just enough ideal theory for residue
// maps at primes of prime norm: split primes p (2 a square mod p), a chosen
// square root s of 2, and the substitution a + b sqrt(2) -> a + b s mod p.

struct QuadInt {
  Int a;  // rational part
  Int b;  // coefficient of sqrt(2)

  QuadInt() : a(0), b(0) {}
  QuadInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const QuadInt& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QuadInt& o) const { return !(*this == o); }
};

QuadInt quad_add(const QuadInt& x, const QuadInt& y);
QuadInt quad_neg(const QuadInt& x);
QuadInt quad_mul(const QuadInt& x, const QuadInt& y);
// pre e >= 0.
QuadInt quad_pow(const QuadInt& x, const Int& e);
// a - b sqrt(2)
QuadInt galois_conj(const QuadInt& x);
// a^2 - 2 b^2; multiplicative, and equal to x * galois_conj(x).
Int field_norm(const QuadInt& x);

// k-th power of the fundamental unit u = 1 + sqrt(2); k may be negative
// (u^-1 = -1 + sqrt(2)).
QuadInt unit_pow(const Int& k);

std::string quad_render(const QuadInt& x);

// An odd prime p with a chosen root s of s^2 = 2 mod p.  Defines the ring
// homomorphism Z[sqrt(2)] -> Z/pZ, a + b sqrt(2) -> a + b s, i.e. reduction
// at a prime ideal of norm p.
struct SplitPrimeWitness {
  Int p;
  Int s;
};

// Odd prime with 2 a quadratic residue; equivalently p = +-1 mod 8.
bool is_split_prime(const Int& p);

// The smaller of the two square roots of 2 mod p (deterministic
// Tonelli-Shanks); nullopt when 2 is not a square.  pre: p an odd prime.
std::optional<Int> sqrt2_mod(const Int& p);

// Value of the residue map at x, in [0, p).
Int residue(const QuadInt& x, const SplitPrimeWitness& w);

// Smallest split prime p >= start whose residue map does not kill x.
// pre: x != 0 (its norm then has finitely many prime factors, so the scan
// terminates).
SplitPrimeWitness find_split_prime_avoiding(const QuadInt& x, const Int& start);

}  // namespace hallkit
