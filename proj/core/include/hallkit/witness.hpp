#pragma once
#include <string>

#include "hallkit/finite_hall.hpp"
#include "hallkit/group.hpp"
#include "hallkit/quadint.hpp"

namespace hallkit {

// Constructive finite-quotient certificates.  Every constructor re-verifies
// its own certificate (nontrivial image in the named quotient) before
// returning it; a certificate that fails verification is a logic error, not
// a return value.

enum class WitnessKind { CyclicZ, Lamplighter, HallFinite };

struct WitnessQuotient {
  WitnessKind kind = WitnessKind::CyclicZ;
  Int p;  // every kind: the characteristic prime

  // Lamplighter: quotient Z/p  semidirect  Z/r, where a_i maps to the residue
  // of u^{k i} (u = 1 + sqrt 2, s the chosen root of 2 mod p) and t acts by
  // multiplication with the residue of u^k, whose order is r.
  Int s = 0;
  Index k = 0;
  Int r = 1;

  // HallFinite: the quotient with t-order 2q and exponent p.
  Index q = 0;
  int hall_case = 0;  // which branch built it (1 or 2)
  SequenceParams seq;

  Int order;               // p, p*r, or 2q p^(2q+b)
  std::string image_desc;  // claimed image of the separated element
};

struct WitnessCheck {
  bool nontrivial = false;
  Int order;
};

// Separates a nontrivial element of the wreath product of Z by Z:
//  - t-exponent nonzero: CyclicZ with the smallest prime not dividing it;
//  - otherwise scan split primes p ascending and k = 0, 1, -1, 2, -2, ...
//    (|k| <= support radius + 1) for a nonzero residue of sum gamma_i u^{ki};
//    the first hit gives Lamplighter{p, s, k, r}.
// pre: g != 1 under the trivial center.
WitnessQuotient lamplighter_witness(const GroupElement& g);

// Explicit image in Z/p semidirect Z/r, for homomorphism checks.
struct LamplighterImage {
  Int base;  // in [0, p)
  Int tau;   // in [0, r)
};
LamplighterImage lamplighter_image(const GroupElement& g, const WitnessQuotient& w);
LamplighterImage lamplighter_image_mul(const LamplighterImage& x, const LamplighterImage& y,
                                       const WitnessQuotient& w);

// Recomputes the image of g in the certified quotient and reports
// nontriviality plus the quotient order.  Never trusts the certificate's own
// claims beyond (kind, parameters).
WitnessCheck verify_witness(const GroupElement& g, const WitnessQuotient& w);

// Separates a nontrivial central element under the relation center of
// params (central support indices gamma_i at i >= 1):
//  - support inside {d_j}: k the first j with a surviving exponent, p the
//    least prime factor of q_k not dividing it, quotient {p, 2^(k+2)};
//  - otherwise: k the first j with d_j beyond the support radius n,
//    f~ = sum gamma_i (X^i - X^-i), exempt classes {0, +-d_0 .. +-d_(k-1)},
//    odd prime q from the reduction scan at m0 = 2^(k+2), p the least prime
//    divisor of q_k past the surviving fold coefficient, quotient
//    {p, 2^(k+1) q}.
// Requires the toy sequences to carry the 2-adic pattern nu_2(d_j) = j + 1
// (what makes the exempt classes distinct and the case-1 image survive).
// pre: g central, g != 1.
WitnessQuotient gint_witness(const GroupElement& g, const SequenceParams& params);

}  // namespace hallkit
