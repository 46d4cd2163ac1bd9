#pragma once
#include <optional>
#include <string>

#include "hallkit/ball.hpp"
#include "hallkit/group.hpp"

namespace hallkit {

// First conjugator in breadth-first order with x g1 x^-1 = g2, searching the
// ball of the given radius; nullopt when that ball contains none.  The BFS
// order makes the returned conjugator one of minimal word norm.
std::optional<GroupElement> bounded_conjugacy_search(const GroupElement& g1,
                                                     const GroupElement& g2, int radius);

// Central exponent of [a_0 a_{n0} a_{2 n0} ... a_{(3^i - 1) n0}, a_j] in the
// cyclic-center group of d: the sum of d(k n0 - j) telescopes to the single
// term d(jt - j), where jt is the unique member of the series support
// congruent to j mod 3^{i + v3(n0)}.  Requires n0 >= 1 and v3(n0) <= v3(j).
Int commutator_with_series(Index n0, Index i, Index j, const DFunction& d);

enum class ConjStatus { kConjugate, kNotConjugate, kUnknown };

// Outcome of the conjugacy-to-membership translation below.  g1 is the full
// product over the depth-i series, g2 = g1 c_1^{n(i)/p^i}; when conjugate,
// the witness x is a product of two a-generators at powers of 3, checked
// against the group arithmetic before being returned.
struct ConjugacyCertificate {
  ConjStatus status = ConjStatus::kUnknown;
  GroupElement g1;
  GroupElement g2;
  std::optional<Index> hit;  // j > i whose reduced prime equals p
  std::optional<GroupElement> conjugator;
  std::string note;
};

// Decides whether g1 c_1^{n(i)/p^i} is conjugate to g1 in the cyclic-center
// group of the first d-function family: conjugation by a-generators at
// 3-power indices reaches exactly the exponents generated by the n(l), so the
// pair is conjugate iff some l > i has reduced prime P'(l) = p.  The scan is
// bounded; past the prime map's support horizon the answer is definitive,
// otherwise an exhausted scan is reported as unknown, never as a verdict.
ConjugacyCertificate conj_membership_test(Index i, const Int& p, const HallDParams& params,
                                          Index search_bound);

}
