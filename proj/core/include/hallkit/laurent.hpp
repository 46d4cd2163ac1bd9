#pragma once
#include <map>
#include <vector>

#include "hallkit/support_map.hpp"

namespace hallkit {

// Integer Laurent polynomials (finitely supported degree -> coefficient
// maps), folding mod X^L - 1, and the odd-prime reduction step of the
// central separation argument: given a span M of exempt monomials, find a
// small odd prime q such that f stays outside M + <X^{lcm(q, m0)} - 1>.

using LaurentPoly = SupportMap;

LaurentPoly laurent_from_entries(std::vector<std::pair<Index, Int>> entries);

// Reduction mod X^L - 1: class r in [0, L) -> sum of the coefficients of
// all degrees congruent to r.  Classes whose sum vanishes are omitted.
std::map<Index, Int> laurent_fold(const LaurentPoly& f, Index L);

// Decides f in M + I with M = span_Z{ X^l : l in exempt } and
// I = <X^L - 1>: true iff every fold class outside the exempt classes
// carries coefficient 0 (exact, since M has free integer coefficients).
// Distinct exempt integers that collide mod L are an error: the span's
// fold classes would alias and the criterion would stop being exact.
bool membership_in_M_plus_Iq(const LaurentPoly& f, const std::vector<Index>& exempt,
                             Index L);

struct ReductionCertificate {
  Index q = 0;              // odd prime found
  Index L = 0;              // working fold modulus lcm(q, m0)
  Index witness_class = 0;  // surviving fold class outside the exempt ones
  Int witness_coeff;        // its folded coefficient (nonzero)
  Index scan_cap = 0;       // largest odd prime the scan was allowed to try
};

// Smallest odd prime q with membership_in_M_plus_Iq(f, exempt, lcm(q, m0))
// false.  The certificate reports, among the surviving fold classes, the
// one with the smallest |coefficient| (ties broken by smallest class), so
// downstream prime thresholds stay low.  The scan is capped at
// max(20 n^{1/2+eps}, the first odd prime where the cumulative sum of
// (q - 1) exceeds 4(2n+1)); hitting the cap raises logic_error, since the
// reduction lemma promises a hit below it.
// pre: f != 0, support(f) within [-n, n], f outside M.
ReductionCertificate find_reduction_prime(const LaurentPoly& f,
                                          const std::vector<Index>& exempt, Index m0,
                                          Index n, double eps);

}  // namespace hallkit
