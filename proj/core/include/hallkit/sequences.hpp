#pragma once
#include <optional>
#include <string>
#include <vector>

#include "hallkit/comp_root.hpp"
#include "hallkit/int_types.hpp"
#include "hallkit/logscale.hpp"

namespace hallkit {

// Materialization and precision budget for the sequence builders.  Terms
// whose exact value would exceed the digit caps are carried symbolically,
// as certified tower enclosures of their targets.
struct SequenceLimits {
  mpfr_prec_t precision = 256;
  int max_precision_doublings = 6;
  long max_prime_digits = 210;  // largest prime we will pin down exactly
  long max_d_digits = 100;      // largest primorial multiple we will build exactly
};

// d_n: the smallest d_{n-1} * 2 * 3 * ... * p reaching the growth target
// dtilde_n, where dtilde_0 = d_0 and dtilde_{n+1} = exp(dtilde_n).
struct DTerm {
  bool symbolic = false;
  Int exact;                    // when !symbolic
  Index primorial_cutoff = 0;   // the last prime multiplied in (0 at n = 0 start)
  LogScale target;              // certified enclosure of dtilde_n
};

// P_n: the least prime at or above the ceiling of Ptilde_n, where
// Ptilde_0 = f(d_0) and Ptilde_{n+1} = f^2(Ptilde_n).
struct PTerm {
  bool symbolic = false;
  Int value;              // the prime, when !symbolic
  bool probable = false;  // primality certified only probabilistically
  LogScale target;        // certified enclosure of Ptilde_n
};

// q_n: the product of the nine primes P_{5n-5}, P_{5n-3}, ..., P_{5n+11}
// at odd offsets, with index i < 0 standing in for the constant 3.
struct QTerm {
  Index n = 0;
  std::vector<Index> indices;      // 5n - 5 + 2k for k = 0..8
  std::vector<Int> exact_factors;  // aligned with indices; 0 when unresolved
  std::vector<Index> symbolic_indices;
  std::optional<Int> exact;  // the full product, when every factor resolved
};

std::vector<DTerm> build_d(std::size_t count, const SequenceLimits& lim = {});
std::vector<PTerm> build_P(const CompRoot& root, std::size_t count, const SequenceLimits& lim = {});
QTerm build_q(Index n, const std::vector<PTerm>& P);

// Wrap hand-given exact values with the targets the builders would have used,
// so the lemma checks below can audit them (and catch planted violations).
std::vector<DTerm> d_terms_from_values(const std::vector<Int>& values,
                                       const SequenceLimits& lim = {});
std::vector<PTerm> p_terms_from_values(const CompRoot& root, const std::vector<Int>& values,
                                       const SequenceLimits& lim = {});

struct SequenceReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Re-verifies, with certified arithmetic, the inequalities the sequences are
// designed to satisfy: primorial-ratio structure, greedy minimality,
// dtilde_n <= d_n < dtilde_n^{4/3}, the two-adic bound 2^v2(d_n) < 2 ln ln d_n,
// prime placement Ptilde_n <= P_n < 2 Ptilde_n with least-prime minimality,
// distinctness, the q index pattern, and the interleaving identities
// f(dtilde_n) = Ptilde_{5n}, f(Ptilde_{5n-1}) = dtilde_n.
SequenceReport check_sequence_lemmas(const CompRoot& root, const std::vector<DTerm>& d,
                                     const std::vector<PTerm>& P, const std::vector<QTerm>& q,
                                     const SequenceLimits& lim = {});

// Growth-regime scan of f over an increasing grid: where f(x) > x^degree
// settles in, where f^(order-1)(x) <= exp(x^(eps_num/eps_den)) settles in,
// and the measured minimum of f(x) - x over the numerically reachable prefix.
struct IntermediateReport {
  std::vector<int> poly_cmp;  // per point: +1 f wins, -1 the power wins, 0 undecided
  std::optional<std::size_t> poly_crossover;  // first index from which +1 holds to the end
  std::vector<int> eps_cmp;   // per point: -1 bound holds, +1 it fails, 0 undecided
  std::optional<std::size_t> eps_threshold;   // first index from which -1 holds to the end
  std::optional<Interval> min_step;  // enclosure of min f(x) - x over materializable points
  bool strict_growth = true;         // f(x) > x decided at every grid point
};

IntermediateReport check_intermediate(const CompRoot& root, Index degree, const Int& eps_num,
                                      const Int& eps_den, const std::vector<LogScale>& grid);

}  // namespace hallkit
