#include <mpfr.h>

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "hallkit/comp_root.hpp"
#include "hallkit/errors.hpp"
#include "hallkit/primes.hpp"
#include "hallkit/sequences.hpp"

using namespace hallkit;

namespace {

bool any_contains(const std::vector<std::string>& msgs, const std::string& needle) {
  for (const std::string& m : msgs)
    if (m.find(needle) != std::string::npos) return true;
  return false;
}

// Recompute P_n with nothing but interval arithmetic: walk the height-3
// mantissa of 30 through 2n+1 tenth-steps (carrying at 9/10), re-exponentiate,
// and scan upward from the ceiling for the first prime.
Int oracle_prime(std::size_t n, mpfr_prec_t prec, Interval* target_out) {
  Interval m = iv_log(iv_log(iv_log(iv_from_int(30, prec))));
  long height = 3;
  const Interval tenth = iv_from_ratio(1, 10, prec);
  const Interval nine = iv_from_ratio(9, 10, prec);
  for (std::size_t s = 0; s < 2 * n + 1; ++s) {
    auto side = iv_compare(m, nine);
    REQUIRE(side.has_value());
    if (*side == -1) {
      m = iv_add(m, tenth);
    } else {
      m = iv_sub(m, nine);
      ++height;
    }
  }
  Interval v = m;
  for (long h = 0; h < height; ++h) v = iv_exp(v);
  auto c = iv_ceil(v);
  REQUIRE(c.has_value());
  Int p = *c;
  while (!is_prime(p)) ++p;
  if (target_out) *target_out = v;
  return p;
}

bool has_no_small_factor(const Int& p) {
  for (Int f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("growth terms: frozen values, primorial structure, symbolic cap") {
  auto d = build_d(4);
  REQUIRE(d.size() == 4);
  CHECK(!d[0].symbolic);
  CHECK(d[0].exact == 30);
  CHECK(d[0].primorial_cutoff == 0);
  CHECK(d[0].target.height == 3);
  CHECK(!d[1].symbolic);
  CHECK(d[1].exact == Int("222622144044300"));
  CHECK(d[1].primorial_cutoff == 37);
  CHECK(d[1].target.height == 4);
  CHECK(d[1].exact == 30 * primorial_up_to(37));
  // one prime fewer falls short of ceil(e^30) = 10686474581525
  CHECK(30 * primorial_up_to(31) == Int("6016814703900"));
  CHECK(Int("6016814703900") < Int("10686474581525"));
  CHECK(d[2].symbolic);
  CHECK(d[2].target.height == 5);
  CHECK(d[3].symbolic);
  CHECK(d[3].target.height == 6);
  // two-adic headroom of the frozen term: 2^2 = 4 < 2 ln ln d_1
  CHECK(d[1].exact % 4 == 0);
  CHECK(d[1].exact % 8 != 0);
  Interval L = iv_log(iv_log(iv_from_int(d[1].exact, 256)));
  auto c = iv_compare_int(iv_add(L, L), 4);
  REQUIRE(c.has_value());
  CHECK(*c == 1);
}

TEST_CASE("planted growth-term violations are caught clause by clause") {
  CompRoot root = make_comp_root(10);
  {
    auto d = d_terms_from_values({Int(30), Int(120)});
    auto rep = check_sequence_lemmas(root, d, {}, {});
    CHECK(!rep.ok);
    CHECK(rep.failures.size() == 3);
    CHECK(any_contains(rep.failures, "two-adic"));
    CHECK(any_contains(rep.failures, "growth target"));
    CHECK(any_contains(rep.failures, "primorial"));
  }
  {
    // the 31-cutoff primorial multiple: structurally clean but below e^30
    auto d = d_terms_from_values({Int(30), Int("6016814703900")});
    auto rep = check_sequence_lemmas(root, d, {}, {});
    CHECK(!rep.ok);
    REQUIRE(rep.failures.size() == 1);
    CHECK(any_contains(rep.failures, "falls below its growth target"));
  }
  {
    // one primorial step past the greedy stop: reaches the target too late
    auto d = d_terms_from_values({Int(30), Int("9127507905816300")});
    auto rep = check_sequence_lemmas(root, d, {}, {});
    CHECK(!rep.ok);
    REQUIRE(rep.failures.size() == 1);
    CHECK(any_contains(rep.failures, "not minimal"));
  }
  auto good = d_terms_from_values({Int(30), Int("222622144044300")});
  CHECK(check_sequence_lemmas(root, good, {}, {}).ok);
}

TEST_CASE("prime chain: frozen heads, probable tail, symbolic cap, oracle agreement") {
  CompRoot root = make_comp_root(10);
  auto P = build_P(root, 8);
  REQUIRE(P.size() == 8);
  CHECK(P[0].value == 53);
  CHECK(P[1].value == 191);
  CHECK(P[2].value == 1861);
  for (int n = 0; n <= 6; ++n) {
    CHECK(!P[n].symbolic);
    CHECK(P[n].probable == (n == 6));
  }
  CHECK(P[7].symbolic);
  const Index heights[8] = {3, 3, 3, 3, 4, 4, 4, 4};
  for (int n = 0; n < 8; ++n) CHECK(P[n].target.height == heights[n]);
  for (int n = 0; n < 6; ++n) CHECK(P[n].value < P[n + 1].value);
  // the probable flag flips exactly at the deterministic Miller-Rabin bound
  const Int mr_bound("3317044064679887385961981");
  CHECK(P[5].value < mr_bound);
  CHECK(P[6].value > mr_bound);
  // independent recomputation of every materialized prime, with its window
  for (std::size_t n = 0; n <= 6; ++n) {
    Interval target = iv_from_int(0, 64);
    Int p = oracle_prime(n, 512, &target);
    CHECK(p == P[n].value);
    auto below = iv_compare_int(target, p);
    REQUIRE(below.has_value());
    CHECK(*below == -1);
    auto window = iv_compare_int(iv_add(target, target), p);
    REQUIRE(window.has_value());
    CHECK(*window == 1);
  }
  // the small ones re-verify by plain trial division
  CHECK(has_no_small_factor(P[3].value));
  CHECK(has_no_small_factor(P[4].value));
}

TEST_CASE("next_prime stays below twice the start across random samples") {
  std::mt19937 rng(20260813u);
  std::uniform_int_distribution<long> dist(10, 1000000);
  int bad = 0;
  for (int i = 0; i < 300; ++i) {
    long c = dist(rng);
    Int p = next_prime(Int(c));
    if (!(p > c && p < 2 * c)) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("nine-prime products: index pattern, gaps, and shared factors") {
  CompRoot root = make_comp_root(10);
  auto P = build_P(root, 8);
  QTerm q0 = build_q(0, P);
  CHECK(q0.n == 0);
  CHECK(q0.indices == std::vector<Index>{-5, -3, -1, 1, 3, 5, 7, 9, 11});
  for (int k = 0; k < 3; ++k) CHECK(q0.exact_factors[k] == 3);
  CHECK(q0.exact_factors[3] == 191);
  CHECK(q0.exact_factors[4] == P[3].value);
  CHECK(q0.exact_factors[5] == P[5].value);
  for (int k = 6; k < 9; ++k) CHECK(q0.exact_factors[k] == 0);
  CHECK(q0.symbolic_indices == std::vector<Index>{7, 9, 11});
  CHECK(!q0.exact.has_value());
  QTerm q1 = build_q(1, P);
  CHECK(q1.indices == std::vector<Index>{0, 2, 4, 6, 8, 10, 12, 14, 16});
  CHECK(q1.symbolic_indices == std::vector<Index>{8, 10, 12, 14, 16});
  CHECK_THROWS_AS(build_q(-1, P), DomainError);

  // small stand-in primes make every product exact
  std::vector<PTerm> toy;
  for (Index i = 0; i < 22; ++i) {
    PTerm t;
    t.value = nth_prime(i);
    toy.push_back(t);
  }
  QTerm t0 = build_q(0, toy);
  QTerm t1 = build_q(1, toy);
  QTerm t2 = build_q(2, toy);
  REQUIRE(t0.exact.has_value());
  REQUIRE(t1.exact.has_value());
  REQUIRE(t2.exact.has_value());
  CHECK(*t0.exact == Int(27) * 3 * 7 * 13 * 19 * 29 * 37);
  CHECK(*t1.exact == Int(2) * 5 * 11 * 17 * 23 * 31 * 41 * 47 * 59);
  CHECK(*t2.exact == Int(13) * 19 * 29 * 37 * 43 * 53 * 61 * 71 * 79);
  // consecutive products are index-disjoint; two apart share four indices
  CHECK(boost::multiprecision::gcd(*t1.exact, *t2.exact) == 1);
  CHECK(boost::multiprecision::gcd(*t0.exact, *t2.exact) == Int(13) * 19 * 29 * 37);
}

TEST_CASE("planted prime violations are caught clause by clause") {
  CompRoot root = make_comp_root(10);
  {
    // 193 is prime and inside the doubling window, but not the least choice
    auto P = p_terms_from_values(root, {Int(53), Int(193)});
    auto rep = check_sequence_lemmas(root, {}, P, {});
    CHECK(!rep.ok);
    REQUIRE(rep.failures.size() == 1);
    CHECK(any_contains(rep.failures, "least prime"));
  }
  {
    auto P = p_terms_from_values(root, {Int(53), Int(191), Int(1857)});
    auto rep = check_sequence_lemmas(root, {}, P, {});
    CHECK(!rep.ok);
    REQUIRE(rep.failures.size() == 1);
    CHECK(any_contains(rep.failures, "not prime"));
  }
}

TEST_CASE("the full lemma audit passes on freshly built sequences") {
  CompRoot root = make_comp_root(10);
  auto d = build_d(4);
  auto P = build_P(root, 8);
  std::vector<QTerm> q = {build_q(0, P), build_q(1, P)};
  SequenceReport rep = check_sequence_lemmas(root, d, P, q);
  if (!rep.ok)
    for (const std::string& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
  CHECK(rep.failures.empty());

  QTerm bad = q[0];
  bad.exact_factors[0] = 5;
  auto rep2 = check_sequence_lemmas(root, d, P, {q[1], bad});
  CHECK(!rep2.ok);
  REQUIRE(rep2.failures.size() == 1);
  CHECK(any_contains(rep2.failures, "must be 3"));
}

TEST_CASE("growth-regime scan: polynomial crossover, eps threshold, minimum step") {
  CompRoot root = make_comp_root(10);
  // odd twentieths only: their forward orbits never land on a breakpoint
  std::vector<LogScale> grid;
  for (Index h = 0; h <= 6; ++h)
    for (long j = 1; j <= 19; j += 2) grid.push_back(LogScale{h, iv_from_ratio(j, 20, 256)});
  REQUIRE(grid.size() == 70);
  IntermediateReport rep = check_intermediate(root, 2, Int(3), Int(10), grid);
  CHECK(rep.strict_growth);
  for (int c : rep.poly_cmp) CHECK(c != 0);
  for (int c : rep.eps_cmp) CHECK(c != 0);
  // x^2 still beats f at exp^4(0.35); f wins from exp^4(0.45) to the end
  REQUIRE(rep.poly_crossover.has_value());
  CHECK(*rep.poly_crossover == 44);
  CHECK(rep.poly_cmp[43] == -1);
  CHECK(rep.poly_cmp[44] == 1);
  // single-step probes pin the crossover between exp^4(0.35) and exp^4(0.40)
  LogScale a{4, iv_from_ratio(7, 20, 256)};
  LogScale b{4, iv_from_ratio(2, 5, 256)};
  auto ca = logscale_compare(froot_eval_logscale(root, a), logscale_pow_ratio(a, 2, 1));
  auto cb = logscale_compare(froot_eval_logscale(root, b), logscale_pow_ratio(b, 2, 1));
  REQUIRE(ca.has_value());
  REQUIRE(cb.has_value());
  CHECK(*ca == -1);
  CHECK(*cb == 1);
  // f^9 slips under exp(x^(3/10)) from exp^4(0.75) onward, not at exp^4(0.65)
  REQUIRE(rep.eps_threshold.has_value());
  CHECK(*rep.eps_threshold == 47);
  CHECK(rep.eps_cmp[46] == 1);
  CHECK(rep.eps_cmp[47] == -1);
  // the smallest one-step gain sits on the tenth-wide legs
  REQUIRE(rep.min_step.has_value());
  CHECK(rep.min_step->lo.to_double() > 0.099);
  CHECK(rep.min_step->hi.to_double() < 0.101);

  CHECK_THROWS_AS(check_intermediate(root, 0, Int(1), Int(2), grid), DomainError);
  CHECK_THROWS_AS(check_intermediate(root, 2, Int(11), Int(10), grid), DomainError);
  CHECK_THROWS_AS(check_intermediate(root, 2, Int(0), Int(10), grid), DomainError);
}
