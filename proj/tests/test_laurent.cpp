#include <random>
#include <set>

#include "doctest.h"
#include "hallkit/errors.hpp"
#include "hallkit/laurent.hpp"
#include "hallkit/primes.hpp"
#include "test_util.hpp"

using namespace hallkit;

namespace {

LaurentPoly lp(std::vector<std::pair<Index, Int>> e) {
  return laurent_from_entries(std::move(e));
}

// exempt sets shaped like the separation argument's: 0 plus +-pairs whose
// 2-adic valuations step 1, 2, ... so everything stays distinct mod m0 = 16.
std::vector<Index> random_exempt(std::mt19937_64& g) {
  std::uniform_int_distribution<int> odd(0, 3);
  Index d0 = 2 * (2 * odd(g) + 1);
  Index d1 = 4 * (2 * odd(g) + 1);
  return {0, d0, -d0, d1, -d1};
}

}  // namespace

TEST_CASE("folding mod X^L - 1") {
  auto f = lp({{1, 1}, {-1, -1}});
  auto folded = laurent_fold(f, 12);
  REQUIRE(folded.size() == 2);
  CHECK(folded.at(1) == 1);
  CHECK(folded.at(11) == -1);

  auto h = lp({{5, 1}, {-7, 1}});
  auto fh = laurent_fold(h, 12);
  REQUIRE(fh.size() == 1);
  CHECK(fh.at(5) == 2);

  // cancelling classes vanish from the output
  CHECK(laurent_fold(lp({{1, 1}, {13, -1}}), 12).empty());
  CHECK(laurent_fold(LaurentPoly{}, 5).empty());
  CHECK_THROWS_AS(laurent_fold(f, 0), DomainError);

  auto g = testutil::rng(41);
  std::uniform_int_distribution<Index> deg(-60, 60);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<Index> mod(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<Index, Int>> ea, eb;
    for (int i = 0; i < 6; ++i) {
      ea.push_back({deg(g), Int(coef(g))});
      eb.push_back({deg(g), Int(coef(g))});
    }
    auto A = lp(ea), B = lp(eb);
    Index L = mod(g);
    auto sum = laurent_fold(A.plus(B), L);
    auto fa = laurent_fold(A, L);
    for (const auto& [r, v] : laurent_fold(B, L)) fa[r] += v;
    for (auto it = fa.begin(); it != fa.end();) {
      if (it->second == 0)
        it = fa.erase(it);
      else
        ++it;
    }
    CHECK(sum == fa);
  }
}

TEST_CASE("membership in M + <X^L - 1>") {
  std::vector<Index> exempt{0, 2};
  CHECK(membership_in_M_plus_Iq(lp({{2, 1}}), exempt, 12));
  CHECK_FALSE(membership_in_M_plus_Iq(lp({{1, 1}, {-1, -1}}), exempt, 12));
  CHECK(membership_in_M_plus_Iq(LaurentPoly{}, exempt, 12));

  // X^14 folds onto the exempt class of 2; X^15 does not
  CHECK(membership_in_M_plus_Iq(lp({{14, 3}}), exempt, 12));
  CHECK_FALSE(membership_in_M_plus_Iq(lp({{15, 3}}), exempt, 12));

  // distinct exempt integers sharing a fold class are refused
  CHECK_THROWS_AS(membership_in_M_plus_Iq(lp({{1, 1}}), {0, 12}, 12), DomainError);
  CHECK_THROWS_AS(membership_in_M_plus_Iq(lp({{1, 1}}), {2, -2}, 4), DomainError);
  // a repeated exempt integer is not a collision
  CHECK(membership_in_M_plus_Iq(lp({{2, 1}}), {0, 2, 2}, 12));
}

TEST_CASE("reduction-prime search, worked instance") {
  auto f = lp({{1, 1}, {-1, -1}});
  auto cert = find_reduction_prime(f, {0, 2, -2}, 4, 1, 0.5);
  CHECK(cert.q == 3);
  CHECK(cert.L == 12);
  CHECK(cert.witness_class == 1);
  CHECK(cert.witness_coeff == 1);
  CHECK_FALSE(membership_in_M_plus_Iq(f, {0, 2, -2}, cert.L));

  CHECK_THROWS_AS(find_reduction_prime(LaurentPoly{}, {0}, 4, 1, 0.5), DomainError);
  // f inside the span M is a precondition error
  CHECK_THROWS_AS(find_reduction_prime(lp({{2, 5}}), {0, 2, -2}, 4, 2, 0.5), DomainError);
  // support outside [-n, n]
  CHECK_THROWS_AS(find_reduction_prime(lp({{5, 1}}), {0}, 4, 2, 0.5), DomainError);
}

TEST_CASE("reduction-prime search, randomized certificates") {
  auto g = testutil::rng(42);
  const Index n = 40;
  const Index m0 = 16;
  std::uniform_int_distribution<Index> deg(-n, n);
  std::uniform_int_distribution<int> coef(-5, 5);

  // threshold: first odd prime where the running sum of (q - 1) passes n
  Index threshold = 0;
  {
    Index running = 0;
    Int p = 3;
    while (running <= n) {
      threshold = to_index(p);
      running += threshold - 1;
      p = next_prime(p);
    }
  }
  CHECK(threshold == 17);

  for (int trial = 0; trial < 200; ++trial) {
    auto exempt = random_exempt(g);
    std::set<Index> exempt_ints(exempt.begin(), exempt.end());
    LaurentPoly f;
    bool forced_past_3 = trial % 4 == 3;
    if (forced_past_3) {
      // X^24 - X^-24 cancels mod 48 = 3 m0, so q = 3 cannot work; padding by
      // an exempt monomial stays inside M.
      f = lp({{24, 1}, {-24, -1}, {exempt[1], Int(coef(g))}});
    } else {
      for (;;) {
        std::vector<std::pair<Index, Int>> entries;
        for (int i = 0; i < 6; ++i) entries.push_back({deg(g), Int(coef(g))});
        f = lp(entries);
        bool in_M = true;
        for (const auto& [i, v] : f)
          if (!exempt_ints.count(i)) in_M = false;
        if (!f.empty() && !in_M) break;
      }
    }

    auto cert = find_reduction_prime(f, exempt, m0, n, 0.5);
    if (forced_past_3) {
      CHECK(cert.q == 5);
      CHECK(cert.witness_class == 24);
    }
    CHECK(is_prime(Int(cert.q)));
    CHECK(cert.q % 2 == 1);
    CHECK(cert.q <= threshold);
    CHECK(cert.q <= 10 * 7);  // 10 sqrt(n) ceiling, generous form
    CHECK(cert.L == cert.q * m0);

    // certificate re-checked by the membership op, and minimality
    CHECK_FALSE(membership_in_M_plus_Iq(f, exempt, cert.L));
    for (Int p = 3; p < cert.q; p = next_prime(p))
      CHECK(membership_in_M_plus_Iq(f, exempt, to_index(p) * m0));

    // the reported class really survives with the reported coefficient
    auto folded = laurent_fold(f, cert.L);
    CHECK(folded.at(cert.witness_class) == cert.witness_coeff);
    CHECK(cert.witness_coeff != 0);
    std::set<Index> exempt_classes;
    for (Index l : exempt) exempt_classes.insert(floor_mod(l, cert.L));
    CHECK(!exempt_classes.count(cert.witness_class));
    // no surviving class carries a strictly smaller |coefficient|
    for (const auto& [r, v] : folded)
      if (!exempt_classes.count(r)) CHECK(abs_int(v) >= abs_int(cert.witness_coeff));
  }
}
