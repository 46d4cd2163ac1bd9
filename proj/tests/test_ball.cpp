#include <map>

#include "doctest.h"
#include "hallkit/ball.hpp"
#include "test_util.hpp"

using namespace hallkit;

namespace {

// Brute-force word norms: evaluate every generator string of length <= cap.
std::map<std::string, int> norms_by_exhaustion(const SpecHandle& spec, int cap) {
  std::map<std::string, int> best;
  std::vector<GroupElement> gens = {gen_t(spec, 1), gen_t(spec, -1), gen_a(spec, 0, 1),
                                    gen_a(spec, 0, -1)};
  std::vector<GroupElement> level = {identity(spec)};
  best[identity(spec).key()] = 0;
  for (int len = 1; len <= cap; ++len) {
    std::vector<GroupElement> next;
    for (const auto& e : level)
      for (const auto& g : gens) {
        GroupElement prod = multiply(e, g);
        next.push_back(prod);
        auto [it, fresh] = best.emplace(prod.key(), len);
        (void)it;
        (void)fresh;
      }
    level = std::move(next);
  }
  return best;
}

}  // namespace

TEST_CASE("ball agrees with exhaustive word enumeration") {
  for (const auto& spec : testutil::all_specs()) {
    CAPTURE(spec_id(*spec));
    Ball ball = enumerate_ball(spec, 4);
    auto brute = norms_by_exhaustion(spec, 4);
    CHECK(ball.elements.size() == brute.size());
    for (std::size_t i = 0; i < ball.elements.size(); ++i) {
      auto it = brute.find(ball.elements[i].key());
      REQUIRE(it != brute.end());
      CHECK(it->second == ball.norms[i]);
    }
  }
}

TEST_CASE("small ball profile over the free centre") {
  auto spec = make_free_center();
  Ball b0 = enumerate_ball(spec, 0);
  CHECK(b0.elements.size() == 1);
  Ball b1 = enumerate_ball(spec, 1);
  CHECK(b1.elements.size() == 5);
  Ball b2 = enumerate_ball(spec, 2);
  CHECK(b2.elements.size() == 17);
  CHECK(b2.find(evaluate(parse_word("t a_0"), spec)).has_value());
  CHECK(!b2.find(evaluate(parse_word("a_0^3"), spec)).has_value());
}

TEST_CASE("ball enumeration is deterministic") {
  auto spec = make_free_center();
  Ball a = enumerate_ball(spec, 4);
  Ball b = enumerate_ball(spec, 4);
  REQUIRE(a.elements.size() == b.elements.size());
  for (std::size_t i = 0; i < a.elements.size(); ++i) CHECK(a.elements[i] == b.elements[i]);
}

TEST_CASE("word norms") {
  auto spec = make_free_center();
  CHECK(word_norm(identity(spec), 0) == 0);
  CHECK(word_norm(gen_t(spec), 3) == 1);
  CHECK(word_norm(gen_a(spec, 0, 2), 4) == 2);
  CHECK(word_norm(gen_a(spec, 1), 5) == 3);  // t a_0 t^-1
  CHECK(!word_norm(gen_a(spec, 1), 2).has_value());
}

TEST_CASE("central generator has norm 8 over the free centre") {
  auto spec = make_free_center();
  // No word of length <= 7 evaluates to c_1...
  auto brute = norms_by_exhaustion(spec, 7);
  CHECK(brute.find(gen_c(spec, 1).key()) == brute.end());
  // ...and the commutator word [a_1, a_0] with a_1 spelled t a_0 t^-1 has
  // length 8 and does evaluate to it.
  Word witness = parse_word("t a_0 t^-1 a_0 t a_0^-1 t^-1 a_0^-1");
  CHECK(evaluate(witness, spec) == gen_c(spec, 1));
  CHECK(word_norm(gen_c(spec, 1), 8) == 8);
}

TEST_CASE("quotient balls are no larger than the free ball") {
  auto free_ball = enumerate_ball(make_free_center(), 4);
  for (const auto& spec : testutil::all_specs()) {
    Ball b = enumerate_ball(spec, 4);
    CHECK(b.elements.size() <= free_ball.elements.size());
  }
}
