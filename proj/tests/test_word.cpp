#include "doctest.h"
#include "hallkit/errors.hpp"
#include "hallkit/word.hpp"
#include "test_util.hpp"

using namespace hallkit;

TEST_CASE("parse accepted forms") {
  Word w = parse_word("t a_0^2 a_-3 c_1^-1 a^4 t^-2");
  REQUIRE(w.letters.size() == 6);
  CHECK(w.letters[0].kind == WordLetter::Kind::T);
  CHECK(w.letters[1].index == 0);
  CHECK(w.letters[1].exp == 2);
  CHECK(w.letters[2].index == -3);
  CHECK(w.letters[3].kind == WordLetter::Kind::C);
  CHECK(w.letters[3].exp == -1);
  CHECK(w.letters[4].kind == WordLetter::Kind::A);
  CHECK(w.letters[4].index == 0);
  CHECK(w.letters[5].exp == -2);
  CHECK(w.weight() == 11);
}

TEST_CASE("identity token") {
  CHECK(parse_word("1").letters.empty());
  CHECK(parse_word("").letters.empty());
  CHECK(parse_word("  1  ").letters.empty());
  CHECK(render_word(Word{}) == "1");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_word("b_2"), ParseError);
  CHECK_THROWS_AS(parse_word("a_^2"), ParseError);
  CHECK_THROWS_AS(parse_word("t^0"), ParseError);
  CHECK_THROWS_AS(parse_word("c^2"), ParseError);
  CHECK_THROWS_AS(parse_word("a_1x"), ParseError);
  CHECK_THROWS_AS(parse_word("1 t"), ParseError);
  try {
    parse_word("t  b");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("render/parse round trip on random words") {
  auto g = testutil::rng(1);
  for (int it = 0; it < 200; ++it) {
    Word w = testutil::random_word(g);
    Word back = parse_word(render_word(w));
    REQUIRE(back.letters.size() == w.letters.size());
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      CHECK(back.letters[i].kind == w.letters[i].kind);
      CHECK(back.letters[i].exp == w.letters[i].exp);
      if (w.letters[i].kind != WordLetter::Kind::T)
        CHECK(back.letters[i].index == w.letters[i].index);
    }
  }
}

TEST_CASE("inverse and commutator word builders") {
  Word w = parse_word("t a_1^2");
  Word inv = w.inverse();
  CHECK(render_word(inv) == "a_1^-2 t^-1");
  Word comm = word_commutator(word_a(1), word_a(0));
  CHECK(render_word(comm) == "a_1 a_0 a_1^-1 a_0^-1");
}
