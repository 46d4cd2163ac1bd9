#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "hallkit/int_types.hpp"

namespace hallkit {

// A word in the letters t, a_i, c_i with integer exponents.
// Text form: whitespace-separated terms `t`, `a`, `a_<i>`, `c_<i>`, each with
// an optional `^<e>` (e a nonzero integer, i a possibly negative integer).
// `a` alone means `a_0`.  The single token `1` denotes the empty word.
struct WordLetter {
  enum class Kind { T, A, C };
  Kind kind = Kind::T;
  Index index = 0;  // unused for Kind::T
  Int exp = 1;
};

struct Word {
  std::vector<WordLetter> letters;

  // Letter count weighted by |exponent|; the word-metric length of the text.
  Int weight() const;
  Word inverse() const;
  Word concat(const Word& o) const;
};

Word parse_word(std::string_view text);
std::string render_word(const Word& w);

Word word_t(const Int& e = 1);
Word word_a(Index i, const Int& e = 1);
Word word_c(Index i, const Int& e = 1);
// x y x^-1 y^-1 as a word.
Word word_commutator(const Word& x, const Word& y);

}
