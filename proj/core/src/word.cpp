#include "hallkit/word.hpp"

#include <cctype>

#include "hallkit/errors.hpp"

namespace hallkit {

Int Word::weight() const {
  Int w = 0;
  for (const auto& l : letters) w += abs_int(l.exp);
  return w;
}

Word Word::inverse() const {
  Word r;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    WordLetter l = *it;
    l.exp = -l.exp;
    r.letters.push_back(std::move(l));
  }
  return r;
}

Word Word::concat(const Word& o) const {
  Word r = *this;
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  return r;
}

namespace {

// Parses an optionally signed integer starting at pos; advances pos.
Int parse_int_at(std::string_view s, std::size_t& pos, const char* what) {
  std::size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw ParseError(std::string("expected ") + what, start);
  Int v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    ++pos;
  }
  return neg ? Int(-v) : v;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  bool saw_one = false, saw_term = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t term_start = pos;
    char c = text[pos];
    if (c == '1') {
      ++pos;
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
        throw ParseError("unexpected character after identity token", pos);
      saw_one = true;
      continue;
    }
    WordLetter l;
    if (c == 't') {
      l.kind = WordLetter::Kind::T;
      ++pos;
    } else if (c == 'a' || c == 'c') {
      l.kind = c == 'a' ? WordLetter::Kind::A : WordLetter::Kind::C;
      ++pos;
      if (pos < text.size() && text[pos] == '_') {
        ++pos;
        l.index = to_index(parse_int_at(text, pos, "generator index"), "generator index");
      } else if (c == 'c') {
        throw ParseError("central letter requires an index", term_start);
      } else {
        l.index = 0;
      }
    } else {
      throw ParseError("unexpected character", pos);
    }
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      l.exp = parse_int_at(text, pos, "exponent");
      if (l.exp == 0) throw ParseError("zero exponent", term_start);
    } else {
      l.exp = 1;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("unexpected character after term", pos);
    w.letters.push_back(std::move(l));
    saw_term = true;
  }
  if (saw_one && saw_term) throw ParseError("identity token mixed with terms", 0);
  return w;
}

std::string render_word(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    switch (l.kind) {
      case WordLetter::Kind::T: out += 't'; break;
      case WordLetter::Kind::A: out += "a_" + std::to_string(l.index); break;
      case WordLetter::Kind::C: out += "c_" + std::to_string(l.index); break;
    }
    if (l.exp != 1) out += "^" + l.exp.str();
  }
  return out;
}

Word word_t(const Int& e) {
  Word w;
  if (e != 0) w.letters.push_back({WordLetter::Kind::T, 0, e});
  return w;
}

Word word_a(Index i, const Int& e) {
  Word w;
  if (e != 0) w.letters.push_back({WordLetter::Kind::A, i, e});
  return w;
}

Word word_c(Index i, const Int& e) {
  Word w;
  if (e != 0) w.letters.push_back({WordLetter::Kind::C, i, e});
  return w;
}

Word word_commutator(const Word& x, const Word& y) {
  return x.concat(y).concat(x.inverse()).concat(y.inverse());
}

}
