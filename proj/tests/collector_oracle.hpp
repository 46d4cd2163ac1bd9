#pragma once
// Independent normal-form oracle for the group law, used to cross-check
// evaluate()/multiply(): expand a word into unit letters, push every t to the
// right through t a_i t^-1 = a_{i+1}, bubble-sort the a-letters recording a
// central cost c_{i-j}^{ef} per adjacent swap, then fold the central bag by
// the quotient semantics.  Deliberately shares no arithmetic with group.cpp.

#include <algorithm>
#include <utility>
#include <vector>

#include "hallkit/errors.hpp"
#include "hallkit/quotient.hpp"
#include "hallkit/word.hpp"

namespace oracle {

struct NormalForm {
  hallkit::Int t = 0;
  std::vector<std::pair<hallkit::Index, hallkit::Int>> a;  // ascending index, nonzero
  std::vector<std::pair<hallkit::Index, hallkit::Int>> c;  // ascending index, canonical
};

inline NormalForm collect(const hallkit::Word& word, const hallkit::QuotientSpec& spec) {
  using hallkit::Index;
  using hallkit::Int;

  if (word.weight() > 20000) throw hallkit::DomainError("oracle word too heavy");

  struct Unit {
    Index index;
    int exp;  // +1 or -1
  };
  std::vector<Unit> a_units;
  std::vector<std::pair<Index, Int>> c_raw;
  Index offset = 0;

  for (const auto& l : word.letters) {
    long count = static_cast<long>(hallkit::abs_int(l.exp));
    int step = l.exp > 0 ? 1 : -1;
    for (long r = 0; r < count; ++r) {
      switch (l.kind) {
        case hallkit::WordLetter::Kind::T:
          offset += step;
          break;
        case hallkit::WordLetter::Kind::A:
          a_units.push_back({l.index + offset, step});
          break;
        case hallkit::WordLetter::Kind::C:
          c_raw.emplace_back(l.index, Int(step));
          break;
      }
    }
  }

  // Bubble sort; each adjacent transposition of a_i past a_j (i > j, i left
  // of j) costs c_{i-j}^{e f}.
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < a_units.size(); ++k) {
      if (a_units[k].index > a_units[k + 1].index) {
        c_raw.emplace_back(a_units[k].index - a_units[k + 1].index,
                           Int(a_units[k].exp * a_units[k + 1].exp));
        std::swap(a_units[k], a_units[k + 1]);
        swapped = true;
      }
    }
  }

  NormalForm nf;
  nf.t = offset;
  for (const auto& u : a_units) {
    if (!nf.a.empty() && nf.a.back().first == u.index)
      nf.a.back().second += u.exp;
    else
      nf.a.emplace_back(u.index, Int(u.exp));
    if (!nf.a.empty() && nf.a.back().second == 0) nf.a.pop_back();
  }

  // Central fold, re-implemented per variant.
  if (std::holds_alternative<hallkit::TrivialCenter>(spec)) return nf;

  std::vector<std::pair<Index, Int>> folded;
  auto add_folded = [&folded](Index i, const Int& v) {
    for (auto& e : folded)
      if (e.first == i) {
        e.second += v;
        return;
      }
    folded.emplace_back(i, v);
  };
  for (const auto& [i, v] : c_raw) {
    if (i == 0) continue;
    if (i > 0)
      add_folded(i, v);
    else
      add_folded(-i, Int(-v));
  }
  std::sort(folded.begin(), folded.end());

  if (std::holds_alternative<hallkit::FreeCenter>(spec)) {
    for (auto& e : folded)
      if (e.second != 0) nf.c.push_back(e);
    return nf;
  }
  if (const auto* cyc = std::get_if<hallkit::CyclicCenter>(&spec)) {
    Int total = 0;
    for (const auto& [i, v] : folded) total += v * cyc->d.eval(i);
    if (total != 0) nf.c.emplace_back(1, total);
    return nf;
  }
  const auto& rels = std::get<hallkit::RelationCenter>(spec).relations;
  for (auto& [i, v] : folded) {
    Int val = v;
    for (const auto& rel : rels)
      if (rel.index == i) {
        val = val % rel.modulus;
        if (val < 0) val += rel.modulus;
        break;
      }
    if (val != 0) nf.c.emplace_back(i, val);
  }
  return nf;
}

}  // namespace oracle
