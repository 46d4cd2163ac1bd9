#pragma once
#include <string>

#include "hallkit/quotient.hpp"
#include "hallkit/word.hpp"

namespace hallkit {

// Normal form A(a_part) C(c_part) t^{t_exp}: a finitely supported a-vector, a
// canonical central vector, and a t-power.  Multiplication shifts the right
// factor's a-part by the left t-exponent and collects the commutator
// cross-terms into the center.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(SpecHandle spec, Int t_exp, SupportMap a_part, SupportMap c_raw);

  const SpecHandle& spec() const { return spec_; }
  const Int& t_exp() const { return t_; }
  const SupportMap& a_part() const { return a_; }
  const SupportMap& c_part() const { return c_; }

  bool is_identity() const { return t_ == 0 && a_.empty() && c_.empty(); }
  bool is_central() const { return t_ == 0 && a_.empty(); }
  bool in_base() const { return t_ == 0; }

  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  // Total order: t-exponent, then a-part, then c-part; the canonical element
  // order used for deterministic tie-breaking.
  int compare(const GroupElement& o) const;
  std::size_t hash() const;
  std::string key() const;  // unambiguous serialization

 private:
  SpecHandle spec_;
  Int t_ = 0;
  SupportMap a_;
  SupportMap c_;
};

GroupElement identity(const SpecHandle& spec);
GroupElement gen_t(const SpecHandle& spec, const Int& e = 1);
GroupElement gen_a(const SpecHandle& spec, Index i, const Int& e = 1);
GroupElement gen_c(const SpecHandle& spec, Index i, const Int& e = 1);

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement conjugate(const GroupElement& x, const GroupElement& g);  // x g x^-1
GroupElement commutator(const GroupElement& x, const GroupElement& y); // x y x^-1 y^-1
GroupElement power(const GroupElement& g, const Int& e);

GroupElement evaluate(const Word& w, const SpecHandle& spec);

// Kill the center: the image in the wreath product of Z by Z.
GroupElement project_to_lamplighter(const GroupElement& g);
// Reinterpret under another center.  Sound from FreeCenter to anything and
// from anything to TrivialCenter; other directions raise.
GroupElement project(const GroupElement& g, const SpecHandle& target);

// Canonical text: t-power first, then ascending a-letters (indices shifted so
// that evaluate(parse(render(g))) == g), then ascending c-letters.
std::string render(const GroupElement& g);

// Sum over pairs i > j of v_i * w_j placed at central index i - j: the
// commutator cross-term [A(v), A(w)] contributes beta(v, w) - beta(w, v).
SupportMap beta_cross_term(const SupportMap& v, const SupportMap& w);

}
