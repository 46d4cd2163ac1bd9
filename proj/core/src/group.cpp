#include "hallkit/group.hpp"

#include "hallkit/errors.hpp"

namespace hallkit {

namespace {

void require_same_spec(const GroupElement& g, const GroupElement& h, const char* op) {
  if (!g.spec() || !h.spec()) throw DomainError(std::string(op) + ": element without a group");
  if (g.spec() == h.spec()) return;
  if (!same_spec(*g.spec(), *h.spec()))
    throw DomainError(std::string(op) + ": elements live in different groups");
}

}  // namespace

GroupElement::GroupElement(SpecHandle spec, Int t_exp, SupportMap a_part, SupportMap c_raw)
    : spec_(std::move(spec)), t_(std::move(t_exp)), a_(std::move(a_part)) {
  if (!spec_) throw DomainError("group element needs a quotient spec");
  c_ = reduce_central(c_raw, *spec_);
}

bool GroupElement::operator==(const GroupElement& o) const {
  require_same_spec(*this, o, "equality");
  return t_ == o.t_ && a_ == o.a_ && c_ == o.c_;
}

int GroupElement::compare(const GroupElement& o) const {
  require_same_spec(*this, o, "compare");
  if (t_ != o.t_) return t_ < o.t_ ? -1 : 1;
  int ac = a_.compare(o.a_);
  if (ac != 0) return ac;
  return c_.compare(o.c_);
}

std::size_t GroupElement::hash() const {
  std::size_t h = hash_int(t_);
  h = hash_combine(h, a_.hash());
  h = hash_combine(h, c_.hash());
  return h;
}

std::string GroupElement::key() const {
  std::string k = t_.str();
  k += '|';
  a_.append_key(k);
  c_.append_key(k);
  return k;
}

GroupElement identity(const SpecHandle& spec) {
  return GroupElement(spec, 0, SupportMap(), SupportMap());
}

GroupElement gen_t(const SpecHandle& spec, const Int& e) {
  return GroupElement(spec, e, SupportMap(), SupportMap());
}

GroupElement gen_a(const SpecHandle& spec, Index i, const Int& e) {
  SupportMap a;
  a.set(i, e);
  return GroupElement(spec, 0, std::move(a), SupportMap());
}

GroupElement gen_c(const SpecHandle& spec, Index i, const Int& e) {
  SupportMap c;
  c.set(i, e);
  return GroupElement(spec, 0, SupportMap(), std::move(c));
}

SupportMap beta_cross_term(const SupportMap& v, const SupportMap& w) {
  SupportMap out;
  for (const auto& [i, vi] : v)
    for (const auto& [j, wj] : w) {
      if (i > j) out.add(checked_add(i, checked_neg(j), "central index"), vi * wj);
    }
  return out;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require_same_spec(g, h, "multiply");
  Index k = to_index(g.t_exp(), "t-exponent");
  SupportMap w = h.a_part().shifted(k);
  SupportMap c = g.c_part().plus(h.c_part()).plus(beta_cross_term(g.a_part(), w));
  return GroupElement(g.spec(), g.t_exp() + h.t_exp(), g.a_part().plus(w), std::move(c));
}

GroupElement inverse(const GroupElement& g) {
  Index k = to_index(g.t_exp(), "t-exponent");
  SupportMap a = g.a_part().negated().shifted(checked_neg(k));
  SupportMap c = g.c_part().negated().plus(beta_cross_term(g.a_part(), g.a_part()));
  return GroupElement(g.spec(), -g.t_exp(), std::move(a), std::move(c));
}

GroupElement conjugate(const GroupElement& x, const GroupElement& g) {
  return multiply(multiply(x, g), inverse(x));
}

GroupElement commutator(const GroupElement& x, const GroupElement& y) {
  return multiply(multiply(x, y), multiply(inverse(x), inverse(y)));
}

GroupElement power(const GroupElement& g, const Int& e) {
  if (e == 0) return identity(g.spec());
  Int n = abs_int(e);
  GroupElement acc = identity(g.spec());
  GroupElement base = g;
  while (n > 0) {
    if (n % 2 == 1) acc = multiply(acc, base);
    n /= 2;
    if (n > 0) base = multiply(base, base);
  }
  return e > 0 ? acc : inverse(acc);
}

GroupElement evaluate(const Word& word, const SpecHandle& spec) {
  GroupElement acc = identity(spec);
  for (const auto& l : word.letters) {
    switch (l.kind) {
      case WordLetter::Kind::T: acc = multiply(acc, gen_t(spec, l.exp)); break;
      case WordLetter::Kind::A: acc = multiply(acc, gen_a(spec, l.index, l.exp)); break;
      case WordLetter::Kind::C: acc = multiply(acc, gen_c(spec, l.index, l.exp)); break;
    }
  }
  return acc;
}

GroupElement project_to_lamplighter(const GroupElement& g) {
  static const SpecHandle kTrivial = make_trivial_center();
  return GroupElement(kTrivial, g.t_exp(), g.a_part(), SupportMap());
}

GroupElement project(const GroupElement& g, const SpecHandle& target) {
  if (!target) throw DomainError("project: missing target spec");
  if (g.spec() && same_spec(*g.spec(), *target))
    return GroupElement(target, g.t_exp(), g.a_part(), g.c_part());
  if (std::holds_alternative<TrivialCenter>(*target))
    return GroupElement(target, g.t_exp(), g.a_part(), SupportMap());
  if (std::holds_alternative<FreeCenter>(*g.spec()))
    return GroupElement(target, g.t_exp(), g.a_part(), g.c_part());
  throw DomainError("project: unsupported center change from " + spec_id(*g.spec()) + " to " +
                    spec_id(*target));
}

std::string render(const GroupElement& g) {
  Index k = to_index(g.t_exp(), "t-exponent");
  Word w;
  if (g.t_exp() != 0) w.letters.push_back({WordLetter::Kind::T, 0, g.t_exp()});
  for (const auto& [i, e] : g.a_part())
    w.letters.push_back({WordLetter::Kind::A, checked_add(i, checked_neg(k), "render index"), e});
  for (const auto& [j, f] : g.c_part())
    w.letters.push_back({WordLetter::Kind::C, j, f});
  return render_word(w);
}

}
