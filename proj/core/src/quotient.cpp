#include "hallkit/quotient.hpp"

#include <algorithm>

#include "hallkit/errors.hpp"

namespace hallkit {

SpecHandle make_free_center() { return std::make_shared<const QuotientSpec>(FreeCenter{}); }

SpecHandle make_trivial_center() { return std::make_shared<const QuotientSpec>(TrivialCenter{}); }

SpecHandle make_cyclic_center(DFunction d) {
  if (d.eval(0) != 0) throw DomainError("cyclic center: d(0) must be 0");
  if (d.eval(1) != 1) throw DomainError("cyclic center: d(1) must be 1");
  for (Index i = 1; i <= 8; ++i)
    if (d.eval(-i) != -d.eval(i)) throw DomainError("cyclic center: d must be antisymmetric");
  return std::make_shared<const QuotientSpec>(CyclicCenter{std::move(d)});
}

SpecHandle make_relation_center(std::vector<CenterRelation> relations) {
  for (std::size_t k = 0; k < relations.size(); ++k) {
    if (relations[k].index < 1) throw DomainError("center relation index must be >= 1");
    if (relations[k].modulus < 1) throw DomainError("center relation modulus must be >= 1");
    if (k > 0 && relations[k - 1].index >= relations[k].index)
      throw DomainError("center relation indices must be strictly increasing");
  }
  return std::make_shared<const QuotientSpec>(RelationCenter{std::move(relations)});
}

std::string spec_id(const QuotientSpec& spec) {
  if (std::holds_alternative<FreeCenter>(spec)) return "free";
  if (std::holds_alternative<TrivialCenter>(spec)) return "trivial";
  if (const auto* c = std::get_if<CyclicCenter>(&spec)) return "cyclic[" + c->d.id() + "]";
  const auto& r = std::get<RelationCenter>(spec);
  std::string id = "relations[";
  for (const auto& rel : r.relations)
    id += std::to_string(rel.index) + "^" + rel.modulus.str() + ",";
  id += "]";
  return id;
}

bool same_spec(const QuotientSpec& a, const QuotientSpec& b) {
  return spec_id(a) == spec_id(b);
}

SupportMap reduce_central(const SupportMap& raw, const QuotientSpec& spec) {
  if (std::holds_alternative<TrivialCenter>(spec)) return SupportMap();

  SupportMap folded;
  for (const auto& [i, v] : raw) {
    if (i == 0) continue;
    if (i > 0)
      folded.add(i, v);
    else
      folded.add(checked_neg(i), -v);
  }

  if (std::holds_alternative<FreeCenter>(spec)) return folded;

  if (const auto* cyc = std::get_if<CyclicCenter>(&spec)) {
    Int total = 0;
    for (const auto& [i, v] : folded) total += v * cyc->d.eval(i);
    SupportMap r;
    r.set(1, total);
    return r;
  }

  const auto& rels = std::get<RelationCenter>(spec).relations;
  SupportMap r;
  for (const auto& [i, v] : folded) {
    auto it = std::lower_bound(rels.begin(), rels.end(), i,
                               [](const CenterRelation& rel, Index k) { return rel.index < k; });
    if (it != rels.end() && it->index == i)
      r.set(i, floor_mod_int(v, it->modulus));
    else
      r.set(i, v);
  }
  return r;
}

}
