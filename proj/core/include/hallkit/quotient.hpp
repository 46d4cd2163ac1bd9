#pragma once
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hallkit/dfunction.hpp"
#include "hallkit/support_map.hpp"

namespace hallkit {

// Center semantics for the groups handled here.  All share the presentation
// with commuting a-generators up to central c's and the shift action of t;
// they differ only in what the c's are.
//
//   FreeCenter:     c_i free abelian on i >= 1 (c_0 = 1, c_{-i} = c_i^{-1}).
//   CyclicCenter:   center cyclic, c_i = c_1^{d(i)} for an antisymmetric d
//                   with d(1) = 1.
//   RelationCenter: free center plus relations c_{index}^{modulus} = 1.
//   TrivialCenter:  all c_i killed; the group is the wreath product of Z by Z.
struct FreeCenter {};
struct TrivialCenter {};
struct CyclicCenter {
  DFunction d;
};
struct CenterRelation {
  Index index = 1;  // >= 1
  Int modulus = 1;  // >= 1; modulus 1 kills the generator
};
struct RelationCenter {
  std::vector<CenterRelation> relations;  // strictly increasing indices
};

using QuotientSpec = std::variant<FreeCenter, CyclicCenter, RelationCenter, TrivialCenter>;
using SpecHandle = std::shared_ptr<const QuotientSpec>;

SpecHandle make_free_center();
SpecHandle make_trivial_center();
SpecHandle make_cyclic_center(DFunction d);
SpecHandle make_relation_center(std::vector<CenterRelation> relations);

std::string spec_id(const QuotientSpec& spec);
bool same_spec(const QuotientSpec& a, const QuotientSpec& b);

// Canonical form of a raw central vector under the spec: negative indices are
// folded to positive ones (c_{-i} = c_i^{-1}, c_0 = 1), then the variant's
// reduction is applied.  Canonical forms: FreeCenter arbitrary positive
// support; CyclicCenter everything on index 1; RelationCenter related entries
// reduced into [0, modulus); TrivialCenter empty.
SupportMap reduce_central(const SupportMap& raw, const QuotientSpec& spec);

}
