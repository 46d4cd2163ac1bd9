#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hallkit/group.hpp"

namespace hallkit {

// Finite nilpotent-by-cyclic quotients: t has order 2q, every a_i and c_i has
// order p, indices live mod 2q, and the central relations c_{d_j}^{q_j} = 1
// are inherited from an injectable (d_j, q_j) sequence pair.  The center of
// the base collapses onto an explicit basis of surviving c-classes.

struct SequenceParams {
  std::vector<Index> d;  // strictly increasing, d[0] >= 1
  std::vector<Int> q;    // q[j] >= 1, same length as d
};

// Basic shape checks (lengths match, d strictly increasing positive, q >= 1).
void validate_params(const SequenceParams& params);

// The infinite-group side of these quotients: free center plus the relations
// c_{d_j}^{q_j} = 1.
SpecHandle make_gint_spec(const SequenceParams& params);

// Central indices mod 2q fold into [0, q]: class 0 and the self-inverse
// class q die; classes above q flip sign.  Returns {index, sign} with
// sign 0 for a dead class.
std::pair<Index, int> fold_c_index(Index i, Index q);

// { i in [1, q-1] : for every j with p not dividing q_j, i != +-d_j mod 2q }.
// Exactly the c-classes that survive: coprime relations kill their class,
// p-divisible relations are absorbed by the exponent-p relation.
std::vector<Index> build_Cpq_basis(const Int& p, Index q, const SequenceParams& params);

struct FiniteHallParams {
  Int p;
  Index q = 0;
  SequenceParams seq;
  std::vector<Index> basis;  // ascending surviving c-classes
  std::vector<char> alive;   // size q; alive[i] for i in [1, q-1]
  Int order;                 // exactly 2q * p^(2q + basis.size())
};
using FiniteHallHandle = std::shared_ptr<const FiniteHallParams>;

// pre: p an odd prime, q >= 2, params valid.  The exact order always obeys
// the coarse bound 2q p^{4q}; construction asserts it.
FiniteHallHandle make_finite_hall(const Int& p, Index q, const SequenceParams& params);

// Canonical form: t in [0, 2q), a-exponents in [0, p) indexed by Z/2q, and a
// sparse c-vector over the surviving basis with entries in [1, p).
struct FiniteHallElement {
  FiniteHallHandle params;
  Index t = 0;
  std::vector<Int> a;
  std::map<Index, Int> c;

  bool is_identity() const;
  bool operator==(const FiniteHallElement& o) const;
  bool operator!=(const FiniteHallElement& o) const { return !(*this == o); }
};

FiniteHallElement hallfinite_identity(const FiniteHallHandle& h);

// The quotient map: t-exponent mod 2q, a-indices folded mod 2q with
// exponents mod p, c-part folded onto the surviving basis.  Accepts elements
// under the free center or under the relation center matching h's sequences
// (the map factors through those relations by construction).
FiniteHallElement phi_pq(const GroupElement& g, const FiniteHallHandle& h);

// Group law via lift-multiply-project through the free-center group, which
// keeps this definitionally a quotient of the exact arithmetic.
FiniteHallElement hallfinite_multiply(const FiniteHallElement& x, const FiniteHallElement& y);
FiniteHallElement hallfinite_inverse(const FiniteHallElement& x);

std::string hallfinite_render(const FiniteHallElement& x);

}  // namespace hallkit
