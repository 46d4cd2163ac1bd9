#pragma once
#include <string>
#include <vector>

#include "hallkit/int_types.hpp"

namespace hallkit {

// Restricted wreath product of an abelian base (Z, or Z/base_mod) by the
// cyclic top group Z/period: elements (h, n) with h a base vector indexed by
// Z/period and n the top shift.  This is where central quotients of the
// a-generators land once the center is killed and the indices are folded.
struct CyclicWreath {
  Int base_mod = 0;  // 0 means integer base
  Index period = 1;  // top cyclic order, >= 1
};

struct CwElement {
  std::vector<Int> h;  // length = period; entries in [0, base_mod) when finite
  Index n = 0;         // in [0, period)

  bool operator==(const CwElement& o) const { return n == o.n && h == o.h; }
  bool operator!=(const CwElement& o) const { return !(*this == o); }
};

CwElement cw_identity(const CyclicWreath& w);
CwElement cw_gen_a(const CyclicWreath& w, Index i, const Int& e = 1);
CwElement cw_gen_t(const CyclicWreath& w, const Int& e = 1);

CwElement cw_multiply(const CyclicWreath& w, const CwElement& x, const CwElement& y);
CwElement cw_inverse(const CyclicWreath& w, const CwElement& x);
CwElement cw_conjugate(const CyclicWreath& w, const CwElement& x, const CwElement& g);

std::string cw_render(const CwElement& x);
std::string cw_key(const CwElement& x);

// base_mod^period * period; DomainError on an integer base.
Int cw_group_order(const CyclicWreath& w);

// Generating set for the centralizer of g = (h, n): one product of the
// a-generators over each orbit of the +n shift on Z/period (these span the
// shift-invariant base directions), plus a single complement element whose
// top part generates the image of the centralizer in Z/period.
struct WreathCentralizer {
  std::vector<CwElement> orbit_products;
  CwElement complement;
  Index image_step = 0;  // top part of the complement
};

WreathCentralizer centralizer_generators(const CyclicWreath& w, const CwElement& g);

}
