#pragma once
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hallkit/group.hpp"

namespace hallkit {

// Finite quotient of the cyclic-center group of d obtained by killing c_1^q,
// the a-generator q-th powers, and the normal closure of the a_i a_{i+I}^-1:
// elements carry t mod I, an a-vector in (Z/q)^I, and a center value mod q.
// Requires the least certified period of d mod q to divide I, so that the
// folded commutator table d(j) mod q on j in [0, I) is antisymmetric and the
// projection from the infinite group is a homomorphism.
struct GdQuotientParams {
  DFunction d;
  Int q;
  Index fold = 1;          // I
  Index period = 1;        // certified least period of d mod q
  std::vector<Int> dbar;   // d(j) mod q for j in [0, fold)
};

using GdQuotientHandle = std::shared_ptr<const GdQuotientParams>;

GdQuotientHandle make_gd_quotient(const DFunction& d, const Int& q, Index fold,
                                  Index period_bound = 512);

struct GdQuotientElement {
  GdQuotientHandle params;
  Index t = 0;         // [0, fold)
  std::vector<Int> a;  // length fold, entries in [0, q)
  Int c = 0;           // [0, q)

  bool is_identity() const;
  bool operator==(const GdQuotientElement& o) const { return t == o.t && c == o.c && a == o.a; }
  bool operator!=(const GdQuotientElement& o) const { return !(*this == o); }
};

GdQuotientElement gdq_identity(const GdQuotientHandle& h);
GdQuotientElement gdq_gen_t(const GdQuotientHandle& h, const Int& e = 1);
GdQuotientElement gdq_gen_a(const GdQuotientHandle& h, Index i, const Int& e = 1);
GdQuotientElement gdq_gen_c(const GdQuotientHandle& h, const Int& e = 1);

GdQuotientElement gdq_multiply(const GdQuotientElement& x, const GdQuotientElement& y);
GdQuotientElement gdq_inverse(const GdQuotientElement& x);
GdQuotientElement gdq_conjugate(const GdQuotientElement& x, const GdQuotientElement& g);

// Image of a cyclic-center element under the fold; the element's spec must
// carry the same d.
GdQuotientElement gdq_project(const GdQuotientHandle& h, const GroupElement& g);

std::string gdq_render(const GdQuotientElement& x);
Int gdq_order(const GdQuotientHandle& h);  // fold * q^(fold + 1)

enum class GdqConjugacy { kNonConjugate, kConjugate, kInconclusive };

struct GdqConjugacyReport {
  GdqConjugacy status = GdqConjugacy::kInconclusive;
  std::size_t nodes = 0;          // conjugates enumerated
  bool exhaustive_kernel = false; // used the exact method for empty a-parts
};

// Decides conjugacy in the quotient.  Elements with empty a-part admit an
// exact test (conjugators reduce to shift-kernel base vectors); otherwise the
// conjugation orbit of x is closed off by breadth-first search, capped at
// node_cap elements, and an overrun reports kInconclusive rather than a
// verdict.
GdqConjugacyReport gdq_conjugacy(const GdQuotientElement& x, const GdQuotientElement& y,
                                 std::size_t node_cap);

struct SeparationOptions {
  int conj_scan_radius = 4;      // ball radius feeding the reachable-exponent gcd
  Int q_cap = 16;                // center moduli tried: 2..q_cap
  Index period_bound = 512;      // search bound for the period certificate
  Index fold_cap = 4096;         // refuse quotients with more than this many classes
  std::size_t node_cap = 200000; // conjugacy-orbit cap
};

// Parameters of a finite quotient separating the conjugacy classes of g1 and
// g1 c: center modulus q, period of d mod q, base-support radius delta of g1,
// t-exponent of g1, and the index fold I = P q (4 delta + 2) max(1, |n_t|).
// The quotient and the non-conjugacy verification that certified it ride
// along; holders of a certificate can replay the check.
struct SeparationCertificate {
  Int q;
  Index period = 0;
  Index delta = 0;
  Int n_t;
  Index fold = 0;
  Int order;
  GdqConjugacyReport verification;
  GdQuotientHandle quotient;
};

struct SeparationUnknown {
  std::string reason;
};

using SeparationResult = std::variant<SeparationCertificate, SeparationUnknown>;

// Searches for quotient parameters whose finite image separates g1 from
// g1 c, scanning center moduli in increasing order and verifying candidate
// quotients by the conjugacy decision above.  Never returns an unverified
// certificate: a failed or capped verification moves the scan on, and
// exhaustion reports SeparationUnknown with the reasons collected.  Raises
// if c is trivial or non-central, if g1 mixes base and t parts (only pure
// shapes are handled), or if the ball scan proves g1 c conjugate to g1.
SeparationResult separating_parameters(const GroupElement& g1, const GroupElement& c,
                                       const SeparationOptions& opts = {});

}
