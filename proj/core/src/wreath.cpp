#include "hallkit/wreath.hpp"

#include <numeric>

namespace hallkit {

namespace {

void validate(const CyclicWreath& w) {
  if (w.period < 1) throw DomainError("wreath period must be >= 1");
  if (w.base_mod < 0) throw DomainError("wreath base modulus must be >= 0");
  if (w.base_mod == 1) throw DomainError("wreath base modulus 1 is the trivial base");
}

Int reduce_entry(const CyclicWreath& w, const Int& v) {
  return w.base_mod == 0 ? v : floor_mod_int(v, w.base_mod);
}

void check_element(const CyclicWreath& w, const CwElement& x, const char* what) {
  if (static_cast<Index>(x.h.size()) != w.period || x.n < 0 || x.n >= w.period)
    throw DomainError(std::string(what) + ": element does not belong to this wreath product");
}

}  // namespace

CwElement cw_identity(const CyclicWreath& w) {
  validate(w);
  return CwElement{std::vector<Int>(static_cast<std::size_t>(w.period), Int(0)), 0};
}

CwElement cw_gen_a(const CyclicWreath& w, Index i, const Int& e) {
  CwElement x = cw_identity(w);
  x.h[static_cast<std::size_t>(floor_mod(i, w.period))] = reduce_entry(w, e);
  return x;
}

CwElement cw_gen_t(const CyclicWreath& w, const Int& e) {
  CwElement x = cw_identity(w);
  x.n = floor_mod(to_index(floor_mod_int(e, w.period), "wreath shift"), w.period);
  return x;
}

CwElement cw_multiply(const CyclicWreath& w, const CwElement& x, const CwElement& y) {
  validate(w);
  check_element(w, x, "cw_multiply");
  check_element(w, y, "cw_multiply");
  CwElement out = cw_identity(w);
  out.n = floor_mod(x.n + y.n, w.period);
  for (Index j = 0; j < w.period; ++j) {
    // (x.h + sigma^{x.n} y.h)_j, where sigma shifts support upward.
    Index src = floor_mod(j - x.n, w.period);
    out.h[static_cast<std::size_t>(j)] =
        reduce_entry(w, x.h[static_cast<std::size_t>(j)] + y.h[static_cast<std::size_t>(src)]);
  }
  return out;
}

CwElement cw_inverse(const CyclicWreath& w, const CwElement& x) {
  validate(w);
  check_element(w, x, "cw_inverse");
  CwElement out = cw_identity(w);
  out.n = floor_mod(-x.n, w.period);
  for (Index j = 0; j < w.period; ++j) {
    Index src = floor_mod(j + x.n, w.period);
    out.h[static_cast<std::size_t>(j)] = reduce_entry(w, -x.h[static_cast<std::size_t>(src)]);
  }
  return out;
}

CwElement cw_conjugate(const CyclicWreath& w, const CwElement& x, const CwElement& g) {
  return cw_multiply(w, cw_multiply(w, x, g), cw_inverse(w, x));
}

std::string cw_render(const CwElement& x) {
  std::string out = "(";
  for (std::size_t j = 0; j < x.h.size(); ++j) {
    if (j) out += ",";
    out += x.h[j].str();
  }
  out += ";" + std::to_string(x.n) + ")";
  return out;
}

std::string cw_key(const CwElement& x) { return cw_render(x); }

Int cw_group_order(const CyclicWreath& w) {
  validate(w);
  if (w.base_mod == 0) throw DomainError("cw_group_order: integer base is infinite");
  Int order = w.period;
  for (Index j = 0; j < w.period; ++j) order *= w.base_mod;
  return order;
}

WreathCentralizer centralizer_generators(const CyclicWreath& w, const CwElement& g) {
  validate(w);
  check_element(w, g, "centralizer_generators");
  const Index I = w.period;
  const Index g0 = g.n == 0 ? I : std::gcd(g.n, I);
  const Index orbit_len = I / g0;

  WreathCentralizer out{{}, cw_identity(w), 0};

  // One indicator product per orbit of the +n shift; each orbit is a residue
  // class mod g0, and its product is a shift-invariant direction for sigma^n.
  for (Index r = 0; r < g0; ++r) {
    CwElement p = cw_identity(w);
    for (Index k = 0; k < orbit_len; ++k)
      p.h[static_cast<std::size_t>(floor_mod(r + k * g0, I))] = reduce_entry(w, Int(1));
    out.orbit_products.push_back(std::move(p));
  }

  // Coset sums of the base vector over the orbit space Z/g0.  An element
  // (h', e) commutes with g iff e leaves every coset sum fixed and h' solves
  // (1 - sigma^n) h' = (1 - sigma^e) h.
  std::vector<Int> S(static_cast<std::size_t>(g0), Int(0));
  for (Index j = 0; j < I; ++j) S[static_cast<std::size_t>(floor_mod(j, g0))] += g.h[static_cast<std::size_t>(j)];
  if (w.base_mod != 0)
    for (Int& v : S) v = floor_mod_int(v, w.base_mod);

  Index step = g0;
  for (Index e = 1; e < g0; ++e) {
    bool invariant = true;
    for (Index r = 0; r < g0 && invariant; ++r) {
      const Int& lhs = S[static_cast<std::size_t>(floor_mod(r - e, g0))];
      invariant = lhs == S[static_cast<std::size_t>(r)];
    }
    if (invariant) {
      step = e;
      break;
    }
  }
  out.image_step = step;

  // Solve (1 - sigma^n) h' = h - sigma^step h by telescoping along each
  // +n-orbit; the coset-sum invariance makes each cyclic sum vanish.
  CwElement comp = cw_identity(w);
  comp.n = floor_mod(step, I);
  if (g.n != 0) {
    std::vector<Int> v(static_cast<std::size_t>(I));
    for (Index j = 0; j < I; ++j) {
      v[static_cast<std::size_t>(j)] = g.h[static_cast<std::size_t>(j)] -
                                       g.h[static_cast<std::size_t>(floor_mod(j - step, I))];
      if (w.base_mod != 0)
        v[static_cast<std::size_t>(j)] = floor_mod_int(v[static_cast<std::size_t>(j)], w.base_mod);
    }
    for (Index r = 0; r < g0; ++r) {
      Int acc = 0;
      Index j = r;
      for (Index k = 1; k < orbit_len; ++k) {
        j = floor_mod(j + g.n, I);
        acc += v[static_cast<std::size_t>(j)];
        comp.h[static_cast<std::size_t>(j)] = reduce_entry(w, acc);
      }
      Int wrap = acc + v[static_cast<std::size_t>(r)];
      if (w.base_mod != 0) wrap = floor_mod_int(wrap, w.base_mod);
      if (wrap != 0)
        throw DomainError("centralizer_generators: orbit sum obstruction; shift step is wrong");
    }
  }
  out.complement = std::move(comp);

  // The construction is closed-form; fail loudly rather than return a
  // non-commuting generator if any step above were ever out of sync.
  for (const CwElement& p : out.orbit_products)
    if (cw_multiply(w, p, g) != cw_multiply(w, g, p))
      throw DomainError("centralizer_generators: orbit product does not commute");
  if (cw_multiply(w, out.complement, g) != cw_multiply(w, g, out.complement))
    throw DomainError("centralizer_generators: complement does not commute");
  return out;
}

}
