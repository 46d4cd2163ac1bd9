#include "hallkit/gd_quotient.hpp"

#include <deque>
#include <numeric>
#include <unordered_set>

#include "hallkit/ball.hpp"

namespace hallkit {

namespace {

Int int_gcd(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

void check_handle(const GdQuotientHandle& h, const char* what) {
  if (!h) throw DomainError(std::string(what) + ": null quotient handle");
}

void check_same(const GdQuotientElement& x, const GdQuotientElement& y, const char* what) {
  if (!x.params || !y.params || x.params->q != y.params->q ||
      x.params->fold != y.params->fold || x.params->d.id() != y.params->d.id())
    throw DomainError(std::string(what) + ": elements from different quotients");
}

// Central cost of merging A(v) A(w) into A(v + w).  The bilinear kernel
// beta(k) = dbar(k) on the half 2k < fold (0 elsewhere) depends only on the
// index difference, so it is invariant under the shift action -- which is
// what makes the twisted product associative -- and its antisymmetrization
// beta(k) - beta(-k) reproduces the commutator table dbar.
Int beta_kernel(const GdQuotientParams& p, Index k) {
  k = floor_mod(k, p.fold);
  if (k == 0 || 2 * k >= p.fold) return Int(0);
  return p.dbar[static_cast<std::size_t>(k)];
}

Int cross_term(const GdQuotientParams& p, const std::vector<Int>& v, const std::vector<Int>& w) {
  std::vector<Index> vs, ws;
  for (Index m = 0; m < p.fold; ++m) {
    if (v[static_cast<std::size_t>(m)] != 0) vs.push_back(m);
    if (w[static_cast<std::size_t>(m)] != 0) ws.push_back(m);
  }
  Int acc = 0;
  for (Index m : vs)
    for (Index mp : ws)
      acc += v[static_cast<std::size_t>(m)] * w[static_cast<std::size_t>(mp)] * beta_kernel(p, m - mp);
  return floor_mod_int(acc, p.q);
}

std::string node_key(const GdQuotientElement& x) {
  std::string k = std::to_string(x.t);
  k += '|';
  for (const Int& v : x.a) {
    k += v.str();
    k += ',';
  }
  k += '|';
  k += x.c.str();
  return k;
}

}  // namespace

GdQuotientHandle make_gd_quotient(const DFunction& d, const Int& q, Index fold,
                                  Index period_bound) {
  if (q < 2) throw DomainError("gd quotient: center modulus must be >= 2");
  if (fold < 1) throw DomainError("gd quotient: index fold must be >= 1");
  std::optional<Index> period = period_mod(d, q, period_bound);
  if (!period)
    throw DomainError("gd quotient: no certified period of d mod " + q.str() + " up to " +
                      std::to_string(period_bound));
  if (fold % *period != 0)
    throw DomainError("gd quotient: fold " + std::to_string(fold) +
                      " is not a multiple of the least period " + std::to_string(*period));
  auto params = std::make_shared<GdQuotientParams>();
  params->d = d;
  params->q = q;
  params->fold = fold;
  params->period = *period;
  params->dbar.reserve(static_cast<std::size_t>(fold));
  for (Index j = 0; j < fold; ++j) params->dbar.push_back(floor_mod_int(d.eval(j), q));
  if (params->dbar[0] != 0) throw DomainError("gd quotient: d(0) must vanish");
  // The fold is only a group when the commutator table is antisymmetric
  // across the wrap, i.e. d(fold - j) = -d(j) mod q on the whole window.
  for (Index j = 1; j < fold; ++j) {
    Int wrap = params->dbar[static_cast<std::size_t>(fold - j)] +
               params->dbar[static_cast<std::size_t>(j)];
    if (floor_mod_int(wrap, q) != 0)
      throw DomainError("gd quotient: folded d is not antisymmetric at offset " +
                        std::to_string(j) + "; the period certificate does not extend");
  }
  // The self-paired offset fold/2 is its own negative, so no bilinear kernel
  // in the index difference can give it a nonzero commutator.
  if (fold % 2 == 0 && params->dbar[static_cast<std::size_t>(fold / 2)] != 0)
    throw DomainError("gd quotient: d(fold/2) must vanish mod q; the self-paired class " +
                      std::to_string(fold / 2) + " obstructs the fold");
  return params;
}

bool GdQuotientElement::is_identity() const {
  if (t != 0 || c != 0) return false;
  for (const Int& v : a)
    if (v != 0) return false;
  return true;
}

GdQuotientElement gdq_identity(const GdQuotientHandle& h) {
  check_handle(h, "gdq_identity");
  return GdQuotientElement{h, 0, std::vector<Int>(static_cast<std::size_t>(h->fold), Int(0)),
                           Int(0)};
}

GdQuotientElement gdq_gen_t(const GdQuotientHandle& h, const Int& e) {
  GdQuotientElement x = gdq_identity(h);
  x.t = to_index(floor_mod_int(e, Int(h->fold)), "gdq t-exponent");
  return x;
}

GdQuotientElement gdq_gen_a(const GdQuotientHandle& h, Index i, const Int& e) {
  GdQuotientElement x = gdq_identity(h);
  x.a[static_cast<std::size_t>(floor_mod(i, h->fold))] = floor_mod_int(e, h->q);
  return x;
}

GdQuotientElement gdq_gen_c(const GdQuotientHandle& h, const Int& e) {
  GdQuotientElement x = gdq_identity(h);
  x.c = floor_mod_int(e, h->q);
  return x;
}

GdQuotientElement gdq_multiply(const GdQuotientElement& x, const GdQuotientElement& y) {
  check_same(x, y, "gdq_multiply");
  const GdQuotientParams& p = *x.params;
  GdQuotientElement out = gdq_identity(x.params);
  out.t = floor_mod(x.t + y.t, p.fold);
  std::vector<Int> shifted(static_cast<std::size_t>(p.fold));
  for (Index j = 0; j < p.fold; ++j)
    shifted[static_cast<std::size_t>(j)] = y.a[static_cast<std::size_t>(floor_mod(j - x.t, p.fold))];
  for (Index j = 0; j < p.fold; ++j)
    out.a[static_cast<std::size_t>(j)] =
        floor_mod_int(x.a[static_cast<std::size_t>(j)] + shifted[static_cast<std::size_t>(j)], p.q);
  out.c = floor_mod_int(x.c + y.c + cross_term(p, x.a, shifted), p.q);
  return out;
}

GdQuotientElement gdq_inverse(const GdQuotientElement& x) {
  check_same(x, x, "gdq_inverse");
  const GdQuotientParams& p = *x.params;
  GdQuotientElement out = gdq_identity(x.params);
  out.t = floor_mod(-x.t, p.fold);
  for (Index j = 0; j < p.fold; ++j)
    out.a[static_cast<std::size_t>(j)] =
        floor_mod_int(-x.a[static_cast<std::size_t>(floor_mod(j + x.t, p.fold))], p.q);
  // x * out must die in the center too: the cross-term of x.a against its own
  // negation is -cross(x.a, x.a).
  out.c = floor_mod_int(-x.c + cross_term(p, x.a, x.a), p.q);
  return out;
}

GdQuotientElement gdq_conjugate(const GdQuotientElement& x, const GdQuotientElement& g) {
  return gdq_multiply(gdq_multiply(x, g), gdq_inverse(x));
}

GdQuotientElement gdq_project(const GdQuotientHandle& h, const GroupElement& g) {
  check_handle(h, "gdq_project");
  const auto* cyc = std::get_if<CyclicCenter>(g.spec().get());
  if (!cyc || cyc->d.id() != h->d.id())
    throw DomainError("gdq_project: element is not from the cyclic-center group of the same d");
  // Evaluate the normal form A(v) C(c) t^k letter by letter in the fold.
  // Every defining relation (the commutator table mod q, the shift action,
  // a^q, c^q, a_{i+fold} = a_i) holds there, so this is a homomorphism; the
  // twisted products account for all reordering costs.
  GdQuotientElement out = gdq_identity(h);
  for (const auto& [i, v] : g.a_part()) out = gdq_multiply(out, gdq_gen_a(h, i, v));
  out.c = floor_mod_int(out.c + g.c_part().get(1), h->q);
  out.t = to_index(floor_mod_int(g.t_exp(), Int(h->fold)), "gdq projection t");
  return out;
}

std::string gdq_render(const GdQuotientElement& x) {
  check_same(x, x, "gdq_render");
  std::string out = "t^" + std::to_string(x.t);
  for (Index j = 0; j < x.params->fold; ++j)
    if (x.a[static_cast<std::size_t>(j)] != 0)
      out += " a_" + std::to_string(j) + "^" + x.a[static_cast<std::size_t>(j)].str();
  if (x.c != 0) out += " c^" + x.c.str();
  return out;
}

Int gdq_order(const GdQuotientHandle& h) {
  check_handle(h, "gdq_order");
  Int order = h->fold;
  for (Index j = 0; j <= h->fold; ++j) order *= h->q;
  return order;
}

GdqConjugacyReport gdq_conjugacy(const GdQuotientElement& x, const GdQuotientElement& y,
                                 std::size_t node_cap) {
  check_same(x, y, "gdq_conjugacy");
  const GdQuotientParams& p = *x.params;
  GdqConjugacyReport rep;

  // Class invariants: the t-part and the a-mass mod q survive conjugation.
  if (x.t != y.t) {
    rep.status = GdqConjugacy::kNonConjugate;
    return rep;
  }
  Int mx = 0, my = 0;
  bool x_base_empty = true, y_base_empty = true;
  for (Index j = 0; j < p.fold; ++j) {
    mx += x.a[static_cast<std::size_t>(j)];
    my += y.a[static_cast<std::size_t>(j)];
    x_base_empty = x_base_empty && x.a[static_cast<std::size_t>(j)] == 0;
    y_base_empty = y_base_empty && y.a[static_cast<std::size_t>(j)] == 0;
  }
  if (floor_mod_int(mx - my, p.q) != 0) {
    rep.status = GdqConjugacy::kNonConjugate;
    return rep;
  }

  if (x_base_empty && y_base_empty) {
    // Conjugation by t^s fixes such elements and central parts act trivially,
    // so every conjugate is reached by a base vector; keeping the a-part
    // empty forces the vector into ker(1 - sigma^t), the vectors constant on
    // the orbits of the +t shift.  Enumerating that kernel is exact.
    rep.exhaustive_kernel = true;
    if (x.t == 0) {
      rep.status = x == y ? GdqConjugacy::kConjugate : GdqConjugacy::kNonConjugate;
      rep.nodes = 1;
      return rep;
    }
    const Index g0 = std::gcd(x.t, p.fold);
    Int count = 1;
    bool small = true;
    for (Index r = 0; r < g0 && small; ++r) {
      count *= p.q;
      small = count <= Int(node_cap);
    }
    if (small) {
      std::vector<Int> w(static_cast<std::size_t>(g0), Int(0));
      while (true) {
        GdQuotientElement conj = gdq_identity(x.params);
        for (Index j = 0; j < p.fold; ++j)
          conj.a[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j % g0)];
        ++rep.nodes;
        if (gdq_conjugate(conj, x) == y) {
          rep.status = GdqConjugacy::kConjugate;
          return rep;
        }
        std::size_t pos = 0;
        while (pos < w.size()) {
          w[pos] += 1;
          if (w[pos] < p.q) break;
          w[pos] = 0;
          ++pos;
        }
        if (pos == w.size()) break;
      }
      rep.status = GdqConjugacy::kNonConjugate;
      return rep;
    }
    rep.exhaustive_kernel = false;  // kernel too large; fall through to the orbit walk
  }

  // Close the conjugation orbit of x under the generator images.
  std::vector<GdQuotientElement> moves = {gdq_gen_t(x.params), gdq_inverse(gdq_gen_t(x.params)),
                                          gdq_gen_a(x.params, 0),
                                          gdq_inverse(gdq_gen_a(x.params, 0))};
  std::unordered_set<std::string> seen;
  std::deque<GdQuotientElement> queue;
  seen.insert(node_key(x));
  queue.push_back(x);
  if (x == y) {
    rep.status = GdqConjugacy::kConjugate;
    rep.nodes = 1;
    return rep;
  }
  while (!queue.empty()) {
    GdQuotientElement cur = std::move(queue.front());
    queue.pop_front();
    for (const GdQuotientElement& m : moves) {
      GdQuotientElement nxt = gdq_conjugate(m, cur);
      std::string key = node_key(nxt);
      if (!seen.insert(std::move(key)).second) continue;
      if (nxt == y) {
        rep.status = GdqConjugacy::kConjugate;
        rep.nodes = seen.size();
        return rep;
      }
      if (seen.size() >= node_cap) {
        rep.status = GdqConjugacy::kInconclusive;
        rep.nodes = seen.size();
        return rep;
      }
      queue.push_back(std::move(nxt));
    }
  }
  rep.status = GdqConjugacy::kNonConjugate;
  rep.nodes = seen.size();
  return rep;
}

SeparationResult separating_parameters(const GroupElement& g1, const GroupElement& c,
                                       const SeparationOptions& opts) {
  if (!same_spec(*g1.spec(), *c.spec()))
    throw DomainError("separating_parameters: mixed quotient specs");
  const auto* cyc = std::get_if<CyclicCenter>(g1.spec().get());
  if (!cyc) throw DomainError("separating_parameters: the elements must live in a cyclic-center group");
  if (!c.is_central() || c.is_identity())
    throw DomainError("separating_parameters: c must be central and nontrivial");
  if (g1.t_exp() != 0 && !g1.a_part().empty())
    throw DomainError(
        "separating_parameters: only pure shapes are handled (base subgroup, or a t-power)");
  const Int gamma = c.c_part().get(1);

  // Lower bound on the centre exponents reachable by conjugating g1: scan a
  // ball of conjugators and take the gcd.  These exponents form a subgroup,
  // so hitting gamma proves g1 c conjugate to g1 and no quotient separates.
  Int reach = 0;
  Ball ball = enumerate_ball(g1.spec(), opts.conj_scan_radius);
  for (const GroupElement& x : ball.elements) {
    GroupElement z = multiply(conjugate(x, g1), inverse(g1));
    if (!z.is_central()) continue;
    reach = int_gcd(reach, z.c_part().get(1));
  }
  if (reach != 0 && gamma % reach == 0)
    throw DomainError(
        "separating_parameters: g1 c is conjugate to g1 (exponent " + gamma.str() +
        " is reachable); no quotient can separate the pair");

  Index delta = 0;
  if (!g1.a_part().empty()) {
    Index lo = g1.a_part().min_index(), hi = g1.a_part().max_index();
    delta = std::max(lo < 0 ? -lo : lo, hi < 0 ? -hi : hi);
  }
  const Int n_t = g1.t_exp();
  const Int width = Int(4 * delta + 2) * (n_t == 0 ? Int(1) : abs_int(n_t));

  std::string notes;
  for (Int q = 2; q <= opts.q_cap; ++q) {
    if (gamma % int_gcd(reach, q) == 0) continue;  // c dies against known conjugates mod q
    std::optional<Index> period = period_mod(cyc->d, q, opts.period_bound);
    if (!period) {
      notes += "q=" + q.str() + ": no period certificate; ";
      continue;
    }
    Int fold_int = Int(*period) * q * width;
    if (fold_int > opts.fold_cap) {
      notes += "q=" + q.str() + ": fold " + fold_int.str() + " over cap; ";
      continue;
    }
    const Index fold = to_index(fold_int, "separation fold");
    GdQuotientHandle h;
    try {
      h = make_gd_quotient(cyc->d, q, fold, opts.period_bound);
    } catch (const DomainError& e) {
      notes += "q=" + q.str() + ": " + e.what() + "; ";
      continue;
    }
    GdQuotientElement img1 = gdq_project(h, g1);
    GdQuotientElement img2 = gdq_project(h, multiply(g1, c));
    GdqConjugacyReport rep = gdq_conjugacy(img1, img2, opts.node_cap);
    if (rep.status == GdqConjugacy::kNonConjugate) {
      SeparationCertificate cert{q,    *period,          delta, n_t,
                                 fold, gdq_order(h),     rep,   h};
      return cert;
    }
    notes += "q=" + q.str() + (rep.status == GdqConjugacy::kConjugate
                                   ? ": images conjugate; "
                                   : ": verification capped; ");
  }
  return SeparationUnknown{notes.empty() ? "no admissible center modulus up to the cap"
                                         : notes};
}

}
