#include "hallkit/witness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hallkit/errors.hpp"
#include "hallkit/laurent.hpp"
#include "hallkit/primes.hpp"

namespace hallkit {

namespace {

int nu2(Index x) {
  int v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  return v;
}

QuadInt quad_scale(const Int& c, const QuadInt& x) { return {c * x.a, c * x.b}; }

std::string scan_desc(Index cls, const Int& coeff, const Int& p, Index twoq) {
  return "c-class " + std::to_string(cls) + " carries " + coeff.str() + " mod " + p.str() +
         " (indices mod " + std::to_string(twoq) + ")";
}

}  // namespace

WitnessQuotient lamplighter_witness(const GroupElement& g) {
  if (!g.spec() || !std::holds_alternative<TrivialCenter>(*g.spec()))
    throw DomainError("lamplighter witness needs the trivial-center group");
  if (g.is_identity()) throw DomainError("lamplighter witness needs g != 1");

  WitnessQuotient w;
  if (g.t_exp() != 0) {
    w.kind = WitnessKind::CyclicZ;
    w.p = find_small_prime_not_dividing(g.t_exp());
    w.order = w.p;
    w.image_desc = "t-exponent " + g.t_exp().str() + " stays nonzero mod " + w.p.str();
  } else {
    const SupportMap& base = g.a_part();
    Index lo = base.min_index(), hi = base.max_index();
    Index n = std::max(lo < 0 ? -lo : lo, hi < 0 ? -hi : hi);
    bool found = false;
    for (Int p = 2; !found; p = next_prime(p)) {
      if (p > 1000000)
        throw std::logic_error("no split prime separates a nonzero base element");
      if (!is_split_prime(p)) continue;
      SplitPrimeWitness spw{p, *sqrt2_mod(p)};
      for (Index pos = 0; pos <= 2 * (n + 1) && !found; ++pos) {
        Index k = pos == 0 ? 0 : (pos % 2 == 1 ? (pos + 1) / 2 : -(pos / 2));
        QuadInt val(0, 0);
        for (const auto& [i, v] : base)
          val = quad_add(val, quad_scale(v, unit_pow(checked_mul(k, i))));
        if (val.is_zero()) continue;
        Int res = residue(val, spw);
        if (res == 0) continue;
        w.kind = WitnessKind::Lamplighter;
        w.p = p;
        w.s = spw.s;
        w.k = k;
        w.r = multiplicative_order(residue(unit_pow(k), spw), p);
        w.order = p * w.r;
        w.image_desc = "base sum " + quad_render(val) + " has residue " + res.str() +
                       " mod " + p.str();
        found = true;
      }
    }
  }
  auto chk = verify_witness(g, w);
  if (!chk.nontrivial) throw std::logic_error("emitted witness failed verification");
  return w;
}

LamplighterImage lamplighter_image(const GroupElement& g, const WitnessQuotient& w) {
  if (w.kind != WitnessKind::Lamplighter) throw DomainError("not a lamplighter witness");
  SplitPrimeWitness spw{w.p, w.s};
  Int rho = residue(unit_pow(w.k), spw);  // validates p, s
  if (rho == 0 || multiplicative_order(rho, w.p) != w.r)
    throw DomainError("malformed witness: r is not the order of the acting unit");
  GroupElement base = project_to_lamplighter(g);
  LamplighterImage im;
  im.base = 0;
  for (const auto& [i, v] : base.a_part())
    im.base = (im.base + v * powmod(rho, floor_mod_int(i, w.p - 1), w.p)) % w.p;
  im.base = floor_mod_int(im.base, w.p);
  im.tau = floor_mod_int(base.t_exp(), w.r);
  return im;
}

LamplighterImage lamplighter_image_mul(const LamplighterImage& x, const LamplighterImage& y,
                                       const WitnessQuotient& w) {
  SplitPrimeWitness spw{w.p, w.s};
  Int rho = residue(unit_pow(w.k), spw);
  LamplighterImage im;
  im.base = floor_mod_int(x.base + powmod(rho, x.tau, w.p) * y.base, w.p);
  im.tau = floor_mod_int(x.tau + y.tau, w.r);
  return im;
}

WitnessCheck verify_witness(const GroupElement& g, const WitnessQuotient& w) {
  switch (w.kind) {
    case WitnessKind::CyclicZ: {
      if (w.p < 2 || !is_prime(w.p)) throw DomainError("malformed witness: p not prime");
      return {floor_mod_int(g.t_exp(), w.p) != 0, w.p};
    }
    case WitnessKind::Lamplighter: {
      auto im = lamplighter_image(g, w);
      return {im.base != 0 || im.tau != 0, w.p * w.r};
    }
    case WitnessKind::HallFinite: {
      auto h = make_finite_hall(w.p, w.q, w.seq);
      auto im = phi_pq(g, h);
      return {!im.is_identity(), h->order};
    }
  }
  throw DomainError("malformed witness: unknown kind");
}

WitnessQuotient gint_witness(const GroupElement& g, const SequenceParams& params) {
  validate_params(params);
  for (std::size_t j = 0; j < params.d.size(); ++j)
    if (nu2(params.d[j]) != static_cast<int>(j) + 1)
      throw DomainError("gint witness needs the 2-adic pattern nu_2(d_j) = j + 1");

  SpecHandle gspec = make_gint_spec(params);
  GroupElement gg = g;
  if (!g.spec()) throw DomainError("element has no center semantics");
  if (!same_spec(*g.spec(), *gspec)) gg = project(g, gspec);
  if (!gg.is_central()) throw DomainError("gint witness needs a central element");
  if (gg.is_identity()) throw DomainError("gint witness needs g != 1 (it reduced to the identity)");

  const SupportMap& c = gg.c_part();
  std::map<Index, std::size_t> dpos;
  for (std::size_t j = 0; j < params.d.size(); ++j) dpos[params.d[j]] = j;
  bool inside = true;
  for (const auto& [i, v] : c)
    if (!dpos.count(i)) {
      inside = false;
      break;
    }

  WitnessQuotient w;
  w.kind = WitnessKind::HallFinite;
  w.seq = params;

  if (inside) {
    // first surviving exponent along the d-sequence
    std::size_t k = dpos.at(c.min_index());
    const Int gamma = c.get(params.d[k]);
    Int p = 0;
    for (const Int& f : prime_factors(params.q[k]))
      if (gamma % f != 0) {
        p = f;
        break;
      }
    if (p == 0)
      throw DomainError("q_" + std::to_string(k) +
                        " is not squarefree enough to split the exponent " + gamma.str());
    w.hall_case = 1;
    w.p = p;
    w.q = Index(1) << (k + 2);
    auto h = make_finite_hall(w.p, w.q, params);
    w.order = h->order;
    auto im = phi_pq(gg, h);
    if (im.is_identity())
      throw std::logic_error("case-1 quotient killed the element despite the 2-adic pattern");
    w.image_desc = scan_desc(im.c.begin()->first, im.c.begin()->second, w.p, 2 * w.q);
    return w;
  }

  // support leaves the d-sequence
  Index n = c.max_index();
  std::size_t k = params.d.size();
  for (std::size_t j = 0; j < params.d.size(); ++j)
    if (params.d[j] > n) {
      k = j;
      break;
    }
  if (k == params.d.size())
    throw DomainError("central support reaches past the toy d-sequence; enlarge params");
  if (params.q[k] == 1)
    throw DomainError("q_" + std::to_string(k) + " = 1 has no prime divisors");

  LaurentPoly ft;
  for (const auto& [i, v] : c) {
    ft.add(i, v);
    ft.add(-i, -v);
  }
  std::vector<Index> exempt{0};
  for (std::size_t j = 0; j < k; ++j) {
    exempt.push_back(params.d[j]);
    exempt.push_back(-params.d[j]);
  }
  Index m0 = Index(1) << (k + 2);

  auto cert = find_reduction_prime(ft, exempt, m0, n, 0.5);
  auto factors = prime_factors(params.q[k]);
  Int needed_past = 0;

  // The reduction prime alone does not promise a surviving class at toy
  // scale: a later d_j need not vanish mod the fold modulus the way the
  // real, primorial-rich sequences do.  Scan (odd prime, surviving class)
  // pairs in certificate order and keep the first quotient that provably
  // retains the element.
  for (Int qo = cert.q; qo <= cert.scan_cap; qo = next_prime(qo)) {
    Index qodd = to_index(qo);
    Index L = checked_mul(m0, qodd);
    if (membership_in_M_plus_Iq(ft, exempt, L)) continue;
    std::set<Index> exempt_cls;
    for (Index l : exempt) exempt_cls.insert(floor_mod(l, L));
    std::vector<std::pair<Index, Int>> survivors;
    for (const auto& [r, v] : laurent_fold(ft, L))
      if (!exempt_cls.count(r)) survivors.push_back({r, v});
    std::sort(survivors.begin(), survivors.end(), [](const auto& x, const auto& y) {
      Int ax = abs_int(x.second), ay = abs_int(y.second);
      return ax != ay ? ax < ay : x.first < y.first;
    });
    for (const auto& [cls, coeff] : survivors) {
      Int p = 0;
      for (const Int& f : factors)
        if (f > abs_int(coeff)) {
          p = f;
          break;
        }
      if (p == 0) {
        needed_past = std::max(needed_past, abs_int(coeff));
        break;  // survivors only grow from here
      }
      Index Q = checked_mul(Index(1) << (k + 1), qodd);
      auto h = make_finite_hall(p, Q, params);
      auto im = phi_pq(gg, h);
      if (im.is_identity()) continue;  // class killed by a later relation at toy scale
      w.hall_case = 2;
      w.p = p;
      w.q = Q;
      w.order = h->order;
      w.image_desc = scan_desc(cls, coeff, p, 2 * Q);
      return w;
    }
  }
  if (needed_past != 0)
    throw DomainError("q_" + std::to_string(k) + " has no prime divisor past " +
                      needed_past.str() + "; enlarge the toy sequences");
  throw DomainError("no fold class survives in any candidate quotient; enlarge the toy sequences");
}

}  // namespace hallkit
