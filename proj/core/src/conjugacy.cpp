#include "hallkit/conjugacy.hpp"

#include <stdexcept>

#include "hallkit/primes.hpp"

namespace hallkit {

namespace {

Index nu3(Index n) {
  Index v = 0;
  while (n % 3 == 0) {
    n /= 3;
    ++v;
  }
  return v;
}

Index pow3(Index e) {
  Index r = 1;
  for (Index k = 0; k < e; ++k) r = checked_mul(r, 3, "power of 3");
  return r;
}

// g = a x + b y with g = gcd(x, y) >= 0.
struct Egcd {
  Int g, a, b;
};

Egcd egcd(Int x, Int y) {
  Egcd r{x, 1, 0};
  Int s = 0, t = 1;
  while (y != 0) {
    Int q = x / y;
    Int tmp = x - q * y;
    x = y;
    y = tmp;
    tmp = r.a - q * s;
    r.a = s;
    s = tmp;
    tmp = r.b - q * t;
    r.b = t;
    t = tmp;
  }
  r.g = x;
  if (r.g < 0) {
    r.g = -r.g;
    r.a = -r.a;
    r.b = -r.b;
  }
  return r;
}

}  // namespace

std::optional<GroupElement> bounded_conjugacy_search(const GroupElement& g1,
                                                     const GroupElement& g2, int radius) {
  if (!same_spec(*g1.spec(), *g2.spec()))
    throw DomainError("bounded_conjugacy_search: mixed quotient specs");
  if (radius < 0 || radius > 10)
    throw DomainError("bounded_conjugacy_search: radius must be in [0, 10]");
  Ball ball = enumerate_ball(g1.spec(), radius);
  for (const GroupElement& x : ball.elements)
    if (conjugate(x, g1) == g2) return x;
  return std::nullopt;
}

Int commutator_with_series(Index n0, Index i, Index j, const DFunction& d) {
  if (n0 < 1) throw DomainError("commutator_with_series: n0 must be >= 1");
  if (i < 0 || i > 16) throw DomainError("commutator_with_series: depth i must be in [0, 16]");
  const Index v = nu3(n0);
  if (j != 0 && nu3(j) < v)
    throw DomainError("commutator_with_series: 3-adic valuation of j must be >= that of n0");
  const Index m = checked_mul(pow3(i), pow3(v), "series modulus");
  // k n0 = j mod 3^{i+v} has a unique solution k in [0, 3^i): divide by 3^v
  // and invert the unit n0 / 3^v mod 3^i.
  const Index u = n0 / pow3(v);
  const Index cube = pow3(i);
  Egcd e = egcd(Int(u), Int(cube));
  if (e.g != 1) throw std::logic_error("commutator_with_series: unit inversion failed");
  Int k = floor_mod_int(Int(floor_mod(j, m) / pow3(v)) * e.a, Int(cube));
  Index jt = checked_mul(to_index(k, "series position"), n0, "series index");
  return d.eval(jt - j);
}

ConjugacyCertificate conj_membership_test(Index i, const Int& p, const HallDParams& params,
                                          Index search_bound) {
  if (i < 1 || i > 10) throw DomainError("conj_membership_test: i must be in [1, 10]");
  if (!is_prime(p)) throw DomainError("conj_membership_test: " + p.str() + " is not prime");
  HallD hd(params);
  if (hd.n0(i) % p != 0)
    throw DomainError("conj_membership_test: p must divide the product of the first i primes");
  Int pi = 1;
  for (Index k = 0; k < i; ++k) pi *= p;
  const Int ni = hd.n_value(i);
  if (ni % pi != 0)
    throw DomainError("conj_membership_test: n(i) is not divisible by p^i (P'(i) consumed p)");
  if (search_bound <= i) throw DomainError("conj_membership_test: search bound must exceed i");

  SpecHandle spec = make_cyclic_center(DFunction::hall(params));
  std::vector<SupportMap::Entry> letters;
  const Index count = pow3(i);
  letters.reserve(static_cast<std::size_t>(count));
  for (Index k = 0; k < count; ++k) letters.emplace_back(k, Int(1));
  GroupElement g1(spec, 0, SupportMap::from_entries(std::move(letters)), SupportMap());
  const Int gamma = ni / pi;
  GroupElement g2 = multiply(g1, gen_c(spec, 1, gamma));

  ConjugacyCertificate cert;
  cert.g1 = g1;
  cert.g2 = g2;

  for (Index j = i + 1; j <= search_bound; ++j) {
    if (hd.p_reduced(j) != p) continue;
    // Conjugation by a_{3^l} multiplies in c_1^{n(l)} for l >= i, so solve
    // alpha n(i) + beta n(j) = n(i)/p^i; the gcd is p-free and divides the
    // target because P'(j) = p strips p out of n(j).
    const Int nj = hd.n_value(j);
    Egcd e = egcd(ni, nj);
    if (gamma % e.g != 0)
      throw std::logic_error("conj_membership_test: gcd does not divide the target exponent");
    const Int scale = gamma / e.g;
    GroupElement x = multiply(gen_a(spec, pow3(i), e.a * scale),
                              gen_a(spec, pow3(j), e.b * scale));
    if (conjugate(x, g1) != g2)
      throw std::logic_error("conj_membership_test: constructed conjugator failed verification");
    cert.status = ConjStatus::kConjugate;
    cert.hit = j;
    cert.conjugator = std::move(x);
    cert.note = "reduced prime " + p.str() + " appears at index " + std::to_string(j);
    return cert;
  }

  std::optional<Index> horizon = params.P.support_horizon();
  if (horizon && search_bound >= *horizon) {
    cert.status = ConjStatus::kNotConjugate;
    cert.note = "reduced primes are identically 1 past index " + std::to_string(*horizon) +
                " and " + p.str() + " never appears after " + std::to_string(i);
  } else {
    cert.status = ConjStatus::kUnknown;
    cert.note = "no hit up to " + std::to_string(search_bound) +
                "; the prime map's support horizon is beyond the scan";
  }
  return cert;
}

}
