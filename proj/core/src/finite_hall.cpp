#include "hallkit/finite_hall.hpp"

#include <stdexcept>

#include "hallkit/errors.hpp"
#include "hallkit/primes.hpp"

namespace hallkit {

void validate_params(const SequenceParams& params) {
  if (params.d.size() != params.q.size())
    throw DomainError("sequence params: d and q lengths differ");
  for (std::size_t j = 0; j < params.d.size(); ++j) {
    if (params.d[j] < 1) throw DomainError("sequence params: d entries must be >= 1");
    if (j > 0 && params.d[j] <= params.d[j - 1])
      throw DomainError("sequence params: d must increase strictly");
    if (params.q[j] < 1) throw DomainError("sequence params: q entries must be >= 1");
  }
}

SpecHandle make_gint_spec(const SequenceParams& params) {
  validate_params(params);
  std::vector<CenterRelation> rels;
  for (std::size_t j = 0; j < params.d.size(); ++j)
    rels.push_back({params.d[j], params.q[j]});
  return make_relation_center(std::move(rels));
}

std::pair<Index, int> fold_c_index(Index i, Index q) {
  Index m = floor_mod(i, 2 * q);
  if (m == 0 || m == q) return {0, 0};
  if (m < q) return {m, 1};
  return {2 * q - m, -1};
}

std::vector<Index> build_Cpq_basis(const Int& p, Index q, const SequenceParams& params) {
  validate_params(params);
  if (q < 2) throw DomainError("finite quotient needs q >= 2");
  std::vector<char> killed(q, 0);
  for (std::size_t j = 0; j < params.d.size(); ++j) {
    if (params.q[j] % p == 0) continue;  // relation absorbed by exponent p
    auto [idx, sign] = fold_c_index(params.d[j], q);
    if (sign != 0) killed[idx] = 1;  // +-d_j mod 2q land on the same class
  }
  std::vector<Index> basis;
  for (Index i = 1; i < q; ++i)
    if (!killed[i]) basis.push_back(i);
  return basis;
}

FiniteHallHandle make_finite_hall(const Int& p, Index q, const SequenceParams& params) {
  if (p < 3 || !is_prime(p)) throw DomainError("finite quotient needs an odd prime p");
  auto out = std::make_shared<FiniteHallParams>();
  out->p = p;
  out->q = q;
  out->seq = params;
  out->basis = build_Cpq_basis(p, q, params);
  out->alive.assign(q, 0);
  for (Index i : out->basis) out->alive[i] = 1;
  using boost::multiprecision::pow;
  out->order = 2 * q * pow(p, static_cast<unsigned>(2 * q + out->basis.size()));
  if (out->order > 2 * q * pow(p, static_cast<unsigned>(4 * q)))
    throw std::logic_error("quotient order bound 2q p^{4q} violated");
  return out;
}

namespace {

void require_same_quotient(const FiniteHallElement& x, const FiniteHallElement& y) {
  if (x.params == y.params) return;
  if (!x.params || !y.params) throw DomainError("finite element without parameters");
  if (x.params->p != y.params->p || x.params->q != y.params->q ||
      x.params->seq.d != y.params->seq.d || x.params->seq.q != y.params->seq.q)
    throw DomainError("finite elements from different quotients");
}

bool spec_matches(const QuotientSpec& spec, const SequenceParams& seq) {
  if (std::holds_alternative<FreeCenter>(spec)) return true;
  const auto* rel = std::get_if<RelationCenter>(&spec);
  if (!rel || rel->relations.size() != seq.d.size()) return false;
  for (std::size_t j = 0; j < seq.d.size(); ++j)
    if (rel->relations[j].index != seq.d[j] || rel->relations[j].modulus != seq.q[j])
      return false;
  return true;
}

}  // namespace

bool FiniteHallElement::is_identity() const {
  if (t != 0 || !c.empty()) return false;
  for (const Int& v : a)
    if (v != 0) return false;
  return true;
}

bool FiniteHallElement::operator==(const FiniteHallElement& o) const {
  require_same_quotient(*this, o);
  return t == o.t && a == o.a && c == o.c;
}

FiniteHallElement hallfinite_identity(const FiniteHallHandle& h) {
  FiniteHallElement e;
  e.params = h;
  e.a.assign(2 * h->q, Int(0));
  return e;
}

FiniteHallElement phi_pq(const GroupElement& g, const FiniteHallHandle& h) {
  if (!h) throw DomainError("finite quotient handle is empty");
  if (!g.spec() || !spec_matches(*g.spec(), h->seq))
    throw DomainError("element's center semantics do not map onto this quotient");
  const Index q = h->q;
  const Int& p = h->p;
  FiniteHallElement out = hallfinite_identity(h);
  out.t = to_index(floor_mod_int(g.t_exp(), Int(2 * q)));
  std::vector<std::pair<Index, Int>> av(g.a_part().begin(), g.a_part().end());
  for (const auto& [i, v] : av) {
    Index m = floor_mod(i, 2 * q);
    out.a[m] = floor_mod_int(out.a[m] + v, p);
  }
  // Folding indices mod 2q can invert the canonical ordering of a-blocks;
  // every inverted pair j < i costs the commutator correction c_{i-j}^{-v_i v_j}.
  std::map<Index, Int> craw;
  for (std::size_t bi = 1; bi < av.size(); ++bi)
    for (std::size_t bj = 0; bj < bi; ++bj) {
      auto [i, vi] = av[bi];
      auto [j, vj] = av[bj];
      if (floor_mod(i, 2 * q) < floor_mod(j, 2 * q)) craw[i - j] -= vi * vj;
    }
  for (const auto& [i, v] : g.c_part()) craw[i] += v;
  for (const auto& [i, v] : craw) {
    auto [m, sign] = fold_c_index(i, q);
    if (sign == 0 || !h->alive[m]) continue;
    Int nv = floor_mod_int(out.c.count(m) ? out.c[m] + sign * v : Int(sign * v), p);
    if (nv == 0)
      out.c.erase(m);
    else
      out.c[m] = nv;
  }
  return out;
}

namespace {

GroupElement lift_to_free(const FiniteHallElement& x) {
  static const SpecHandle free_spec = make_free_center();
  std::vector<std::pair<Index, Int>> av, cv;
  for (Index i = 0; i < static_cast<Index>(x.a.size()); ++i)
    if (x.a[i] != 0) av.push_back({i, x.a[i]});
  for (const auto& [i, v] : x.c) cv.push_back({i, v});
  return GroupElement(free_spec, Int(x.t), SupportMap::from_entries(std::move(av)),
                      SupportMap::from_entries(std::move(cv)));
}

}  // namespace

FiniteHallElement hallfinite_multiply(const FiniteHallElement& x, const FiniteHallElement& y) {
  require_same_quotient(x, y);
  return phi_pq(multiply(lift_to_free(x), lift_to_free(y)), x.params);
}

FiniteHallElement hallfinite_inverse(const FiniteHallElement& x) {
  return phi_pq(inverse(lift_to_free(x)), x.params);
}

std::string hallfinite_render(const FiniteHallElement& x) {
  std::string s;
  if (x.t != 0) s += "t^" + std::to_string(x.t);
  for (Index i = 0; i < static_cast<Index>(x.a.size()); ++i)
    if (x.a[i] != 0) {
      if (!s.empty()) s += " ";
      s += "a_" + std::to_string(i) + "^" + x.a[i].str();
    }
  for (const auto& [i, v] : x.c) {
    if (!s.empty()) s += " ";
    s += "c_" + std::to_string(i) + "^" + v.str();
  }
  return s.empty() ? "1" : s;
}

}  // namespace hallkit
