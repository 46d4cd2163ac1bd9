#include "hallkit/laurent.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hallkit/errors.hpp"
#include "hallkit/primes.hpp"

namespace hallkit {

LaurentPoly laurent_from_entries(std::vector<std::pair<Index, Int>> entries) {
  return SupportMap::from_entries(std::move(entries));
}

std::map<Index, Int> laurent_fold(const LaurentPoly& f, Index L) {
  if (L < 1) throw DomainError("laurent_fold needs L >= 1");
  std::map<Index, Int> out;
  for (const auto& [i, v] : f) out[floor_mod(i, L)] += v;
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

bool membership_in_M_plus_Iq(const LaurentPoly& f, const std::vector<Index>& exempt,
                             Index L) {
  if (L < 1) throw DomainError("membership_in_M_plus_Iq needs L >= 1");
  std::map<Index, Index> class_rep;  // fold class -> exempt integer owning it
  for (Index l : exempt) {
    Index r = floor_mod(l, L);
    auto [it, inserted] = class_rep.emplace(r, l);
    if (!inserted && it->second != l)
      throw DomainError("exempt degrees collide mod the fold modulus");
  }
  for (const auto& [r, v] : laurent_fold(f, L))
    if (!class_rep.count(r)) return false;
  return true;
}

ReductionCertificate find_reduction_prime(const LaurentPoly& f,
                                          const std::vector<Index>& exempt, Index m0,
                                          Index n, double eps) {
  if (f.empty()) throw DomainError("find_reduction_prime needs f != 0");
  if (m0 < 1) throw DomainError("find_reduction_prime needs m0 >= 1");
  if (n < 1) throw DomainError("find_reduction_prime needs n >= 1");
  if (f.min_index() < -n || f.max_index() > n)
    throw DomainError("find_reduction_prime: support outside [-n, n]");
  std::set<Index> exempt_set(exempt.begin(), exempt.end());
  bool inside_M = true;
  for (const auto& [i, v] : f)
    if (!exempt_set.count(i)) {
      inside_M = false;
      break;
    }
  if (inside_M) throw DomainError("find_reduction_prime: f already lies in M");

  // Scan cap: the analytic bound with a generous constant, widened to at
  // least the cumulative odd-prime threshold of the counting argument.
  Index cap = static_cast<Index>(20.0 * std::pow(static_cast<double>(n), 0.5 + eps)) + 1;
  if (cap < 50) cap = 50;
  {
    Index running = 0;
    for (Int p = 3; running <= 4 * (2 * n + 1); p = next_prime(p)) {
      Index q = to_index(p);
      running = checked_add(running, q - 1);
      if (q > cap) cap = q;
    }
  }

  for (Int p = 3; p <= cap; p = next_prime(p)) {
    Index q = to_index(p);
    Index g = std::gcd(q, m0);
    Index L = checked_mul(m0 / g, q);
    if (membership_in_M_plus_Iq(f, exempt, L)) continue;

    std::set<Index> exempt_classes;
    for (Index l : exempt) exempt_classes.insert(floor_mod(l, L));
    ReductionCertificate cert;
    cert.q = q;
    cert.L = L;
    cert.scan_cap = cap;
    bool found = false;
    for (const auto& [r, v] : laurent_fold(f, L)) {
      if (exempt_classes.count(r)) continue;
      if (!found || abs_int(v) < abs_int(cert.witness_coeff) ||
          (abs_int(v) == abs_int(cert.witness_coeff) && r < cert.witness_class)) {
        cert.witness_class = r;
        cert.witness_coeff = v;
        found = true;
      }
    }
    if (!found) throw std::logic_error("fold disagreed with membership test");
    return cert;
  }
  throw std::logic_error("reduction-prime scan exhausted its cap; lemma violated");
}

}  // namespace hallkit
