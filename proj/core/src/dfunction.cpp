#include "hallkit/dfunction.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>

#include "hallkit/primes.hpp"

namespace hallkit {

struct PrimeFunction::Impl {
  std::string id;
  std::function<Int(Index)> fn;
  std::optional<Index> horizon;
};

PrimeFunction PrimeFunction::constant_two() {
  PrimeFunction p;
  p.impl_ = std::make_shared<Impl>(Impl{"trivial", [](Index) { return Int(2); }, Index(0)});
  return p;
}

PrimeFunction PrimeFunction::kth_prime() {
  // The (i+1)-st prime never divides the product of its predecessors, so P'
  // is identically 1 from the start.
  PrimeFunction p;
  p.impl_ =
      std::make_shared<Impl>(Impl{"kth-prime", [](Index i) { return nth_prime(i); }, Index(0)});
  return p;
}

PrimeFunction PrimeFunction::scripted(std::vector<Int> script, Int tail) {
  for (const Int& v : script)
    if (!is_prime(v)) throw DomainError("scripted prime function: " + v.str() + " is not prime");
  if (!is_prime(tail)) throw DomainError("scripted prime function: tail " + tail.str() + " is not prime");
  std::string id = "scripted[";
  for (const Int& v : script) id += v.str() + ",";
  id += "tail=" + tail.str() + "]";
  auto sc = std::make_shared<std::vector<Int>>(std::move(script));
  Index horizon = static_cast<Index>(sc->size());
  PrimeFunction p;
  p.impl_ = std::make_shared<Impl>(Impl{std::move(id),
                                        [sc, tail](Index i) {
                                          if (i < 0) throw DomainError("prime function index < 0");
                                          if (static_cast<std::size_t>(i) < sc->size())
                                            return (*sc)[static_cast<std::size_t>(i)];
                                          return tail;
                                        },
                                        horizon});
  return p;
}

Int PrimeFunction::eval(Index i) const {
  if (i < 0) throw DomainError("prime function index < 0");
  return impl_->fn(i);
}

const std::string& PrimeFunction::id() const { return impl_->id; }

std::optional<Index> PrimeFunction::support_horizon() const { return impl_->horizon; }

struct GrowthFunction::Impl {
  std::string id;
  std::function<Int(Index)> fn;
};

GrowthFunction GrowthFunction::identity() {
  return from_callable("identity", [](Index m) { return Int(m); });
}

GrowthFunction GrowthFunction::floor_exp() {
  return from_callable("floor-exp", [](Index m) {
    if (m < 0) throw DomainError("floor_exp argument < 0");
    if (m > 4096) throw DomainError("floor_exp argument too large to materialize");
    mpfr_t x;
    // 1.45 bits per unit of the exponent, plus slack, keeps floor exact.
    mpfr_init2(x, static_cast<mpfr_prec_t>(64 + m * 2));
    mpfr_set_si(x, static_cast<long>(m), MPFR_RNDN);
    mpfr_exp(x, x, MPFR_RNDD);
    mpfr_floor(x, x);
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, 0, x, MPFR_RNDZ);
    std::string digits(s);
    mpfr_free_str(s);
    mpfr_clear(x);
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    if (e <= 0) return Int(0);
    digits.resize(static_cast<std::size_t>(e), '0');
    return Int(digits);
  });
}

GrowthFunction GrowthFunction::from_callable(std::string id, std::function<Int(Index)> fn) {
  GrowthFunction g;
  g.impl_ = std::make_shared<Impl>(Impl{std::move(id), std::move(fn)});
  return g;
}

Int GrowthFunction::eval(Index m) const { return impl_->fn(m); }
const std::string& GrowthFunction::id() const { return impl_->id; }

Index semi_inverse(const GrowthFunction& f, const Int& n, Index search_bound) {
  // Gallop to an upper end, then binary search; monotonicity is a
  // precondition, unboundedness is enforced by the search bound.
  if (f.eval(0) >= n) return 0;
  Index lo = 0, hi = 1;
  while (f.eval(hi) < n) {
    lo = hi;
    if (hi > search_bound)
      throw DomainError("semi_inverse: no m <= " + std::to_string(search_bound) +
                        " with f(m) >= " + n.str());
    hi = checked_mul(hi, 2, "semi_inverse gallop");
  }
  while (lo + 1 < hi) {
    Index mid = lo + (hi - lo) / 2;
    if (f.eval(mid) >= n)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

struct HallD::State {
  HallDParams params;
  mutable std::mutex mu;
  mutable std::vector<Int> p_vals;     // P(0..k)
  mutable std::vector<Int> p_reduced;  // P'(0..k)
  mutable std::vector<Int> n0_vals;    // n0(0..k)
  mutable std::vector<Int> n_vals;     // n(0..k)

  // Fills all caches through index i.  Caller holds mu.
  void ensure_locked(Index i) const {
    while (static_cast<Index>(n_vals.size()) <= i) {
      Index k = static_cast<Index>(n_vals.size());
      Int n0_k = k == 0 ? Int(1) : Int(n0_vals.back() * nth_prime(k - 1));
      n0_vals.push_back(n0_k);
      Int pk = params.P.eval(k);
      bool repeat = false;
      for (const Int& prev : p_vals)
        if (prev == pk) {
          repeat = true;
          break;
        }
      p_vals.push_back(pk);
      Int reduced = (n0_k % pk != 0 || repeat) ? Int(1) : pk;
      p_reduced.push_back(reduced);
      Int base = n0_k / reduced;
      Index e = params.exponent == HallDParams::Exponent::kIPlus1 ? k + 1 : k;
      Int val = 1;
      for (Index j = 0; j < e; ++j) val *= base;
      n_vals.push_back(val);
    }
  }
};

HallD::HallD(HallDParams params) : state_(std::make_shared<State>()) {
  state_->params = std::move(params);
}

namespace {

// 3-adic valuation and the sign of the reduced class: i = 3^v * u with
// 3 not dividing u; the class of u mod 3 picks +-n(v).
struct TriadicClass {
  Index v = 0;
  int sign = 0;
};

TriadicClass triadic_class(Index i) {
  TriadicClass c;
  while (i % 3 == 0) {
    i /= 3;
    ++c.v;
  }
  Index r = floor_mod(i, 3);
  c.sign = r == 1 ? 1 : -1;
  return c;
}

}  // namespace

Int HallD::n0(Index i) const {
  if (i < 0) throw DomainError("n0 index < 0");
  std::lock_guard<std::mutex> lk(state_->mu);
  state_->ensure_locked(i);
  return state_->n0_vals[static_cast<std::size_t>(i)];
}

Int HallD::p_reduced(Index i) const {
  if (i < 0) throw DomainError("P' index < 0");
  std::lock_guard<std::mutex> lk(state_->mu);
  state_->ensure_locked(i);
  return state_->p_reduced[static_cast<std::size_t>(i)];
}

Int HallD::n_value(Index i) const {
  if (i < 0) throw DomainError("n index < 0");
  std::lock_guard<std::mutex> lk(state_->mu);
  state_->ensure_locked(i);
  return state_->n_vals[static_cast<std::size_t>(i)];
}

Int HallD::d(Index i) const {
  if (i == 0) return Int(0);
  TriadicClass c = triadic_class(i);
  Int nv = n_value(c.v);
  return c.sign > 0 ? nv : Int(-nv);
}

const HallDParams& HallD::params() const { return state_->params; }

Int fastgrowth_d(const FastGrowthDParams& params, Index i) {
  if (i == 0) return Int(0);
  TriadicClass c = triadic_class(i);
  Index m_max = semi_inverse(params.f, Int(c.v), params.semi_inverse_bound);
  Int l = 1;
  for (Index m = 2; m <= m_max; ++m) l = boost::multiprecision::lcm(l, Int(m));
  return c.sign > 0 ? l : Int(-l);
}

struct DFunction::Impl {
  std::string id;
  std::function<Int(Index)> fn;
};

DFunction DFunction::hall(HallDParams params) {
  HallD h(params);
  std::string id = "hall(P=" + params.P.id() +
                   ",exp=" + (params.exponent == HallDParams::Exponent::kIPlus1 ? "i+1" : "i") + ")";
  return from_callable(std::move(id), [h](Index i) { return h.d(i); });
}

DFunction DFunction::fast_growth(FastGrowthDParams params) {
  std::string id = "fastgrowth(f=" + params.f.id() + ")";
  return from_callable(std::move(id), [params](Index i) { return fastgrowth_d(params, i); });
}

DFunction DFunction::from_callable(std::string id, std::function<Int(Index)> fn) {
  DFunction d;
  d.impl_ = std::make_shared<Impl>(Impl{std::move(id), std::move(fn)});
  return d;
}

Int DFunction::eval(Index i) const { return impl_->fn(i); }
const std::string& DFunction::id() const { return impl_->id; }

namespace {

// Memoized d(i) mod q over a window, filled lazily.
class DModCache {
 public:
  DModCache(const DFunction& d, Int q) : d_(d), q_(std::move(q)) {}
  const Int& at(Index i) {
    auto it = vals_.find(i);
    if (it != vals_.end()) return it->second;
    return vals_.emplace(i, floor_mod_int(d_.eval(i), q_)).first->second;
  }

 private:
  const DFunction& d_;
  Int q_;
  std::map<Index, Int> vals_;
};

}  // namespace

std::optional<Index> period_mod(const DFunction& d, const Int& q, Index search_bound) {
  if (q < 2) throw DomainError("period_mod needs q >= 2");
  DModCache cache(d, q);
  for (Index t = 1; t <= search_bound; ++t) {
    bool ok = true;
    // Spiral the window outward from 0 so wrong candidates die early.
    for (Index step = 0; step <= 6 * t && ok; ++step) {
      Index i = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
      if (cache.at(i + t) != cache.at(i)) ok = false;
    }
    if (ok) return t;
  }
  return std::nullopt;
}

SeparabilityReport check_separability_criteria(const DFunction& d, const std::vector<Int>& qs,
                                               Index search_bound) {
  SeparabilityReport rep;
  rep.all_periodic = true;
  for (const Int& q : qs) {
    SeparabilityRow row;
    row.q = q;
    row.period = period_mod(d, q, search_bound);
    if (!row.period) rep.all_periodic = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}
