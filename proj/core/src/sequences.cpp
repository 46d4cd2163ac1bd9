#include "hallkit/sequences.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>

#include "hallkit/errors.hpp"
#include "hallkit/primes.hpp"

namespace hallkit {

namespace {

// Internal retry signal: the working precision could not decide a comparison.
struct Undecided {
  std::string what;
};

BigFloat ten_pow(long digits, mpfr_prec_t prec) {
  BigFloat b(prec);
  mpfr_ui_pow_ui(b.raw(), 10, static_cast<unsigned long>(digits), MPFR_RNDD);
  return b;
}

// Materialized enclosure, only when the value fits the decimal-digit budget.
std::optional<Interval> materialize_capped(const LogScale& t, long max_digits) {
  auto v = logscale_materialize(t);
  if (!v) return std::nullopt;
  BigFloat cap = ten_pow(max_digits, v->hi.precision());
  if (mpfr_cmp(v->hi.raw(), cap.raw()) >= 0) return std::nullopt;
  return v;
}

Index v2_of(Int x) {
  Index v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  return v;
}

}  // namespace

std::vector<DTerm> build_d(std::size_t count, const SequenceLimits& lim) {
  std::vector<DTerm> out;
  if (count == 0) return out;
  for (int attempt = 0;; ++attempt) {
    mpfr_prec_t prec = lim.precision << attempt;
    out.clear();
    try {
      DTerm d0;
      d0.exact = 30;
      d0.primorial_cutoff = 0;
      d0.target = logscale_from_int(30, prec);
      out.push_back(std::move(d0));
      for (std::size_t n = 1; n < count; ++n) {
        DTerm t;
        t.target = logscale_exp(out[n - 1].target);
        auto v = materialize_capped(t.target, lim.max_d_digits);
        if (!v || out[n - 1].symbolic) {
          t.symbolic = true;
          out.push_back(std::move(t));
          continue;
        }
        Int cur = out[n - 1].exact;
        auto head = iv_compare_int(*v, cur);
        if (!head) throw Undecided{"greedy start comparison"};
        if (*head != 1) throw DomainError("d sequence: the previous term already meets the target");
        // Multiply in 2, 3, 5, ... until the target is certifiably reached;
        // the step before the last prime must certifiably fall short.
        Int prev = cur;
        Index k = 0;
        Index cutoff = 0;
        for (;;) {
          Int p = nth_prime(k++);
          prev = cur;
          cur *= p;
          cutoff = to_index(p, "primorial cutoff");
          auto reached = iv_compare_int(*v, cur);
          if (!reached) throw Undecided{"greedy threshold comparison"};
          if (*reached == -1) break;
        }
        auto minimal = iv_compare_int(*v, prev);
        if (!minimal) throw Undecided{"greedy minimality comparison"};
        if (*minimal != 1) throw DomainError("d sequence: greedy step lost minimality");
        t.exact = cur;
        t.primorial_cutoff = cutoff;
        out.push_back(std::move(t));
      }
      return out;
    } catch (const Undecided& u) {
      if (attempt >= lim.max_precision_doublings)
        throw DomainError("d sequence: " + u.what + " undecided at maximum precision");
    }
  }
}

std::vector<PTerm> build_P(const CompRoot& root, std::size_t count, const SequenceLimits& lim) {
  for (int attempt = 0;; ++attempt) {
    mpfr_prec_t prec = lim.precision << attempt;
    try {
      std::vector<PTerm> out;
      LogScale t = froot_eval_logscale(root, logscale_from_int(30, prec));
      for (std::size_t n = 0; n < count; ++n) {
        PTerm term;
        term.target = t;
        if (auto v = materialize_capped(t, lim.max_prime_digits)) {
          auto c = iv_ceil(*v);
          if (!c) throw Undecided{"prime target ceiling"};
          Int p = next_prime(*c - 1);
          auto window = iv_compare_int(iv_add(*v, *v), p);
          if (!window) throw Undecided{"prime doubling window"};
          if (*window != 1)
            throw DomainError("P sequence: least prime escaped the doubling window");
          term.value = p;
          term.probable = !check_prime(p).deterministic;
        } else {
          term.symbolic = true;
        }
        out.push_back(std::move(term));
        t = froot_iterate_logscale(root, t, 2);
      }
      return out;
    } catch (const Undecided& u) {
      if (attempt >= lim.max_precision_doublings)
        throw DomainError("P sequence: " + u.what + " undecided at maximum precision");
    }
  }
}

QTerm build_q(Index n, const std::vector<PTerm>& P) {
  if (n < 0) throw DomainError("q sequence: index must be nonnegative");
  QTerm q;
  q.n = n;
  bool all_exact = true;
  Int prod = 1;
  for (Index k = 0; k <= 8; ++k) {
    Index i = 5 * n - 5 + 2 * k;
    q.indices.push_back(i);
    Int f = 0;
    if (i < 0) {
      f = 3;
    } else if (static_cast<std::size_t>(i) < P.size() && !P[static_cast<std::size_t>(i)].symbolic) {
      f = P[static_cast<std::size_t>(i)].value;
    }
    if (f == 0) {
      all_exact = false;
      q.symbolic_indices.push_back(i);
    } else {
      prod *= f;
    }
    q.exact_factors.push_back(f);
  }
  if (all_exact) q.exact = prod;
  return q;
}

std::vector<DTerm> d_terms_from_values(const std::vector<Int>& values, const SequenceLimits& lim) {
  std::vector<DTerm> out;
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (values[n] < 2) throw DomainError("d sequence: terms must be at least 2");
    DTerm t;
    t.exact = values[n];
    t.target =
        n == 0 ? logscale_from_int(values[0], lim.precision) : logscale_exp(out[n - 1].target);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<PTerm> p_terms_from_values(const CompRoot& root, const std::vector<Int>& values,
                                       const SequenceLimits& lim) {
  std::vector<PTerm> out;
  LogScale t = froot_eval_logscale(root, logscale_from_int(30, lim.precision));
  for (const Int& v : values) {
    PTerm term;
    term.target = t;
    term.value = v;
    term.probable = !check_prime(v).deterministic;
    out.push_back(std::move(term));
    t = froot_iterate_logscale(root, t, 2);
  }
  return out;
}

namespace {

void check_d_clauses(const std::vector<DTerm>& d, const std::vector<LogScale>& dtors,
                     mpfr_prec_t prec, std::vector<std::string>& fails) {
  for (std::size_t n = 1; n < d.size(); ++n)
    if (d[n].target.height != d[0].target.height + static_cast<Index>(n))
      fails.push_back("d[" + std::to_string(n) + "]: stored target height breaks the chain");
  for (std::size_t n = 0; n < d.size(); ++n) {
    if (d[n].symbolic) continue;
    // Two-adic bound: 2^v2(d_n) < 2 ln ln d_n.
    Interval L = iv_log(iv_log(iv_from_int(d[n].exact, prec)));
    auto two_adic = iv_compare_int(iv_add(L, L), Int(1) << v2_of(d[n].exact));
    if (!two_adic) throw Undecided{"two-adic bound for d"};
    if (*two_adic != 1)
      fails.push_back("d[" + std::to_string(n) + "]: two-adic part outgrows 2 ln ln d");
    if (n == 0) continue;
    if (d[n - 1].symbolic) {
      fails.push_back("d[" + std::to_string(n) + "]: exact term after a symbolic one");
      continue;
    }
    auto v = logscale_materialize(dtors[n]);
    if (!v) {
      fails.push_back("d[" + std::to_string(n) + "]: target not materializable for an exact term");
      continue;
    }
    auto ge = iv_compare_int(*v, d[n].exact);
    if (!ge) throw Undecided{"d growth target comparison"};
    if (*ge != -1) fails.push_back("d[" + std::to_string(n) + "] falls below its growth target");
    // d_n < dtilde_n^{4/3}, exactly as d_n^3 < dtilde_n^4.
    auto ub = iv_compare_int(iv_pow_int(*v, 4), d[n].exact * d[n].exact * d[n].exact);
    if (!ub) throw Undecided{"d 4/3 power comparison"};
    if (*ub != 1)
      fails.push_back("d[" + std::to_string(n) + "] exceeds the 4/3 power of its growth target");
    if (d[n].exact % d[n - 1].exact != 0) {
      fails.push_back("d[" + std::to_string(n) + "]: ratio over the previous term is not integral");
      continue;
    }
    Int ratio = d[n].exact / d[n - 1].exact;
    Int prod = 1, p = 1;
    Index k = 0;
    while (prod < ratio) {
      p = nth_prime(k++);
      prod *= p;
    }
    if (prod != ratio) {
      fails.push_back("d[" + std::to_string(n) +
                      "]: ratio over the previous term is not a primorial");
      continue;
    }
    if (d[n].primorial_cutoff != 0 && Int(d[n].primorial_cutoff) != p)
      fails.push_back("d[" + std::to_string(n) +
                      "]: recorded primorial cutoff disagrees with the ratio");
    for (Index j = 0;; ++j) {
      Int sp = nth_prime(j);
      if (sp > p) break;
      if (d[n].exact % sp != 0)
        fails.push_back("d[" + std::to_string(n) + "]: missing small prime divisor " + sp.str());
    }
    auto minimal = iv_compare_int(*v, d[n - 1].exact * (prod / p));
    if (!minimal) throw Undecided{"d greedy minimality comparison"};
    if (*minimal != 1) fails.push_back("d[" + std::to_string(n) + "]: greedy step is not minimal");
  }
}

void check_p_clauses(const std::vector<PTerm>& P, const std::vector<LogScale>& ptors,
                     const SequenceLimits& lim, std::vector<std::string>& fails) {
  for (std::size_t n = 0; n < P.size(); ++n) {
    if (n + 1 < P.size()) {
      auto inc = logscale_compare(ptors[n], ptors[n + 1]);
      if (!inc) throw Undecided{"P target monotonicity"};
      if (*inc != -1) fails.push_back("P targets fail to increase at " + std::to_string(n));
    }
    if (P[n].symbolic) continue;
    auto pc = check_prime(P[n].value);
    if (!pc.prime) {
      fails.push_back("P[" + std::to_string(n) + "] is not prime");
      continue;
    }
    if (P[n].probable == pc.deterministic)
      fails.push_back("P[" + std::to_string(n) +
                      "]: probable flag inconsistent with the primality test");
    auto v = materialize_capped(ptors[n], lim.max_prime_digits);
    if (!v) {
      fails.push_back("P[" + std::to_string(n) + "]: target not materializable for an exact term");
      continue;
    }
    auto lo = iv_compare_int(*v, P[n].value);
    if (!lo) throw Undecided{"P target comparison"};
    if (*lo != -1) fails.push_back("P[" + std::to_string(n) + "] falls below its target");
    auto window = iv_compare_int(iv_add(*v, *v), P[n].value);
    if (!window) throw Undecided{"P doubling window comparison"};
    if (*window != 1) fails.push_back("P[" + std::to_string(n) + "] escapes the doubling window");
    auto c = iv_ceil(*v);
    if (!c) throw Undecided{"P target ceiling"};
    if (next_prime(*c - 1) != P[n].value)
      fails.push_back("P[" + std::to_string(n) + "] is not the least prime at or above its target");
    for (std::size_t m = 0; m < n; ++m)
      if (!P[m].symbolic && P[m].value == P[n].value)
        fails.push_back("P[" + std::to_string(n) + "] repeats P[" + std::to_string(m) + "]");
  }
}

void check_q_clauses(const std::vector<QTerm>& q, const std::vector<PTerm>& P,
                     std::vector<std::string>& fails) {
  for (const QTerm& t : q) {
    const std::string tag = "q[n=" + std::to_string(t.n) + "]";
    if (t.indices.size() != 9 || t.exact_factors.size() != 9) {
      fails.push_back(tag + ": wrong index count");
      continue;
    }
    Int prod = 1;
    bool all_exact = true;
    for (Index k = 0; k <= 8; ++k) {
      std::size_t ks = static_cast<std::size_t>(k);
      Index want = 5 * t.n - 5 + 2 * k;
      if (t.indices[ks] != want) {
        fails.push_back(tag + ": index pattern broken at position " + std::to_string(k));
        continue;
      }
      Index i = t.indices[ks];
      const Int& f = t.exact_factors[ks];
      if (i < 0) {
        if (f != 3) fails.push_back(tag + ": negative-index factor must be 3");
      } else if (static_cast<std::size_t>(i) < P.size() && !P[static_cast<std::size_t>(i)].symbolic) {
        if (f != P[static_cast<std::size_t>(i)].value)
          fails.push_back(tag + ": factor at index " + std::to_string(i) + " disagrees with P");
      } else if (f != 0) {
        fails.push_back(tag + ": factor recorded for an unresolved prime index " +
                        std::to_string(i));
      }
      if (f == 0)
        all_exact = false;
      else
        prod *= f;
    }
    if (t.exact) {
      if (!all_exact || *t.exact != prod)
        fails.push_back(tag + ": stored product disagrees with its factors");
    }
  }
  for (const QTerm& a : q)
    for (const QTerm& b : q) {
      if (b.n != a.n + 1 || !a.exact || !b.exact) continue;
      if (boost::multiprecision::gcd(*a.exact, *b.exact) != 1)
        fails.push_back("consecutive q terms n=" + std::to_string(a.n) + ", n=" +
                        std::to_string(b.n) + " share a factor");
    }
}

void check_interleaving(const CompRoot& root, const std::vector<LogScale>& dtors,
                        const std::vector<LogScale>& ptors, std::vector<std::string>& fails) {
  for (std::size_t n = 0; n < dtors.size(); ++n) {
    std::size_t i = 5 * n;
    if (i < ptors.size()) {
      LogScale lhs = froot_eval_logscale(root, dtors[n]);
      if (lhs.height != ptors[i].height || logscale_compare(lhs, ptors[i]).has_value())
        fails.push_back("interleaving identity f(dtilde_" + std::to_string(n) + ") = Ptilde_" +
                        std::to_string(i) + " fails");
    }
    if (n >= 1 && 5 * n - 1 < ptors.size()) {
      std::size_t j = 5 * n - 1;
      LogScale lhs = froot_eval_logscale(root, ptors[j]);
      if (lhs.height != dtors[n].height || logscale_compare(lhs, dtors[n]).has_value())
        fails.push_back("interleaving identity f(Ptilde_" + std::to_string(j) + ") = dtilde_" +
                        std::to_string(n) + " fails");
    }
  }
}

}  // namespace

SequenceReport check_sequence_lemmas(const CompRoot& root, const std::vector<DTerm>& d,
                                     const std::vector<PTerm>& P, const std::vector<QTerm>& q,
                                     const SequenceLimits& lim) {
  for (int attempt = 0;; ++attempt) {
    mpfr_prec_t prec = lim.precision << attempt;
    std::vector<std::string> fails;
    try {
      if (!d.empty() && d[0].symbolic) fails.push_back("d[0] must be exact");
      Int seed = (!d.empty() && !d[0].symbolic) ? d[0].exact : Int(30);
      std::vector<LogScale> dtors, ptors;
      if (!d.empty()) {
        dtors.push_back(logscale_from_int(seed, prec));
        for (std::size_t n = 1; n < d.size(); ++n) dtors.push_back(logscale_exp(dtors.back()));
      }
      if (!P.empty()) {
        ptors.push_back(froot_eval_logscale(root, logscale_from_int(seed, prec)));
        for (std::size_t n = 1; n < P.size(); ++n)
          ptors.push_back(froot_iterate_logscale(root, ptors.back(), 2));
      }
      if (!d.empty()) check_d_clauses(d, dtors, prec, fails);
      if (!P.empty()) check_p_clauses(P, ptors, lim, fails);
      check_q_clauses(q, P, fails);
      check_interleaving(root, dtors, ptors, fails);
      SequenceReport rep;
      rep.failures = std::move(fails);
      rep.ok = rep.failures.empty();
      return rep;
    } catch (const Undecided& u) {
      if (attempt >= lim.max_precision_doublings) {
        SequenceReport rep;
        rep.ok = false;
        rep.failures = std::move(fails);
        rep.failures.push_back("undecided at maximum precision: " + u.what);
        return rep;
      }
    }
  }
}

IntermediateReport check_intermediate(const CompRoot& root, Index degree, const Int& eps_num,
                                      const Int& eps_den, const std::vector<LogScale>& grid) {
  if (degree < 1) throw DomainError("intermediate check: degree must be positive");
  if (eps_num < 1 || eps_den < 1 || eps_num > eps_den)
    throw DomainError("intermediate check: eps must be a ratio in (0, 1]");
  IntermediateReport rep;
  std::optional<Interval> min_step;
  for (const LogScale& x : grid) {
    LogScale fx = froot_eval_logscale(root, x);
    auto pc = logscale_compare(fx, logscale_pow_ratio(x, Int(degree), Int(1)));
    rep.poly_cmp.push_back(pc ? *pc : 0);
    LogScale tail = froot_iterate_logscale(root, x, root.order - 1);
    LogScale bound = logscale_exp(logscale_pow_ratio(x, eps_num, eps_den));
    auto ec = logscale_compare(tail, bound);
    rep.eps_cmp.push_back(ec ? *ec : 0);
    auto gc = logscale_compare(fx, x);
    if (!gc || *gc != 1) rep.strict_growth = false;
    if (auto v = logscale_materialize(x)) {
      if (mpfr_cmp_d(v->hi.raw(), 1e6) <= 0) {
        Interval diff = iv_sub(froot_eval(root, *v), *v);
        if (!min_step) {
          min_step = diff;
        } else {
          mpfr_min(min_step->lo.raw(), min_step->lo.raw(), diff.lo.raw(), MPFR_RNDD);
          mpfr_min(min_step->hi.raw(), min_step->hi.raw(), diff.hi.raw(), MPFR_RNDU);
        }
      }
    }
  }
  rep.min_step = std::move(min_step);
  auto suffix_start = [](const std::vector<int>& cmp, int want) -> std::optional<std::size_t> {
    if (cmp.empty()) return std::nullopt;
    std::size_t i = cmp.size();
    while (i > 0 && cmp[i - 1] == want) --i;
    if (i == cmp.size()) return std::nullopt;
    return i;
  };
  rep.poly_crossover = suffix_start(rep.poly_cmp, 1);
  rep.eps_threshold = suffix_start(rep.eps_cmp, -1);
  return rep;
}

}  // namespace hallkit
