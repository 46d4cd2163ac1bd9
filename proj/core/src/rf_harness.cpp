#include "hallkit/rf_harness.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <variant>

#include "hallkit/ball.hpp"
#include "hallkit/errors.hpp"
#include "hallkit/gd_quotient.hpp"
#include "hallkit/quotient.hpp"

namespace hallkit {

namespace {

struct Candidate {
  GroupElement g;
  int norm = 0;
};

std::vector<Candidate> gather_candidates(const RfExperiment& ex) {
  std::vector<Candidate> out;
  if (ex.family == RfFamily::kTPowers) {
    for (int m = 1; m <= ex.max_n; ++m) {
      out.push_back({power(gen_t(ex.group), Int(m)), m});
      out.push_back({power(gen_t(ex.group), Int(-m)), m});
    }
    return out;
  }
  Ball ball = enumerate_ball(ex.group, ex.max_n);
  out.reserve(ball.elements.size());
  for (std::size_t i = 1; i < ball.elements.size(); ++i)  // [0] is the identity
    out.push_back({ball.elements[i], ball.norms[i]});
  return out;
}

}  // namespace

RfFamily rf_family_from_name(std::string_view name) {
  if (name == "ball") return RfFamily::kBall;
  if (name == "t-powers") return RfFamily::kTPowers;
  throw DomainError("rf-table: unknown family '" + std::string(name) + "' (want ball or t-powers)");
}

std::string rf_family_name(RfFamily family) {
  return family == RfFamily::kBall ? "ball" : "t-powers";
}

RfExperiment rf_experiment_from_config(const ConfigFile& cfg) {
  for (const auto& [key, value] : cfg.entries) {
    if (key != "group" && key != "family" && key != "max_n" && key != "ball_cap" && key != "output")
      throw DomainError("rf-table: unknown config key '" + key + "'");
  }
  RfExperiment ex;
  std::string group = cfg.get_or("group", "lamplighter");
  if (group != "lamplighter")
    throw DomainError("rf-table: group must be 'lamplighter', got '" + group + "'");
  ex.group = make_trivial_center();
  ex.family = rf_family_from_name(cfg.get_or("family", "ball"));
  ex.max_n = static_cast<int>(cfg.get_long("max_n", 6));
  ex.ball_cap = static_cast<int>(cfg.get_long("ball_cap", 10));
  return ex;
}

std::vector<RfTableRow> rf_upper_table(const RfExperiment& ex) {
  if (!ex.group) throw DomainError("rf-table: group is unset");
  if (!std::holds_alternative<TrivialCenter>(*ex.group))
    throw DomainError("rf-table: the witness family needs the trivial-center quotient");
  if (ex.max_n < 0) throw DomainError("rf-table: max_n must be nonnegative");
  if (ex.max_n > ex.ball_cap)
    throw DomainError("rf-table: max_n " + std::to_string(ex.max_n) + " exceeds the ball cap " +
                      std::to_string(ex.ball_cap));

  std::vector<Candidate> cands = gather_candidates(ex);
  std::vector<WitnessQuotient> witnesses;
  witnesses.reserve(cands.size());
  for (const Candidate& c : cands) witnesses.push_back(lamplighter_witness(c.g));

  std::vector<RfTableRow> rows;
  for (int n = 1; n <= ex.max_n; ++n) {
    const Candidate* best = nullptr;
    const WitnessQuotient* best_w = nullptr;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (cands[i].norm > n) continue;
      if (!best || witnesses[i].order > best_w->order ||
          (witnesses[i].order == best_w->order && cands[i].g.compare(best->g) < 0)) {
        best = &cands[i];
        best_w = &witnesses[i];
      }
    }
    if (!best) throw DomainError("rf-table: no candidates at radius " + std::to_string(n));
    WitnessCheck chk = verify_witness(best->g, *best_w);
    if (!chk.nontrivial || chk.order != best_w->order)
      throw DomainError("rf-table: a row failed its re-verification");
    if (!rows.empty() && best_w->order < rows.back().order)
      throw DomainError("rf-table: the order column decreased");
    rows.push_back({n, best->g, *best_w, best_w->order});
  }
  return rows;
}

std::string witness_kind_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::CyclicZ: return "cyclic-z";
    case WitnessKind::Lamplighter: return "lamplighter";
    case WitnessKind::HallFinite: return "hall-finite";
  }
  throw DomainError("unknown witness kind");
}

std::string rf_table_csv(const std::vector<RfTableRow>& rows) {
  std::string out = "n,worst_element,witness_kind,order\n";
  for (const RfTableRow& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    out += render(row.worst);
    out += ',';
    out += witness_kind_name(row.witness.kind);
    out += ',';
    out += row.order.str();
    out += '\n';
  }
  return out;
}

RfProbeReport rf_lower_probe(const FastGrowthDParams& params, Index n, const RfProbeOptions& opts) {
  if (n < 1) throw DomainError("rf-probe: n must be positive");
  if (opts.q_cap < 2) throw DomainError("rf-probe: the modulus cap must be at least 2");

  DFunction d = DFunction::fast_growth(params);
  SpecHandle spec = make_cyclic_center(d);

  RfProbeReport rep;
  rep.n = n;
  rep.L = 1;
  for (Index i = 2; i <= n; ++i) rep.L = boost::multiprecision::lcm(rep.L, Int(i));

  Word conj_a = word_t(1).concat(word_a(0, 1)).concat(word_t(-1));
  rep.witness_word = word_commutator(conj_a, word_a(0, rep.L));
  rep.witness_weight = rep.witness_word.weight();

  GroupElement g = power(gen_c(spec, 1), rep.L);
  rep.witness_matches = evaluate(rep.witness_word, spec) == g;
  if (!rep.witness_matches) throw DomainError("rf-probe: the witness word missed c_1^L");

  rep.c1_floor = Int(n) + 1;
  Int fn = params.f.eval(n);
  if (fn < 0 || fn > 1000000) throw DomainError("rf-probe: 3^f(n) is not materializable");
  rep.t_floor = boost::multiprecision::pow(Int(3), fn.convert_to<unsigned>());

  for (Int q = 2; q <= opts.q_cap; ++q) {
    if (rep.L % q == 0) continue;  // this modulus kills g
    auto period = period_mod(d, q, opts.period_bound);
    if (!period) continue;  // no certified family member at this modulus
    RfProbeQuotient row;
    row.q = q;
    row.t_order = *period;
    row.c1_order = q;
    row.order = Int(*period) * boost::multiprecision::pow(q, static_cast<unsigned>(*period + 1));
    if (*period <= opts.build_cap) {
      GdQuotientHandle h = make_gd_quotient(d, q, *period, *period);
      if (gdq_project(h, g).is_identity())
        throw DomainError("rf-probe: a family member failed to separate c_1^L");
      if (gdq_order(h) != row.order) throw DomainError("rf-probe: order bookkeeping disagrees");
      row.built = true;
    }
    rep.separating.push_back(row);
  }

  rep.separable = !rep.separating.empty();
  rep.bounds_hold = rep.separable;
  for (const RfProbeQuotient& row : rep.separating)
    if (row.c1_order < rep.c1_floor || Int(row.t_order) < rep.t_floor) rep.bounds_hold = false;
  return rep;
}

}  // namespace hallkit
