#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "hallkit/config.hpp"
#include "hallkit/dfunction.hpp"
#include "hallkit/group.hpp"
#include "hallkit/int_types.hpp"
#include "hallkit/witness.hpp"
#include "hallkit/word.hpp"

namespace hallkit {

// Which elements feed the table: the whole word ball, or t-powers only (the
// integer subgroup, where the table collapses to the least-prime-not-dividing
// function).
enum class RfFamily { kBall, kTPowers };

RfFamily rf_family_from_name(std::string_view name);  // "ball" | "t-powers"
std::string rf_family_name(RfFamily family);

struct RfExperiment {
  SpecHandle group;  // the two-generator wreath quotient (trivial center)
  RfFamily family = RfFamily::kBall;
  int max_n = 6;
  int ball_cap = 10;  // refuse tables beyond this radius
};

// Keys: group (lamplighter), family (ball | t-powers), max_n, ball_cap,
// output (ignored here; the command line reads it).  Unknown keys are
// rejected so a config never silently under-specifies a run.
RfExperiment rf_experiment_from_config(const ConfigFile& cfg);

// One table row: among all elements of norm <= n, the one whose minimal
// witness needs the largest finite quotient, together with that witness.
struct RfTableRow {
  int n = 0;
  GroupElement worst;
  WitnessQuotient witness;
  Int order;
};

// Upper envelope over the witness family: for each radius n = 1..max_n,
// witness every candidate of norm <= n and keep the largest resulting
// quotient, breaking order ties toward the canonically smaller element.
// Every returned row has been re-verified, and the order column is
// monotone because the candidate sets are nested.
std::vector<RfTableRow> rf_upper_table(const RfExperiment& ex);

std::string witness_kind_name(WitnessKind kind);
// Header n,worst_element,witness_kind,order; one row per line.
std::string rf_table_csv(const std::vector<RfTableRow>& rows);

// One member of the central quotient family (fold t to order I, center to
// Z/q) that keeps g = c_1^L alive, taking the least legal fold I = the
// certified period of d mod q.  Larger legal folds only grow both orders,
// so bounds checked on these members hold across the family.
struct RfProbeQuotient {
  Int q;
  Index t_order = 0;   // the fold = least certified period of d mod q
  Int c1_order;        // order of the image of c_1, here q
  Int order;           // t_order * q^(t_order + 1)
  bool built = false;  // quotient constructed and the image re-checked
};

struct RfProbeOptions {
  Int q_cap = 9;               // scan center moduli 2..q_cap
  Index period_bound = 32768;  // certificate search bound for each modulus
  Index build_cap = 4096;      // construct quotients whose fold fits this
};

// Lower-bound probe under the cyclic center on a fast-growth d: the element
// g = c_1^L with L = lcm(1..n) has the short witness word
// [t a_0 t^-1, a_0^L] of weight 2L + 6, yet every family member separating
// it needs a c_1-image of order >= n + 1 and a t-image of order >= 3^f(n).
struct RfProbeReport {
  Index n = 0;
  Int L;
  Word witness_word;
  Int witness_weight;
  bool witness_matches = false;  // the word evaluates to c_1^L
  Int c1_floor;                  // n + 1
  Int t_floor;                   // 3^f(n)
  std::vector<RfProbeQuotient> separating;  // q ascending
  bool separable = false;                   // some member kept g alive
  bool bounds_hold = false;  // separable and every member clears both floors
};

RfProbeReport rf_lower_probe(const FastGrowthDParams& params, Index n,
                             const RfProbeOptions& opts = {});

}  // namespace hallkit
