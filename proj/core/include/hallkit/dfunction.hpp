#pragma once
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hallkit/int_types.hpp"

namespace hallkit {

// Total map from naturals to primes.  The interesting instances (enumerations
// of undecidable sets) are not realizable, so this is a pluggable interface
// with computable stand-ins.
class PrimeFunction {
 public:
  // Constant 2; its derived P' is identically 1.
  static PrimeFunction constant_two();
  // i -> (i+1)-st prime (p_0 = 2); P' is also identically 1 here, since the
  // i-th prime never divides the product of its predecessors.
  static PrimeFunction kth_prime();
  // Explicit finite script, then a constant tail.
  static PrimeFunction scripted(std::vector<Int> script, Int tail);

  Int eval(Index i) const;
  const std::string& id() const;
  // Index beyond which the derived P' is provably identically 1, when known.
  // For a script this is the script length (past it every value repeats); for
  // the built-in constant and enumeration instances it is 0.
  std::optional<Index> support_horizon() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Monotone nondecreasing integer function with a name, for the fast-growth
// d-functions and their semi-inverses.
class GrowthFunction {
 public:
  static GrowthFunction identity();
  static GrowthFunction floor_exp();  // m -> floor(e^m)
  static GrowthFunction from_callable(std::string id, std::function<Int(Index)> fn);

  Int eval(Index m) const;
  const std::string& id() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Least m >= 0 with f(m) >= n; DomainError if none up to search_bound.
Index semi_inverse(const GrowthFunction& f, const Int& n, Index search_bound = 1 << 20);

struct HallDParams {
  // The displayed closed form uses exponent i in n(i) = (n0(i)/P'(i))^i; the
  // worked value sequence (2^2, 6^3, 30^4 at positions 3, 9, 27) uses i+1.
  // Both are available; kIPlus1 reproduces the value sequence.
  enum class Exponent { kI, kIPlus1 };
  PrimeFunction P = PrimeFunction::constant_two();
  Exponent exponent = Exponent::kIPlus1;
};

// The arithmetic pack behind the first d-function family: n0(i) is the
// product of the first i primes, P'(i) filters P(i) down to first-time values
// dividing n0(i), and n(i) = (n0(i)/P'(i))^e.
class HallD {
 public:
  explicit HallD(HallDParams params);

  Int d(Index i) const;
  Int n0(Index i) const;
  Int p_reduced(Index i) const;  // P'(i)
  Int n_value(Index i) const;
  const HallDParams& params() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

struct FastGrowthDParams {
  GrowthFunction f = GrowthFunction::identity();
  Index semi_inverse_bound = 1 << 20;
};

// Value-semantic handle to an antisymmetric d: Z -> Z, carrying a stable id
// used in certificates and config hashes.
class DFunction {
 public:
  static DFunction hall(HallDParams params);
  static DFunction fast_growth(FastGrowthDParams params);
  static DFunction from_callable(std::string id, std::function<Int(Index)> fn);

  Int eval(Index i) const;
  const std::string& id() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// d(i) for the fast-growth family: +-lcm{1..f^-1(j)} on the 3-adic class of
// i, with the empty lcm equal to 1.
Int fastgrowth_d(const FastGrowthDParams& params, Index i);

// Least period T <= search_bound with d(i+T) = d(i) mod q for all i in
// [-3T, 3T] (a windowed certificate, not a global proof); nullopt if none.
std::optional<Index> period_mod(const DFunction& d, const Int& q, Index search_bound);

struct SeparabilityRow {
  Int q;
  std::optional<Index> period;
};
struct SeparabilityReport {
  std::vector<SeparabilityRow> rows;
  bool all_periodic = false;  // evidence over the tested q's only
};
SeparabilityReport check_separability_criteria(const DFunction& d, const std::vector<Int>& qs,
                                               Index search_bound);

}
