#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "hallkit/bigfloat.hpp"
#include "hallkit/int_types.hpp"
#include "hallkit/logscale.hpp"

namespace hallkit {

using Rational = boost::multiprecision::cpp_rational;

// A compositional root of exp: a continuous increasing map f on [0, infinity)
// with f^order = exp, assembled from breakpoints 0 = c_0 < ... < c_order = 1.
// On [c_i, c_{i+1}] (i <= order-2) the map is the affine bijection onto
// [c_{i+1}, c_{i+2}]; on [c_{order-1}, 1] it is exp of the affine bijection
// onto [c_0, c_1].  Above 1 the map extends by f(exp(x)) = exp(f(x)), so the
// affine legs compose around the top leg to give exp exactly.
struct CompRoot {
  Index order = 10;
  std::vector<Rational> cuts;  // size order + 1, exact
};

CompRoot make_comp_root(Index order);
CompRoot make_comp_root(Index order, const std::vector<Rational>& interior_cuts);

// Certified enclosure of f(x); pre x.lo >= 0.
Interval froot_eval(const CompRoot& r, const Interval& x);
Interval froot_iterate(const CompRoot& r, const Interval& x, Index times);

// The same map on tower representations, with exact height bookkeeping: the
// mantissa moves by one segment, carrying into the next height on the top
// leg.  Works at any height.
LogScale froot_eval_logscale(const CompRoot& r, const LogScale& x);
LogScale froot_iterate_logscale(const CompRoot& r, const LogScale& x, Index times);

}  // namespace hallkit
