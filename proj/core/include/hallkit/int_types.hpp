#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <string>

#include "hallkit/errors.hpp"

namespace hallkit {

// Arbitrary-precision integer used for every group exponent and every
// number-theoretic quantity.  Generator indices are machine integers; all
// index arithmetic goes through checked helpers so overflow surfaces as a
// DomainError instead of wrapping.
using Int = boost::multiprecision::cpp_int;
using Index = std::int64_t;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline int sign_int(const Int& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// Narrow an Int to Index, e.g. a t-exponent about to be used as a shift.
inline Index to_index(const Int& x, const char* what = "index") {
  if (x > std::numeric_limits<Index>::max() || x < std::numeric_limits<Index>::min())
    throw DomainError(std::string(what) + " out of machine-index range: " + x.str());
  return static_cast<Index>(x);
}

inline Index checked_add(Index a, Index b, const char* what = "index sum") {
  Index r;
  if (__builtin_add_overflow(a, b, &r))
    throw DomainError(std::string(what) + " overflows");
  return r;
}

inline Index checked_mul(Index a, Index b, const char* what = "index product") {
  Index r;
  if (__builtin_mul_overflow(a, b, &r))
    throw DomainError(std::string(what) + " overflows");
  return r;
}

inline Index checked_neg(Index a) {
  if (a == std::numeric_limits<Index>::min()) throw DomainError("index negation overflows");
  return -a;
}

// Euclidean remainder in [0, m), m > 0.
inline Index floor_mod(Index a, Index m) {
  Index r = a % m;
  return r < 0 ? r + m : r;
}

inline Int floor_mod_int(const Int& a, const Int& m) {
  Int r = a % m;
  return r < 0 ? Int(r + m) : r;
}

std::size_t hash_combine(std::size_t seed, std::size_t v);
std::size_t hash_int(const Int& x);

}
