#pragma once
#include <vector>

#include "hallkit/int_types.hpp"

// Integer-elimination oracle for finitely presented abelian groups, used to
// cross-check the closed-form centre bases.  Plain integer row/column
// elimination; fine for the tiny relation matrices in these tests.

namespace oracle {

using hallkit::Index;
using hallkit::Int;

using Matrix = std::vector<std::vector<Int>>;

inline void snf_inplace(Matrix& m) {
  if (m.empty()) return;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot in the lower-right block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows && pr == rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = t + 1; i < rows; ++i)
        while (m[i][t] != 0) {
          Int q = m[t][t] == 0 ? Int(0) : Int(m[i][t] / m[t][t]);
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
          if (m[i][t] != 0) {
            std::swap(m[t], m[i]);
            again = true;
          }
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        while (m[t][j] != 0) {
          Int q = m[t][t] == 0 ? Int(0) : Int(m[t][j] / m[t][t]);
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
          if (m[t][j] != 0) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
            again = true;
          }
        }
    }
    ++t;
  }
}

// Cyclic factor orders of Z^gens / rowspan(relations): the diagonal after
// elimination (1s included, 0 marking free factors).  Not necessarily the
// divisibility-chained invariant factors, but any diagonal form decomposes
// the quotient, so orders and counts derived from it are sound.
inline std::vector<Int> diagonal_factors(Matrix relations, std::size_t gens) {
  for (auto& row : relations)
    row.resize(gens, Int(0));
  snf_inplace(relations);
  std::vector<Int> out;
  std::size_t r = std::min(relations.size(), gens);
  for (std::size_t i = 0; i < gens; ++i) {
    Int v = i < r ? (relations[i][i] < 0 ? Int(-relations[i][i]) : relations[i][i]) : Int(0);
    out.push_back(v);
  }
  return out;
}

// |A| for A = Z^gens / rowspan; requires A finite (no zero factors).
inline Int group_order(const Matrix& relations, std::size_t gens) {
  Int prod = 1;
  for (const Int& v : diagonal_factors(relations, gens)) {
    if (v == 0) return 0;  // infinite
    prod *= v;
  }
  return prod;
}

}  // namespace oracle
