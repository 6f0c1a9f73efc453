#pragma once

#include <vector>

#include "hgmoduli/lpoly.hpp"

namespace hgm {

// Torus-fixed cell counts of the Quot compactification of Mor_delta(P^1, G(r,k)):
// counts[i] is the number of i-dimensional cells, i = 0 .. k*delta + r*(k-r).
struct CellCounts {
    unsigned delta = 0;
    std::vector<Int> counts;
};

// Counts the index triples (a, b, c) with
//   b_0 = 0 <= a_1 <= b_1 <= a_2 <= ... <= b_{s-1} <= a_s <= delta = b_s,
//   0 <= c_1 <= ... <= c_s <= r,          s = k - r,
// weighted by sum_j (a_j + c_j (1 + b_j - b_{j-1})), via dynamic programming
// over the columns j with state (b_j, c_j). Requires 1 <= r <= k-1.
CellCounts strom_cell_counts(unsigned r, unsigned k, unsigned delta);

// [Qbar_delta] = sum_i counts[i] L^i; degree exactly k*delta + r*(k-r).
LPoly qbar_class(unsigned r, unsigned k, unsigned delta);

// The punctual-Quot correction class: sum over compositions m in (Z>=0)^s with
// |m| = j of prod_i [P^{m_i}] * L^{sum_i (i-1) m_i}. Depends only on s = k-r.
LPoly omega(unsigned s, unsigned j);

// Coefficients of the multiplicative inverse of sum_j omega(s, j) q^j:
// mho_0 = 1, mho_j = -sum_{i<j} mho_i omega_{j-i}.
LPoly mho(unsigned s, unsigned j);

// [Mor_d(P^1, G(r,k))] = sum_{j<=d} mho_j [Qbar_{d-j}]. Checks that the result
// has the dimension k*d + r*(k-r) of the morphism space.
LPoly mor_class(unsigned r, unsigned k, unsigned d);

} // namespace hgm
