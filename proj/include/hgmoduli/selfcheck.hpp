#pragma once

#include <string>
#include <vector>

#include "hgmoduli/moduli.hpp"

namespace hgm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // first failure, empty when passing
};

// Runs the full verification suite (golden values, closed-form oracles and
// randomized algebraic laws) against the given store. Deterministic.
std::vector<CheckResult> run_selfchecks(ModuliStore& st);

// Independent oracles, also used by the unit tests.
LPoly gaussian_binomial_oracle(unsigned r, unsigned k);
std::vector<Int> strom_counts_brute(unsigned r, unsigned k, unsigned delta);
LPoly falling_product_oracle(unsigned n); // prod_{i<n} (L + 1 - i)

} // namespace hgm
