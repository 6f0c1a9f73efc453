// Acceptance suite: runs every verification check (golden values from the
// worked examples, independent closed-form oracles, randomized algebraic
// laws) and prints one pass/fail line per check. Exit 0 iff everything holds.

#include <chrono>
#include <cstdio>

#include "hgmoduli/selfcheck.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    hgm::ModuliStore store;
    auto t0 = clock::now();
    auto results = hgm::run_selfchecks(store);
    auto elapsed = std::chrono::duration<double>(clock::now() - t0).count();

    int failures = 0;
    for (const auto& res : results) {
        std::printf("[%s] %s%s%s\n", res.pass ? "PASS" : "FAIL", res.name.c_str(),
                    res.pass ? "" : " -- ", res.pass ? "" : res.detail.c_str());
        failures += res.pass ? 0 : 1;
    }
    std::printf("%d/%zu checks passed in %.1fs\n", static_cast<int>(results.size()) - failures,
                results.size(), elapsed);
    return failures == 0 ? 0 : 1;
}
