#include "hgmoduli/quot.hpp"

#include <map>
#include <utility>

namespace hgm {

CellCounts strom_cell_counts(unsigned r, unsigned k, unsigned delta) {
    if (r < 1 || r + 1 > k) fail(Errc::bad_range, "strom_cell_counts needs 1 <= r <= k-1");
    const unsigned s = k - r;
    const unsigned dim = k * delta + r * (k - r);

    using State = std::pair<unsigned, unsigned>;           // (b_j, c_j)
    using Weights = std::vector<Int>;                      // index = accumulated weight
    std::map<State, Weights> dp;
    dp[{0u, 0u}] = Weights{Int(1)};

    for (unsigned j = 1; j <= s; ++j) {
        std::map<State, Weights> next;
        for (const auto& [state, weights] : dp) {
            auto [bp, cp] = state;
            for (unsigned b = bp; b <= delta; ++b) {
                for (unsigned c = cp; c <= r; ++c) {
                    // a_j runs over [b_{j-1}, b_j]; each choice adds
                    // a_j + c_j (1 + b_j - b_{j-1}).
                    unsigned base = c * (1 + b - bp);
                    Weights& acc = next[{b, c}];
                    for (unsigned a = bp; a <= b; ++a) {
                        unsigned add = base + a;
                        for (unsigned w = 0; w < weights.size(); ++w) {
                            if (weights[w] == 0) continue;
                            if (acc.size() <= w + add) acc.resize(w + add + 1, Int(0));
                            acc[w + add] += weights[w];
                        }
                    }
                }
            }
        }
        dp = std::move(next);
    }

    CellCounts out;
    out.delta = delta;
    out.counts.assign(dim + 1, Int(0));
    for (const auto& [state, weights] : dp) {
        if (state.first != delta) continue; // the chain must end at b_s = delta
        for (unsigned w = 0; w < weights.size(); ++w) {
            if (weights[w] == 0) continue;
            if (w > dim)
                fail(Errc::internal_inconsistency, "cell weight exceeds Quot-scheme dimension");
            out.counts[w] += weights[w];
        }
    }
    return out;
}

LPoly qbar_class(unsigned r, unsigned k, unsigned delta) {
    CellCounts cc = strom_cell_counts(r, k, delta);
    std::vector<Rat> cs;
    cs.reserve(cc.counts.size());
    for (const Int& m : cc.counts) cs.push_back(Rat(m));
    LPoly p(std::move(cs));
    if (p.degree() != static_cast<int>(k * delta + r * (k - r)))
        fail(Errc::internal_inconsistency, "qbar_class degree mismatch");
    return p;
}

namespace {

void omega_compositions(unsigned s, unsigned remaining, unsigned i, unsigned weight_shift,
                        LPoly factor, LPoly& acc) {
    if (i == s) {
        if (remaining == 0) acc += factor.shifted(weight_shift);
        return;
    }
    for (unsigned m = 0; m <= remaining; ++m)
        omega_compositions(s, remaining - m, i + 1, weight_shift + i * m,
                           factor * projective_class(m), acc);
}

} // namespace

LPoly omega(unsigned s, unsigned j) {
    if (s < 1) fail(Errc::bad_range, "omega needs s >= 1");
    LPoly acc;
    omega_compositions(s, j, 0, 0, LPoly::one(), acc);
    return acc;
}

LPoly mho(unsigned s, unsigned j) {
    if (s < 1) fail(Errc::bad_range, "mho needs s >= 1");
    std::vector<LPoly> m;
    m.reserve(j + 1);
    m.push_back(LPoly::one());
    for (unsigned t = 1; t <= j; ++t) {
        LPoly sum;
        for (unsigned i = 0; i < t; ++i) sum += m[i] * omega(s, t - i);
        m.push_back(-sum);
    }
    return m[j];
}

LPoly mor_class(unsigned r, unsigned k, unsigned d) {
    if (r < 1 || r + 1 > k) fail(Errc::bad_range, "mor_class needs 1 <= r <= k-1");
    const unsigned s = k - r;
    LPoly sum;
    for (unsigned j = 0; j <= d; ++j) sum += mho(s, j) * qbar_class(r, k, d - j);
    if (sum.degree() != static_cast<int>(k * d + r * (k - r)))
        fail(Errc::internal_inconsistency, "mor_class degree != dim Mor_d");
    return sum;
}

} // namespace hgm
