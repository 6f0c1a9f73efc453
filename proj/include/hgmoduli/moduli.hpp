#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hgmoduli/quot.hpp"
#include "hgmoduli/symseries.hpp"

namespace hgm {

// Identifies one memoized cell of the computation. CONFIG cells are keyed
// with r = k = 0 because the configuration series does not depend on the
// target; all other kinds require 1 <= r <= k-1.
enum class Kind { QBAR, Q, OMEGA, MHO, M_OPEN, PHI_BAR, M_BAR, CONFIG };

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);
bool kind_is_scalar(Kind k); // QBAR/Q/OMEGA/MHO hold an LPoly, the rest a component

struct ModuliKey {
    unsigned r = 0, k = 0;
    Kind kind = Kind::QBAR;
    unsigned n = 0, d = 0;

    std::string str() const; // "r:k:KIND:n:d"
    static std::optional<ModuliKey> parse(const std::string& text);

    friend bool operator<(const ModuliKey& a, const ModuliKey& b) {
        auto ta = std::tie(a.r, a.k, a.kind, a.n, a.d);
        auto tb = std::tie(b.r, b.k, b.kind, b.n, b.d);
        return ta < tb;
    }
    friend bool operator==(const ModuliKey&, const ModuliKey&) = default;
};

// One (arity, q-degree) cell of a symmetric series: partition -> coefficient.
using Component = std::map<Partition, LPoly>;

// Write-once memo shared by all queries of a process, optionally seeded from
// and flushed to the JSON cache file. Concurrent readers see either an absent
// key or the final value.
class ModuliStore {
public:
    std::optional<LPoly> poly(const ModuliKey& key) const;
    std::optional<Component> comp(const ModuliKey& key) const;
    void put_poly(const ModuliKey& key, const LPoly& value);
    void put_comp(const ModuliKey& key, const Component& value);

    std::map<ModuliKey, LPoly> polys_snapshot() const;
    std::map<ModuliKey, Component> comps_snapshot() const;

private:
    mutable std::mutex mu_;
    std::map<ModuliKey, LPoly> polys_;
    std::map<ModuliKey, Component> comps_;
};

// Memoized wrappers over quotclasses.
LPoly qbar(ModuliStore& st, unsigned r, unsigned k, unsigned delta);
LPoly omega_class(ModuliStore& st, unsigned r, unsigned k, unsigned j);
LPoly mho_class(ModuliStore& st, unsigned r, unsigned k, unsigned j);
LPoly mor(ModuliStore& st, unsigned r, unsigned k, unsigned d);

// The equivariant class of the configuration spaces F(P^1, n), n <= arity_max:
// (1 + p_1) * prod_n (1 + p_n)^{M_n(L)} with the necklace polynomial exponents
// M_n = (1/n) sum_{t | n} mu(n/t) L^t. Lives at q-degree 0.
SymSeries config_class(ModuliStore& st, unsigned arity_max);
Component config_component(ModuliStore& st, unsigned n);

// The necklace polynomial exponent above (exposed for tests).
LPoly necklace_polynomial(unsigned n);

// e(M_{0,n}(G,d)): mor_d * config_n / (L^3 - L) coefficientwise for
// n + 3d >= 3, and 0 for the unstable cells d = 0, n <= 2.
Component open_stratum_component(ModuliStore& st, unsigned r, unsigned k, unsigned n, unsigned d);
SymSeries open_stratum(ModuliStore& st, unsigned r, unsigned k, Bounds bounds);

// e(Phi_{n,d}) = D(e(M)) / e(G), assembled cell by cell (the derivation is
// cell-local, reading the arity n+1 open cell).
Component phi_open_component(ModuliStore& st, unsigned r, unsigned k, unsigned n, unsigned d);
SymSeries phi_open(ModuliStore& st, unsigned r, unsigned k, Bounds bounds);

// The unique truncated solution of x = phi o (s1 + x), by fixed-point
// iteration from 0; each pass finalizes all cells of the next total weight,
// so at most (arity+1)*(degree+1) passes are needed. Cells with
// n + d <= bounds.arity are bound-independent and get memoized.
SymSeries phi_bar(ModuliStore& st, unsigned r, unsigned k, Bounds bounds);
// Test hook: raw iteration with an explicit pass budget (NO_CONVERGENCE when
// exhausted).
SymSeries phi_bar_fixed_point(const SymSeries& phi, unsigned max_passes);

// The (n,d) cell of e(Mbar) = e(M) o (s1 + e(Phibar))
//                             + e(G) (s2 o e(Phibar) - e(Phibar)^2).
Component mbar_class(ModuliStore& st, unsigned r, unsigned k, unsigned n, unsigned d);

struct HodgeReport {
    unsigned r = 0, k = 0, n = 0, d = 0;
    bool empty = false;     // the moduli space is empty; everything vanishes
    int dim = -1;           // complex dimension (degree of the rank class)
    Component p_basis;
    HBasisMap h_basis;
    LPoly rank;                       // R(L), the non-equivariant class
    std::vector<Int> betti;           // b_0 .. b_{2 dim}, odd entries zero
    std::vector<std::pair<unsigned, Int>> e_poly; // (i, coeff of t^i u^i)
    Int euler = 0;                    // R(1)
};

// Assembles the full report; raises INTEGRALITY_FAILURE if the rank class is
// not a nonnegative integer polynomial.
HodgeReport hodge_report(ModuliStore& st, unsigned r, unsigned k, unsigned n, unsigned d);

} // namespace hgm
