#pragma once

#include <map>
#include <string>

#include "hgmoduli/lpoly.hpp"
#include "hgmoduli/partition.hpp"

namespace hgm {

// Truncation box for a SymSeries: partitions of weight <= arity, q-exponents
// <= degree. Fixed at creation; binary operations require equal bounds.
struct Bounds {
    unsigned arity = 0;
    unsigned degree = 0;
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct SymKey {
    Partition lambda;
    unsigned d = 0;
    friend bool operator<(const SymKey& a, const SymKey& b) {
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        return a.d < b.d;
    }
    friend bool operator==(const SymKey&, const SymKey&) = default;
};

// A truncated element of K_0^S(MHS)[[q]] in the power-sum basis: a finite map
// (partition, q-degree) -> LPoly. No stored coefficient is zero, and all keys
// respect the bounds. The (empty partition, d = 0) entry is the constant term;
// its vanishing is the admissibility condition for the second plethysm
// argument.
class SymSeries {
public:
    using TermMap = std::map<SymKey, LPoly>;

    explicit SymSeries(Bounds b) : bounds_(b) {}

    static SymSeries zero(Bounds b) { return SymSeries(b); }
    static SymSeries one(Bounds b); // the unit: (empty, 0) -> 1
    static SymSeries s1(Bounds b);  // the composition identity: ((1), 0) -> 1

    const Bounds& bounds() const { return bounds_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LPoly at(const Partition& lambda, unsigned d) const;
    LPoly constant_term() const { return at(Partition(), 0); }
    bool in_f1() const { return constant_term().is_zero(); }

    // Accumulates a term, silently dropping it if out of bounds (truncation),
    // and pruning the entry if the sum vanishes.
    void add_term(const Partition& lambda, unsigned d, const LPoly& c);

    // Copy re-truncated to new bounds. Enlarging keeps all terms; shrinking
    // drops the ones outside.
    SymSeries with_bounds(Bounds b) const;

    // Arity-n slice at q-degree d, as a plain partition -> coefficient map.
    std::map<Partition, LPoly> component(unsigned n, unsigned d) const;

    SymSeries operator-() const;
    friend SymSeries operator+(const SymSeries& a, const SymSeries& b);
    friend SymSeries operator-(const SymSeries& a, const SymSeries& b);
    friend SymSeries operator*(const SymSeries& a, const SymSeries& b); // series_mul
    SymSeries scaled(const LPoly& c) const;
    SymSeries q_shifted(unsigned d_shift) const;
    friend bool operator==(const SymSeries& a, const SymSeries& b) {
        return a.bounds_ == b.bounds_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymSeries& a, const SymSeries& b) { return !(a == b); }

    std::string str(const std::string& symbol = "p") const; // q-degree 0 slice omits q

private:
    Bounds bounds_;
    TermMap terms_;
};

// p_n o b: parts, L-exponents and q-degrees all scale by n. Requires b in F1.
SymSeries adams_series(unsigned n, const SymSeries& b);

// a o b. Linear and multiplicative in a; the coefficients of a and its outer
// q-powers pass through untouched. Requires b in F1 and equal bounds.
SymSeries plethysm(const SymSeries& a, const SymSeries& b);

// D = d/dp_1. The result has arity bound one less than the input (the top
// arity slice of the derivative would need unknown terms above the bound).
SymSeries derive(const SymSeries& a);

// s_n = h_n expanded in the p-basis at q-degree 0, bounds (n, 0), via Newton's
// identity n h_n = sum_{i=1..n} p_i h_{n-i}.
SymSeries h_in_p(unsigned n);

// Rewrite in the h-monomial basis: partition mu stands for h_{mu_1} h_{mu_2}...
using HBasisMap = std::map<SymKey, LPoly>;
HBasisMap to_h_basis(const SymSeries& a);
HBasisMap to_h_basis(const std::map<Partition, LPoly>& component, unsigned d = 0);
// Inverse of to_h_basis (used by the round-trip test and the report builder).
SymSeries from_h_basis(const HBasisMap& h, Bounds b);

// n! times the coefficient of (1^n, d): the underlying non-equivariant class.
LPoly rank_at(const SymSeries& a, unsigned n, unsigned d);
LPoly rank_of_component(const std::map<Partition, LPoly>& component, unsigned n);

// (1 + p_n)^f = sum_j C(f, j) p_n^j, truncated at n*j <= bounds.arity.
SymSeries binomial_power(unsigned n, const LPoly& f, Bounds b);

} // namespace hgm
