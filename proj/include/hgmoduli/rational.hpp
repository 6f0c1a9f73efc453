#pragma once

#include <gmpxx.h>

#include <string>

#include "hgmoduli/errors.hpp"

namespace hgm {

// Exact scalars. Int is an arbitrary-precision integer; Rat a rational kept in
// canonical form (positive denominator, gcd(num, den) = 1, zero = 0/1), which
// is exactly the normal form mpq_class maintains.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Parses a canonical decimal rational from "num"/"den" strings. Rejects
// malformed digits, den <= 0 and non-reduced fractions; used by the cache
// loader, whose contract is bit-exact round-tripping.
inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    Int n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
        fail(Errc::cache_corrupt, "malformed rational '" + num + "/" + den + "'");
    if (d <= 0)
        fail(Errc::cache_corrupt, "non-positive denominator '" + den + "'");
    Int g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) // note gcd(0, d) = d, so this also rejects any zero other than 0/1
        fail(Errc::cache_corrupt, "non-canonical rational '" + num + "/" + den + "'");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

} // namespace hgm
