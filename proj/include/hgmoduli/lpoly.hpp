#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hgmoduli/rational.hpp"

namespace hgm {

// A univariate polynomial in the Lefschetz symbol L with exact rational
// coefficients, stored densely by exponent with no trailing zeros (the empty
// coefficient vector is the zero polynomial). This single representation
// carries every class the pipeline touches, on both the variety and the
// mixed-Hodge side.
class LPoly {
public:
    LPoly() = default;
    explicit LPoly(Rat constant);
    explicit LPoly(std::vector<Rat> coeffs); // normalizes

    static LPoly zero() { return LPoly(); }
    static LPoly one() { return constant(1); }
    static LPoly constant(long value);
    static LPoly lefschetz() { return monomial(1, rat(1)); } // the symbol L
    static LPoly monomial(unsigned exponent, Rat coeff);
    static LPoly from_int_coeffs(std::initializer_list<long> ascending);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(unsigned exponent) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_integral() const;             // all coefficients in Z
    bool is_nonneg_integral() const;      // all coefficients in Z_{>=0}
    bool is_palindromic() const;          // c_i == c_{deg-i}
    Rat eval_rat(const Rat& x) const;
    Rat eval_at_one() const;

    LPoly operator-() const;
    LPoly& operator+=(const LPoly& o);
    LPoly& operator-=(const LPoly& o);
    friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
    friend LPoly operator*(const LPoly& a, const LPoly& b);
    LPoly& operator*=(const LPoly& o) { return *this = *this * o; }
    LPoly scaled(const Rat& c) const;
    LPoly shifted(unsigned exponent_shift) const; // multiply by L^shift
    friend bool operator==(const LPoly& a, const LPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }

    // Rendering. Spaced style: "L^3 - L"; compact style: "L^3-L". When the
    // coefficients have a common denominator > 1, renders "(...)/den".
    std::string str(bool spaced = true, const std::string& symbol = "L") const;
    // Coefficient position in front of a basis monomial: "(L^2+L)/2",
    // "(L^2-L)", bare "L"/"3" for positive monomials.
    std::string coeff_str(const std::string& symbol = "L") const;

private:
    void normalize();
    std::vector<Rat> coeffs_; // coeffs_[i] multiplies L^i
};

// Exact division: returns q with a = b * q, else raises DIVISION_INEXACT
// (divisibility is guaranteed by the theory wherever the pipeline divides).
LPoly poly_exact_div(const LPoly& a, const LPoly& b);

// The Adams/Frobenius substitution L -> L^n.
LPoly poly_adams(const LPoly& a, unsigned n);

// Generalized binomial coefficient C(f, j) = f(f-1)...(f-j+1)/j!.
LPoly binomial_series_coeff(const LPoly& f, unsigned j);

// [P^m] = 1 + L + ... + L^m.
LPoly projective_class(unsigned m);

// [G(r,k)] via [G(r,k)] = [G(r,k-1)] + L^{k-r} [G(r-1,k-1)], with
// [G(0,k)] = [G(k,k)] = 1. Raises BAD_RANGE for r > k.
LPoly grassmannian_class(unsigned r, unsigned k);

} // namespace hgm
