#include "hgmoduli/lpoly.hpp"

#include <algorithm>
#include <sstream>

namespace hgm {

LPoly::LPoly(Rat constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

LPoly::LPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

LPoly LPoly::constant(long value) { return LPoly(rat(value)); }

LPoly LPoly::monomial(unsigned exponent, Rat coeff) {
    LPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(exponent + 1, rat(0));
        p.coeffs_[exponent] = std::move(coeff);
    }
    return p;
}

LPoly LPoly::from_int_coeffs(std::initializer_list<long> ascending) {
    std::vector<Rat> cs;
    cs.reserve(ascending.size());
    for (long v : ascending) cs.push_back(rat(v));
    return LPoly(std::move(cs));
}

void LPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat LPoly::coeff(unsigned exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : rat(0);
}

bool LPoly::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return is_integer(c); });
}

bool LPoly::is_nonneg_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return is_integer(c) && c >= 0; });
}

bool LPoly::is_palindromic() const {
    size_t n = coeffs_.size();
    for (size_t i = 0; 2 * i < n; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    return true;
}

Rat LPoly::eval_rat(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat LPoly::eval_at_one() const {
    Rat acc(0);
    for (const Rat& c : coeffs_) acc += c;
    return acc;
}

LPoly LPoly::operator-() const {
    LPoly r(*this);
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

LPoly& LPoly::operator+=(const LPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
    if (a.is_zero() || b.is_zero()) return LPoly();
    LPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

LPoly LPoly::scaled(const Rat& c) const {
    if (c == 0) return LPoly();
    LPoly r(*this);
    for (Rat& x : r.coeffs_) x *= c;
    return r;
}

LPoly LPoly::shifted(unsigned exponent_shift) const {
    if (is_zero() || exponent_shift == 0) return *this;
    LPoly r;
    r.coeffs_.assign(coeffs_.size() + exponent_shift, rat(0));
    std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + exponent_shift);
    return r;
}

namespace {

std::string int_term(const Int& mag, unsigned exp, const std::string& sym, bool spaced) {
    std::ostringstream os;
    if (exp == 0) {
        os << mag.get_str();
    } else {
        if (mag != 1) os << mag.get_str() << (spaced ? " " : "");
        os << sym;
        if (exp > 1) os << "^" << exp;
    }
    return os.str();
}

// Renders an integer polynomial descending by exponent: "L^3 - L" / "L^3-L".
std::string int_poly_str(const std::vector<Int>& cs, const std::string& sym, bool spaced) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = cs.size(); i-- > 0;) {
        if (cs[i] == 0) continue;
        Int mag = cs[i] < 0 ? Int(-cs[i]) : cs[i];
        if (first) {
            if (cs[i] < 0) os << "-";
            first = false;
        } else {
            os << (spaced ? (cs[i] < 0 ? " - " : " + ") : (cs[i] < 0 ? "-" : "+"));
        }
        os << int_term(mag, static_cast<unsigned>(i), sym, spaced);
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

std::string LPoly::str(bool spaced, const std::string& symbol) const {
    if (is_zero()) return "0";
    Int den(1);
    for (const Rat& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> ints;
    ints.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) {
        Rat scaled = c * Rat(den);
        ints.push_back(scaled.get_num());
    }
    if (den == 1) return int_poly_str(ints, symbol, spaced);
    return "(" + int_poly_str(ints, symbol, false) + ")/" + den.get_str();
}

std::string LPoly::coeff_str(const std::string& symbol) const {
    if (is_zero()) return "0";
    Int den(1);
    for (const Rat& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    size_t nonzero = 0;
    for (const Rat& c : coeffs_)
        if (c != 0) ++nonzero;
    if (den == 1 && nonzero == 1 && coeffs_.back() > 0) return str(false, symbol);
    std::vector<Int> ints;
    for (const Rat& c : coeffs_) ints.push_back(Rat(c * Rat(den)).get_num());
    std::string body = "(" + int_poly_str(ints, symbol, false) + ")";
    if (den != 1) body += "/" + den.get_str();
    return body;
}

LPoly poly_exact_div(const LPoly& a, const LPoly& b) {
    if (b.is_zero()) fail(Errc::division_inexact, "division by zero polynomial");
    if (a.is_zero()) return LPoly();
    if (a.degree() < b.degree())
        fail(Errc::division_inexact, "degree of dividend below divisor");
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quot(a.degree() - b.degree() + 1, rat(0));
    const Rat& lead = b.coeffs().back();
    for (size_t i = quot.size(); i-- > 0;) {
        Rat q = rem[i + b.degree()] / lead;
        quot[i] = q;
        if (q == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) rem[i + j] -= q * b.coeffs()[j];
    }
    for (const Rat& c : rem)
        if (c != 0) fail(Errc::division_inexact, "nonzero remainder: (" + a.str(false) + ") / (" + b.str(false) + ")");
    return LPoly(std::move(quot));
}

LPoly poly_adams(const LPoly& a, unsigned n) {
    if (n == 0) fail(Errc::bad_range, "Adams operation needs n >= 1");
    if (n == 1 || a.is_zero()) return a;
    std::vector<Rat> cs(static_cast<size_t>(a.degree()) * n + 1, rat(0));
    for (unsigned i = 0; i <= static_cast<unsigned>(a.degree()); ++i) cs[i * n] = a.coeff(i);
    return LPoly(std::move(cs));
}

LPoly binomial_series_coeff(const LPoly& f, unsigned j) {
    LPoly prod = LPoly::one();
    for (unsigned i = 0; i < j; ++i) prod *= f - LPoly::constant(static_cast<long>(i));
    return prod.scaled(Rat(1) / Rat(factorial(j)));
}

LPoly projective_class(unsigned m) {
    std::vector<Rat> cs(m + 1, rat(1));
    return LPoly(std::move(cs));
}

LPoly grassmannian_class(unsigned r, unsigned k) {
    if (r > k) fail(Errc::bad_range, "grassmannian_class needs 0 <= r <= k");
    // row[j] holds [G(j, kk)]; entries above kk stay at the base value 1
    // (= [G(j, j)]) until the iteration reaches them.
    std::vector<LPoly> row(r + 1, LPoly::one());
    for (unsigned kk = 2; kk <= k; ++kk)
        for (unsigned j = std::min(r, kk - 1); j >= 1; --j)
            row[j] = row[j] + row[j - 1].shifted(kk - j);
    return row[r];
}

} // namespace hgm
