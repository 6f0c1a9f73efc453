#include "hgmoduli/symseries.hpp"

#include <sstream>

namespace hgm {

namespace {

void require_same_bounds(const SymSeries& a, const SymSeries& b, const char* op) {
    if (!(a.bounds() == b.bounds()))
        fail(Errc::bound_mismatch, std::string(op) + " needs operands with equal bounds");
}

void require_f1(const SymSeries& b, const char* op) {
    if (!b.in_f1())
        fail(Errc::not_in_f1, std::string(op) + " needs a second argument with zero constant term");
}

} // namespace

SymSeries SymSeries::one(Bounds b) {
    SymSeries s(b);
    s.add_term(Partition(), 0, LPoly::one());
    return s;
}

SymSeries SymSeries::s1(Bounds b) {
    SymSeries s(b);
    s.add_term(Partition::single(1), 0, LPoly::one());
    return s;
}

LPoly SymSeries::at(const Partition& lambda, unsigned d) const {
    auto it = terms_.find(SymKey{lambda, d});
    return it == terms_.end() ? LPoly() : it->second;
}

void SymSeries::add_term(const Partition& lambda, unsigned d, const LPoly& c) {
    if (c.is_zero()) return;
    if (lambda.weight() > bounds_.arity || d > bounds_.degree) return;
    SymKey key{lambda, d};
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymSeries SymSeries::with_bounds(Bounds b) const {
    SymSeries r(b);
    for (const auto& [key, c] : terms_) r.add_term(key.lambda, key.d, c);
    return r;
}

std::map<Partition, LPoly> SymSeries::component(unsigned n, unsigned d) const {
    std::map<Partition, LPoly> out;
    for (const auto& [key, c] : terms_)
        if (key.d == d && key.lambda.weight() == n) out.emplace(key.lambda, c);
    return out;
}

SymSeries SymSeries::operator-() const {
    SymSeries r(bounds_);
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

SymSeries operator+(const SymSeries& a, const SymSeries& b) {
    require_same_bounds(a, b, "series addition");
    SymSeries r(a);
    for (const auto& [key, c] : b.terms_) r.add_term(key.lambda, key.d, c);
    return r;
}

SymSeries operator-(const SymSeries& a, const SymSeries& b) {
    require_same_bounds(a, b, "series subtraction");
    SymSeries r(a);
    for (const auto& [key, c] : b.terms_) r.add_term(key.lambda, key.d, -c);
    return r;
}

SymSeries operator*(const SymSeries& a, const SymSeries& b) {
    require_same_bounds(a, b, "series multiplication");
    SymSeries r(a.bounds());
    for (const auto& [ka, ca] : a.terms_) {
        unsigned wa = ka.lambda.weight();
        for (const auto& [kb, cb] : b.terms_) {
            if (wa + kb.lambda.weight() > r.bounds().arity) continue;
            if (ka.d + kb.d > r.bounds().degree) continue;
            r.add_term(ka.lambda.merged(kb.lambda), ka.d + kb.d, ca * cb);
        }
    }
    return r;
}

SymSeries SymSeries::scaled(const LPoly& c) const {
    SymSeries r(bounds_);
    if (c.is_zero()) return r;
    for (const auto& [key, v] : terms_) r.add_term(key.lambda, key.d, v * c);
    return r;
}

SymSeries SymSeries::q_shifted(unsigned d_shift) const {
    SymSeries r(bounds_);
    for (const auto& [key, v] : terms_) r.add_term(key.lambda, key.d + d_shift, v);
    return r;
}

std::string SymSeries::str(const std::string& symbol) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.coeff_str();
        std::string mono = key.lambda.str(symbol);
        if (mono == "1" && key.d == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << " ";
            if (mono != "1") os << mono;
            if (key.d > 0) os << (mono != "1" ? " " : "") << "q" << (key.d > 1 ? "^" + std::to_string(key.d) : "");
        }
    }
    return os.str();
}

SymSeries adams_series(unsigned n, const SymSeries& b) {
    if (n == 0) fail(Errc::bad_range, "adams_series needs n >= 1");
    require_f1(b, "adams_series");
    if (n == 1) return b;
    SymSeries r(b.bounds());
    for (const auto& [key, c] : b.terms()) {
        if (key.lambda.weight() * n > b.bounds().arity) continue;
        if (key.d * n > b.bounds().degree) continue;
        r.add_term(key.lambda.scaled(n), key.d * n, poly_adams(c, n));
    }
    return r;
}

SymSeries plethysm(const SymSeries& a, const SymSeries& b) {
    require_same_bounds(a, b, "plethysm");
    require_f1(b, "plethysm");
    const Bounds bounds = a.bounds();

    // Adams images of b per part value, then partition products built
    // incrementally (each partition costs one series product over the
    // partition with its largest part removed).
    std::map<unsigned, SymSeries> adams_cache;
    std::map<Partition, SymSeries> prod_cache;
    prod_cache.emplace(Partition(), SymSeries::one(bounds));

    std::function<const SymSeries&(const Partition&)> product =
        [&](const Partition& lambda) -> const SymSeries& {
        auto it = prod_cache.find(lambda);
        if (it != prod_cache.end()) return it->second;
        unsigned m = lambda.largest_part();
        auto am = adams_cache.find(m);
        if (am == adams_cache.end()) am = adams_cache.emplace(m, adams_series(m, b)).first;
        SymSeries value = product(lambda.without_one(m)) * am->second;
        return prod_cache.emplace(lambda, std::move(value)).first->second;
    };

    SymSeries r(bounds);
    for (const auto& [key, c] : a.terms()) {
        const SymSeries& factors = product(key.lambda);
        for (const auto& [fk, fc] : factors.terms()) r.add_term(fk.lambda, fk.d + key.d, fc * c);
    }
    return r;
}

SymSeries derive(const SymSeries& a) {
    Bounds b = a.bounds();
    b.arity = b.arity == 0 ? 0 : b.arity - 1;
    SymSeries r(b);
    for (const auto& [key, c] : a.terms()) {
        unsigned m1 = key.lambda.multiplicity(1);
        if (m1 == 0) continue;
        r.add_term(key.lambda.without_one(1), key.d, c.scaled(rat(m1)));
    }
    return r;
}

SymSeries h_in_p(unsigned n) {
    std::vector<SymSeries> h;
    h.reserve(n + 1);
    h.push_back(SymSeries::one(Bounds{0, 0}));
    for (unsigned m = 1; m <= n; ++m) {
        SymSeries hm(Bounds{m, 0});
        for (unsigned i = 1; i <= m; ++i) {
            // p_i * h_{m-i} contributes each (mu -> c) of h_{m-i} as (mu u {i} -> c / m).
            for (const auto& [key, c] : h[m - i].terms())
                hm.add_term(key.lambda.merged(Partition::single(i)), 0, c.scaled(Rat(1, m)));
        }
        h.push_back(std::move(hm));
    }
    return h[n];
}

namespace {

// p-expansion of the h-monomial h_mu as scalar rationals; the building block
// of the triangular elimination.
std::map<Partition, Rat> h_monomial_in_p(const Partition& mu,
                                         std::map<Partition, std::map<Partition, Rat>>& cache) {
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    std::map<Partition, Rat> out;
    if (mu.empty()) {
        out.emplace(Partition(), rat(1));
    } else {
        unsigned m = mu.largest_part();
        auto rest = h_monomial_in_p(mu.without_one(m), cache);
        const SymSeries hm = h_in_p(m);
        for (const auto& [key, c] : hm.terms()) {
            Rat hc = c.coeff(0); // scalar coefficients only
            for (const auto& [rl, rc] : rest) {
                Partition merged = rl.merged(key.lambda);
                auto [slot, inserted] = out.try_emplace(merged, hc * rc);
                if (!inserted) slot->second += hc * rc;
            }
        }
    }
    cache.emplace(mu, out);
    return out;
}

} // namespace

HBasisMap to_h_basis(const SymSeries& a) {
    // The rewrite mixes only terms of equal (weight, q-degree), so eliminate
    // within each such group, scanning h-monomials downward in the dominance-
    // compatible order: h_mu has p-expansion mu -> 1/prod(parts) + strictly
    // smaller partitions.
    HBasisMap out;
    std::map<Partition, std::map<Partition, Rat>> cache;
    std::map<std::pair<unsigned, unsigned>, std::map<Partition, LPoly>> groups;
    for (const auto& [key, c] : a.terms())
        groups[{key.lambda.weight(), key.d}].emplace(key.lambda, c);

    for (auto& [wd, slice] : groups) {
        auto mus = partitions_of(wd.first);
        for (auto mu_it = mus.rbegin(); mu_it != mus.rend(); ++mu_it) {
            const Partition& mu = *mu_it;
            auto lead = slice.find(mu);
            if (lead == slice.end() || lead->second.is_zero()) continue;
            auto expansion = h_monomial_in_p(mu, cache);
            LPoly e_mu = lead->second.scaled(Rat(1) / expansion.at(mu));
            for (const auto& [lam, c] : expansion) {
                auto [slot, inserted] = slice.try_emplace(lam, LPoly());
                slot->second -= e_mu.scaled(c);
                (void)inserted;
            }
            out.emplace(SymKey{mu, wd.second}, std::move(e_mu));
        }
        for (const auto& [lam, c] : slice)
            if (!c.is_zero())
                fail(Errc::internal_inconsistency, "h-basis elimination left residue at p_" + lam.str("p"));
    }
    return out;
}

HBasisMap to_h_basis(const std::map<Partition, LPoly>& component, unsigned d) {
    unsigned arity = 0;
    for (const auto& [lam, c] : component) arity = std::max(arity, lam.weight());
    SymSeries s(Bounds{arity, d});
    for (const auto& [lam, c] : component) s.add_term(lam, d, c);
    return to_h_basis(s);
}

SymSeries from_h_basis(const HBasisMap& h, Bounds b) {
    SymSeries r(b);
    std::map<Partition, std::map<Partition, Rat>> cache;
    for (const auto& [key, c] : h)
        for (const auto& [lam, pc] : h_monomial_in_p(key.lambda, cache))
            r.add_term(lam, key.d, c.scaled(pc));
    return r;
}

LPoly rank_at(const SymSeries& a, unsigned n, unsigned d) {
    if (n > a.bounds().arity || d > a.bounds().degree)
        fail(Errc::bad_range, "rank_at outside series bounds");
    return a.at(Partition::ones(n), d).scaled(Rat(factorial(n)));
}

LPoly rank_of_component(const std::map<Partition, LPoly>& component, unsigned n) {
    auto it = component.find(Partition::ones(n));
    return it == component.end() ? LPoly() : it->second.scaled(Rat(factorial(n)));
}

SymSeries binomial_power(unsigned n, const LPoly& f, Bounds b) {
    if (n == 0) fail(Errc::bad_range, "binomial_power needs n >= 1");
    SymSeries r(b);
    for (unsigned j = 0; n * j <= b.arity; ++j)
        r.add_term(Partition::rectangle(n, j), 0, binomial_series_coeff(f, j));
    return r;
}

} // namespace hgm
