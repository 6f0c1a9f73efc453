#include "hgmoduli/moduli.hpp"

#include <array>
#include <sstream>

namespace hgm {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::QBAR: return "QBAR";
        case Kind::Q: return "Q";
        case Kind::OMEGA: return "OMEGA";
        case Kind::MHO: return "MHO";
        case Kind::M_OPEN: return "M_OPEN";
        case Kind::PHI_BAR: return "PHI_BAR";
        case Kind::M_BAR: return "M_BAR";
        case Kind::CONFIG: return "CONFIG";
    }
    return "?";
}

std::optional<Kind> kind_from_name(const std::string& name) {
    static const std::array<Kind, 8> kinds = {Kind::QBAR,   Kind::Q,       Kind::OMEGA,
                                              Kind::MHO,    Kind::M_OPEN,  Kind::PHI_BAR,
                                              Kind::M_BAR,  Kind::CONFIG};
    for (Kind k : kinds)
        if (name == kind_name(k)) return k;
    return std::nullopt;
}

bool kind_is_scalar(Kind k) {
    return k == Kind::QBAR || k == Kind::Q || k == Kind::OMEGA || k == Kind::MHO;
}

std::string ModuliKey::str() const {
    std::ostringstream os;
    os << r << ":" << k << ":" << kind_name(kind) << ":" << n << ":" << d;
    return os.str();
}

std::optional<ModuliKey> ModuliKey::parse(const std::string& text) {
    std::array<std::string, 5> fields;
    size_t start = 0, field = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ':') {
            if (field >= fields.size()) return std::nullopt;
            fields[field++] = text.substr(start, i - start);
            start = i + 1;
        }
    }
    if (field != fields.size()) return std::nullopt;
    auto number = [](const std::string& s) -> std::optional<unsigned> {
        if (s.empty() || s.size() > 9) return std::nullopt;
        unsigned v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + static_cast<unsigned>(c - '0');
        }
        return v;
    };
    auto r = number(fields[0]), k = number(fields[1]), n = number(fields[3]), d = number(fields[4]);
    auto kind = kind_from_name(fields[2]);
    if (!r || !k || !n || !d || !kind) return std::nullopt;
    bool config = *kind == Kind::CONFIG;
    if (config ? (*r != 0 || *k != 0) : (*r < 1 || *r + 1 > *k)) return std::nullopt;
    return ModuliKey{*r, *k, *kind, *n, *d};
}

std::optional<LPoly> ModuliStore::poly(const ModuliKey& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = polys_.find(key);
    return it == polys_.end() ? std::nullopt : std::optional<LPoly>(it->second);
}

std::optional<Component> ModuliStore::comp(const ModuliKey& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = comps_.find(key);
    return it == comps_.end() ? std::nullopt : std::optional<Component>(it->second);
}

void ModuliStore::put_poly(const ModuliKey& key, const LPoly& value) {
    std::lock_guard<std::mutex> lock(mu_);
    polys_.try_emplace(key, value); // write-once: the first stored value is kept
}

void ModuliStore::put_comp(const ModuliKey& key, const Component& value) {
    std::lock_guard<std::mutex> lock(mu_);
    comps_.try_emplace(key, value);
}

std::map<ModuliKey, LPoly> ModuliStore::polys_snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return polys_;
}

std::map<ModuliKey, Component> ModuliStore::comps_snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return comps_;
}

namespace {

LPoly memo_poly(ModuliStore& st, const ModuliKey& key, LPoly (*compute)(unsigned, unsigned, unsigned),
                unsigned a, unsigned b, unsigned c) {
    if (auto hit = st.poly(key)) return *hit;
    LPoly v = compute(a, b, c);
    st.put_poly(key, v);
    return v;
}

} // namespace

LPoly qbar(ModuliStore& st, unsigned r, unsigned k, unsigned delta) {
    return memo_poly(st, ModuliKey{r, k, Kind::QBAR, 0, delta}, &qbar_class, r, k, delta);
}

LPoly omega_class(ModuliStore& st, unsigned r, unsigned k, unsigned j) {
    ModuliKey key{r, k, Kind::OMEGA, 0, j};
    if (auto hit = st.poly(key)) return *hit;
    LPoly v = omega(k - r, j);
    st.put_poly(key, v);
    return v;
}

LPoly mho_class(ModuliStore& st, unsigned r, unsigned k, unsigned j) {
    ModuliKey key{r, k, Kind::MHO, 0, j};
    if (auto hit = st.poly(key)) return *hit;
    LPoly v = mho(k - r, j);
    st.put_poly(key, v);
    return v;
}

LPoly mor(ModuliStore& st, unsigned r, unsigned k, unsigned d) {
    ModuliKey key{r, k, Kind::Q, 0, d};
    if (auto hit = st.poly(key)) return *hit;
    LPoly sum;
    for (unsigned j = 0; j <= d; ++j) sum += mho_class(st, r, k, j) * qbar(st, r, k, d - j);
    if (sum.degree() != static_cast<int>(k * d + r * (k - r)))
        fail(Errc::internal_inconsistency, "mor degree != dim Mor_d");
    st.put_poly(key, sum);
    return sum;
}

namespace {

int mobius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

} // namespace

LPoly necklace_polynomial(unsigned n) {
    LPoly sum;
    for (unsigned t = 1; t <= n; ++t) {
        if (n % t) continue;
        int mu = mobius(n / t);
        if (mu != 0) sum += LPoly::monomial(t, rat(mu));
    }
    return sum.scaled(Rat(1, static_cast<long>(n)));
}

SymSeries config_class(ModuliStore& st, unsigned arity_max) {
    Bounds b{arity_max, 0};
    SymSeries prod = SymSeries::one(b) + SymSeries::s1(b);
    for (unsigned n = 1; n <= arity_max; ++n)
        prod = prod * binomial_power(n, necklace_polynomial(n), b);
    for (unsigned n = 0; n <= arity_max; ++n) {
        ModuliKey key{0, 0, Kind::CONFIG, n, 0};
        if (!st.comp(key)) st.put_comp(key, prod.component(n, 0));
    }
    return prod;
}

Component config_component(ModuliStore& st, unsigned n) {
    ModuliKey key{0, 0, Kind::CONFIG, n, 0};
    if (auto hit = st.comp(key)) return *hit;
    config_class(st, n);
    return *st.comp(key);
}

Component open_stratum_component(ModuliStore& st, unsigned r, unsigned k, unsigned n, unsigned d) {
    if (r < 1 || r + 1 > k) fail(Errc::bad_range, "open stratum needs 1 <= r <= k-1");
    ModuliKey key{r, k, Kind::M_OPEN, n, d};
    if (auto hit = st.comp(key)) return *hit;
    Component out;
    if (n + 3 * d >= 3) {
        LPoly scale = mor(st, r, k, d);
        LPoly aut_p1 = LPoly::from_int_coeffs({0, -1, 0, 1}); // L^3 - L
        for (const auto& [lambda, c] : config_component(st, n)) {
            LPoly v = poly_exact_div(scale * c, aut_p1);
            if (!v.is_zero()) out.emplace(lambda, std::move(v));
        }
    }
    st.put_comp(key, out);
    return out;
}

SymSeries open_stratum(ModuliStore& st, unsigned r, unsigned k, Bounds bounds) {
    SymSeries s(bounds);
    for (unsigned d = 0; d <= bounds.degree; ++d)
        for (unsigned n = 0; n <= bounds.arity; ++n)
            for (const auto& [lambda, c] : open_stratum_component(st, r, k, n, d))
                s.add_term(lambda, d, c);
    return s;
}

Component phi_open_component(ModuliStore& st, unsigned r, unsigned k, unsigned n, unsigned d) {
    LPoly g = grassmannian_class(r, k);
    Component out;
    for (const auto& [lambda, c] : open_stratum_component(st, r, k, n + 1, d)) {
        unsigned m1 = lambda.multiplicity(1);
        if (m1 == 0) continue;
        LPoly v = poly_exact_div(c.scaled(rat(m1)), g);
        Partition target = lambda.without_one(1);
        auto [it, inserted] = out.try_emplace(target, v);
        if (!inserted) it->second += v;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

SymSeries phi_open(ModuliStore& st, unsigned r, unsigned k, Bounds bounds) {
    SymSeries s(bounds);
    for (unsigned d = 0; d <= bounds.degree; ++d)
        for (unsigned n = 0; n <= bounds.arity; ++n)
            for (const auto& [lambda, c] : phi_open_component(st, r, k, n, d))
                s.add_term(lambda, d, c);
    return s;
}

SymSeries phi_bar_fixed_point(const SymSeries& phi, unsigned max_passes) {
    const Bounds b = phi.bounds();
    SymSeries x = SymSeries::zero(b);
    SymSeries s1 = SymSeries::s1(b);
    for (unsigned pass = 0; pass < max_passes; ++pass) {
        SymSeries next = plethysm(phi, s1 + x);
        if (next == x) return x;
        x = std::move(next);
    }
    fail(Errc::no_convergence, "phi_bar fixed point did not stabilize within the pass budget");
}

SymSeries phi_bar(ModuliStore& st, unsigned r, unsigned k, Bounds bounds) {
    // The cells with n + d <= bounds.arity are exact regardless of the
    // rectangle they were computed in, so they are the ones worth sharing.
    const unsigned weight_cap = bounds.arity;
    bool complete = true;
    SymSeries assembled(bounds);
    for (unsigned d = 0; complete && d <= bounds.degree; ++d) {
        for (unsigned n = 0; n + d <= weight_cap; ++n) {
            auto hit = st.comp(ModuliKey{r, k, Kind::PHI_BAR, n, d});
            if (!hit) {
                complete = false;
                break;
            }
            for (const auto& [lambda, c] : *hit) assembled.add_term(lambda, d, c);
        }
    }
    if (complete) return assembled;

    SymSeries phi = phi_open(st, r, k, bounds);
    SymSeries x = phi_bar_fixed_point(phi, (bounds.arity + 1) * (bounds.degree + 1) + 1);
    for (unsigned d = 0; d <= bounds.degree; ++d)
        for (unsigned n = 0; n + d <= weight_cap; ++n) {
            ModuliKey key{r, k, Kind::PHI_BAR, n, d};
            if (!st.comp(key)) st.put_comp(key, x.component(n, d));
        }
    return x;
}

Component mbar_class(ModuliStore& st, unsigned r, unsigned k, unsigned n, unsigned d) {
    if (r < 1 || r + 1 > k) fail(Errc::bad_range, "mbar_class needs 1 <= r <= k-1");
    ModuliKey key{r, k, Kind::M_BAR, n, d};
    if (auto hit = st.comp(key)) return *hit;

    Component out;
    if (d > 0 || n >= 3) {
        const Bounds b{n + d, d};
        SymSeries m_open = open_stratum(st, r, k, b);
        SymSeries pb = phi_bar(st, r, k, b);
        SymSeries s2 = h_in_p(2).with_bounds(b);
        LPoly g = grassmannian_class(r, k);

        SymSeries rhs = plethysm(m_open, SymSeries::s1(b) + pb) +
                        (plethysm(s2, pb) - pb * pb).scaled(g);
        out = rhs.component(n, d);
    }
    st.put_comp(key, out);
    return out;
}

HodgeReport hodge_report(ModuliStore& st, unsigned r, unsigned k, unsigned n, unsigned d) {
    HodgeReport rep;
    rep.r = r;
    rep.k = k;
    rep.n = n;
    rep.d = d;
    rep.p_basis = mbar_class(st, r, k, n, d);
    rep.h_basis = to_h_basis(rep.p_basis, d);
    rep.rank = rank_of_component(rep.p_basis, n);
    rep.empty = rep.rank.is_zero();
    if (!rep.rank.is_nonneg_integral())
        fail(Errc::integrality_failure,
             "rank class of Mbar_{0," + std::to_string(n) + "}(G(" + std::to_string(r) + "," +
                 std::to_string(k) + ")," + std::to_string(d) + ") is not in Z>=0[L]: " +
                 rep.rank.str(false));
    rep.dim = rep.rank.degree();
    if (!rep.empty) {
        rep.betti.assign(2 * static_cast<unsigned>(rep.dim) + 1, Int(0));
        for (unsigned i = 0; i <= static_cast<unsigned>(rep.dim); ++i) {
            Int b = rep.rank.coeff(i).get_num();
            rep.betti[2 * i] = b;
            if (b != 0) rep.e_poly.emplace_back(i, b);
        }
        rep.euler = rep.rank.eval_at_one().get_num();
    } else {
        rep.betti.assign(1, Int(0));
    }
    return rep;
}

} // namespace hgm
