#include "hgmoduli/selfcheck.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace hgm {

LPoly gaussian_binomial_oracle(unsigned r, unsigned k) {
    // Product formula, independent of the Grassmannian recursion:
    // [k choose r]_L = prod_{i=1..r} (1 - L^{k-r+i}) / (1 - L^i).
    LPoly num = LPoly::one();
    LPoly den = LPoly::one();
    for (unsigned i = 1; i <= r; ++i) {
        num *= LPoly::one() - LPoly::monomial(k - r + i, rat(1));
        den *= LPoly::one() - LPoly::monomial(i, rat(1));
    }
    return poly_exact_div(num, den);
}

std::vector<Int> strom_counts_brute(unsigned r, unsigned k, unsigned delta) {
    // Blind enumeration of all candidate triples with the constraints tested
    // afterwards; tractable for the small oracle ranges.
    const unsigned s = k - r;
    const unsigned dim = k * delta + r * (k - r);
    std::vector<Int> counts(dim + 1, Int(0));
    std::vector<unsigned> a(s, 0), b(s + 1, 0), c(s, 0);

    std::function<void(unsigned)> loop_c = [&](unsigned j) {
        if (j == s) {
            bool ok = b[0] == 0 && b[s] == delta;
            for (unsigned t = 1; ok && t <= s; ++t) ok = b[t - 1] <= a[t - 1] && a[t - 1] <= b[t];
            for (unsigned t = 1; ok && t < s; ++t) ok = c[t - 1] <= c[t];
            if (!ok) return;
            unsigned w = 0;
            for (unsigned t = 1; t <= s; ++t) w += a[t - 1] + c[t - 1] * (1 + b[t] - b[t - 1]);
            counts.at(w) += 1;
            return;
        }
        for (c[j] = 0; c[j] <= r; ++c[j]) loop_c(j + 1);
        c[j] = 0;
    };
    std::function<void(unsigned)> loop_b = [&](unsigned j) {
        if (j == s + 1) {
            loop_c(0);
            return;
        }
        for (b[j] = 0; b[j] <= delta; ++b[j]) loop_b(j + 1);
        b[j] = 0;
    };
    std::function<void(unsigned)> loop_a = [&](unsigned j) {
        if (j == s) {
            loop_b(0);
            return;
        }
        for (a[j] = 0; a[j] <= delta; ++a[j]) loop_a(j + 1);
        a[j] = 0;
    };
    loop_a(0);
    return counts;
}

LPoly falling_product_oracle(unsigned n) {
    LPoly p = LPoly::one();
    for (unsigned i = 0; i < n; ++i)
        p *= LPoly::lefschetz() + LPoly::constant(1 - static_cast<long>(i));
    return p;
}

namespace {

// -- small builders for the frozen golden values ---------------------------

LPoly P(std::initializer_list<long> ascending) { return LPoly::from_int_coeffs(ascending); }

LPoly prod(std::initializer_list<LPoly> factors) {
    LPoly p = LPoly::one();
    for (const LPoly& f : factors) p *= f;
    return p;
}

const LPoly L = LPoly::lefschetz();
const LPoly one = LPoly::one();

Component scalar_component(const LPoly& c) {
    Component out;
    if (!c.is_zero()) out.emplace(Partition(), c);
    return out;
}

Component s1_component(const LPoly& c) {
    Component out;
    if (!c.is_zero()) out.emplace(Partition::single(1), c);
    return out;
}

std::string comp_str(const Component& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, poly] : c) {
        if (!first) os << " + ";
        first = false;
        os << poly.coeff_str() << " " << lambda.str("p");
    }
    return os.str();
}

// -- check harness ----------------------------------------------------------

class Checker {
public:
    explicit Checker(std::string name) : result_{std::move(name), true, ""} {}

    void expect(bool ok, const std::string& what) {
        if (ok || !result_.pass) return;
        result_.pass = false;
        result_.detail = what;
    }

    void expect_poly(const LPoly& got, const LPoly& want, const std::string& what) {
        expect(got == want, what + ": got " + got.str(false) + ", want " + want.str(false));
    }

    void expect_comp(const Component& got, const Component& want, const std::string& what) {
        expect(got == want, what + ": got " + comp_str(got) + ", want " + comp_str(want));
    }

    CheckResult result() const { return result_; }

private:
    CheckResult result_;
};

// -- deterministic random instances for the law checks ----------------------

LPoly random_poly(std::mt19937_64& rng) {
    std::vector<Rat> cs;
    unsigned deg = rng() % 3;
    for (unsigned i = 0; i <= deg; ++i) {
        long num = static_cast<long>(rng() % 9) - 4;
        long den = 1 + static_cast<long>(rng() % 3);
        cs.push_back(rat(num, den));
    }
    return LPoly(std::move(cs));
}

// Random small series with partition weight <= max_w and q-degree <= max_d.
// The law checks size the bounds so that even doubly nested compositions of
// these supports never reach the truncation box, making the identities exact.
SymSeries random_series(std::mt19937_64& rng, Bounds b, unsigned max_w, unsigned max_d,
                        bool need_f1) {
    SymSeries s(b);
    unsigned nterms = 2 + rng() % 3;
    for (unsigned t = 0; t < nterms; ++t) {
        unsigned w = rng() % (max_w + 1);
        unsigned d = rng() % (max_d + 1);
        if (need_f1 && w == 0 && d == 0) continue;
        auto ps = partitions_of(w);
        s.add_term(ps[rng() % ps.size()], d, random_poly(rng));
    }
    return s;
}

// -- the individual checks ---------------------------------------------------

CheckResult check_golden_51_class(ModuliStore& st) {
    Checker c("golden-5.1 e(Mbar_{0,0}(G(2,4),2)) and its E-polynomial");
    LPoly want = P({1, 3, 7, 11, 14, 14, 11, 7, 3, 1});
    HodgeReport rep = hodge_report(st, 2, 4, 0, 2);
    c.expect_poly(rep.rank, want, "class");
    c.expect_comp(rep.p_basis, scalar_component(want), "equivariant class");
    std::vector<std::pair<unsigned, Int>> epoly;
    for (unsigned i = 0; i <= 9; ++i) epoly.emplace_back(i, want.coeff(i).get_num());
    c.expect(rep.e_poly == epoly, "E-polynomial differs from the t^i u^i display");
    c.expect(rep.euler == 72, "Euler characteristic");
    return c.result();
}

CheckResult check_golden_52_class(ModuliStore& st) {
    Checker c("golden-5.2 e(Mbar_{0,1}(G(2,4),2)) and its E-polynomial");
    LPoly want = P({1, 4, 12, 22, 33, 36, 33, 22, 12, 4, 1});
    HodgeReport rep = hodge_report(st, 2, 4, 1, 2);
    c.expect_comp(rep.p_basis, s1_component(want), "class (s1 multiple)");
    c.expect_poly(rep.rank, want, "rank class");
    std::vector<std::pair<unsigned, Int>> epoly;
    for (unsigned i = 0; i <= 10; ++i) epoly.emplace_back(i, want.coeff(i).get_num());
    c.expect(rep.e_poly == epoly, "E-polynomial differs from the t^i u^i display");
    return c.result();
}

CheckResult check_golden_omega_mho(ModuliStore& st) {
    Checker c("golden omega_j and mho_j for s = 2");
    c.expect_poly(omega_class(st, 2, 4, 0), one, "omega_0");
    c.expect_poly(omega_class(st, 2, 4, 1), prod({P({1, 1}), P({1, 1})}), "omega_1");
    c.expect_poly(omega_class(st, 2, 4, 2), P({1, 2, 4, 2, 1}), "omega_2");
    c.expect_poly(mho_class(st, 2, 4, 0), one, "mho_0");
    c.expect_poly(mho_class(st, 2, 4, 1), -prod({P({1, 1}), P({1, 1})}), "mho_1");
    c.expect_poly(mho_class(st, 2, 4, 2), prod({P({0, 2}), P({1, 1, 1})}), "mho_2");
    return c.result();
}

CheckResult check_golden_qbar(ModuliStore& st) {
    Checker c("golden Quot classes [Qbar_d] for G(2,4)");
    c.expect_poly(qbar(st, 2, 4, 0), prod({P({1, 0, 1}), P({1, 1, 1})}), "[Qbar_0]");
    c.expect_poly(qbar(st, 2, 4, 1),
                  prod({P({1, 1}), P({1, 1}), P({1, 0, 1}), P({1, -1, 1}), P({1, 1, 1})}),
                  "[Qbar_1]");
    c.expect_poly(qbar(st, 2, 4, 2),
                  prod({P({1, 0, 1}), P({1, 1, 1}), P({1, 0, 0, 0, 1}), P({1, 1, 1, 1, 1})}),
                  "[Qbar_2]");
    return c.result();
}

CheckResult check_golden_mor(ModuliStore& st) {
    Checker c("golden morphism-space classes [Q_d] for G(2,4)");
    c.expect_poly(mor(st, 2, 4, 0), prod({P({1, 0, 1}), P({1, 1, 1})}), "[Q_0]");
    c.expect_poly(mor(st, 2, 4, 1),
                  prod({P({0, 1}), P({-1, 1}), P({1, 1}), P({1, 1}), P({1, 0, 1}), P({1, 1, 1})}),
                  "[Q_1]");
    c.expect_poly(mor(st, 2, 4, 2),
                  prod({P({0, 0, 0, 1}), P({-1, 1}), P({1, 1}), P({1, 0, 1}), P({1, 1, 1}),
                        P({-1, 1, 1, 1})}),
                  "[Q_2]");
    return c.result();
}

CheckResult check_golden_phibar(ModuliStore& st) {
    Checker c("golden fiber classes e(Phibar)");
    SymSeries pb = phi_bar(st, 2, 4, Bounds{2, 1});
    c.expect_comp(pb.component(0, 0), {}, "e(Phibar_{0,0}) = 0");
    c.expect_comp(pb.component(0, 1), scalar_component(prod({P({1, 1}), P({1, 1})})),
                  "e(Phibar_{0,1})");
    c.expect_comp(pb.component(1, 1), s1_component(prod({P({1, 1}), P({1, 1}), P({1, 1})})),
                  "e(Phibar_{1,1})");
    return c.result();
}

CheckResult check_golden_open_strata(ModuliStore& st) {
    Checker c("golden open strata e(M_{0,n}(G(2,4),d))");
    LPoly g24 = prod({P({1, 0, 1}), P({1, 1, 1})});
    for (unsigned m = 0; m <= 2; ++m) {
        std::string what = "e(M_{0," + std::to_string(m) + "}(G,0)) = 0";
        c.expect_comp(open_stratum_component(st, 2, 4, m, 0), {}, what);
    }
    c.expect_comp(open_stratum_component(st, 2, 4, 0, 1), scalar_component(P({1, 1}) * g24),
                  "e(M_{0,0}(G,1))");
    c.expect_comp(open_stratum_component(st, 2, 4, 1, 1),
                  s1_component(prod({P({1, 1}), P({1, 1})}) * g24), "e(M_{0,1}(G,1))");
    c.expect_comp(open_stratum_component(st, 2, 4, 0, 2),
                  scalar_component(prod({P({0, 0, 1}), P({-1, 1, 1, 1})}) * g24),
                  "e(M_{0,0}(G,2))");
    c.expect_comp(open_stratum_component(st, 2, 4, 1, 2),
                  s1_component(prod({P({0, 0, 1}), P({1, 1}), P({-1, 1, 1, 1})}) * g24),
                  "e(M_{0,1}(G,2))");

    // e(M_{0,2}(G,1)) = L (L+1) g ((L-1) s2 + s1^2) and
    // e(M_{0,3}(G,0)) = g s3, both checked in the h-basis.
    LPoly scale21 = prod({P({0, 1}), P({1, 1})}) * g24;
    HBasisMap h21 = to_h_basis(open_stratum_component(st, 2, 4, 2, 1), 1);
    HBasisMap want21;
    want21.emplace(SymKey{Partition::single(2), 1}, P({-1, 1}) * scale21);
    want21.emplace(SymKey{Partition::ones(2), 1}, scale21);
    c.expect(h21 == want21, "e(M_{0,2}(G,1)) in the h-basis");

    HBasisMap h30 = to_h_basis(open_stratum_component(st, 2, 4, 3, 0), 0);
    HBasisMap want30;
    want30.emplace(SymKey{Partition::single(3), 0}, g24);
    c.expect(h30 == want30, "e(M_{0,3}(G,0)) in the h-basis");
    return c.result();
}

CheckResult check_oracle_projective_target(ModuliStore& st) {
    Checker c("oracle P^1 target: PGL(2) and Sym^2 P^1");
    c.expect_poly(mor(st, 1, 2, 1), P({0, -1, 0, 1}), "[Mor_1(P^1,P^1)] = L^3 - L");
    Component m02 = mbar_class(st, 1, 2, 0, 2);
    c.expect_comp(m02, scalar_component(P({1, 1, 1})), "e(Mbar_{0,0}(P^1,2)) = [P^2]");
    return c.result();
}

CheckResult check_oracle_quot_s1(ModuliStore&) {
    Checker c("oracle s=1 closed form and brute-force cell counts");
    for (unsigned r = 1; r <= 3; ++r)
        for (unsigned delta = 0; delta <= 3; ++delta) {
            std::string what = "Qbar(r=" + std::to_string(r) + ", k=r+1, delta=" +
                               std::to_string(delta) + ") = projective space";
            c.expect_poly(qbar_class(r, r + 1, delta), projective_class((r + 1) * (delta + 1) - 1),
                          what);
        }
    for (unsigned k = 2; k <= 4; ++k)
        for (unsigned r = 1; r < k; ++r)
            for (unsigned delta = 0; delta <= 2; ++delta) {
                auto fast = strom_cell_counts(r, k, delta).counts;
                auto brute = strom_counts_brute(r, k, delta);
                std::string what = "cell counts vs brute enumeration at (r,k,delta)=(" +
                                   std::to_string(r) + "," + std::to_string(k) + "," +
                                   std::to_string(delta) + ")";
                c.expect(fast == brute, what);
            }
    return c.result();
}

CheckResult check_oracle_gaussian(ModuliStore&) {
    Checker c("oracle Gaussian binomials [k choose r]_L, k <= 7");
    for (unsigned k = 2; k <= 7; ++k)
        for (unsigned r = 1; r < k; ++r) {
            std::string what =
                "[G(" + std::to_string(r) + "," + std::to_string(k) + ")] vs product formula";
            c.expect_poly(grassmannian_class(r, k), gaussian_binomial_oracle(r, k), what);
        }
    return c.result();
}

CheckResult check_poincare_duality_sweep(ModuliStore& st) {
    Checker c("Poincare duality sweep k <= 5, n <= 3, d <= 3");
    for (unsigned k = 2; k <= 5; ++k)
        for (unsigned r = 1; r < k; ++r)
            for (unsigned d = 0; d <= 3; ++d)
                for (unsigned n = 0; n <= 3; ++n) {
                    if (d == 0 && n <= 2) continue; // empty spaces
                    HodgeReport rep = hodge_report(st, r, k, n, d);
                    std::string at = " at (r,k,n,d)=(" + std::to_string(r) + "," +
                                     std::to_string(k) + "," + std::to_string(n) + "," +
                                     std::to_string(d) + ")";
                    c.expect(!rep.empty, "unexpectedly empty" + at);
                    int dim = static_cast<int>(k * d + r * (k - r) + n) - 3;
                    c.expect(rep.dim == dim, "dimension mismatch" + at);
                    c.expect(rep.rank.is_palindromic(), "Betti vector not palindromic" + at);
                    for (size_t i = 1; i < rep.betti.size(); i += 2)
                        c.expect(rep.betti[i] == 0, "odd Betti number nonzero" + at);
                    // nonnegativity and integrality of the rank are enforced
                    // by hodge_report itself (INTEGRALITY_FAILURE).
                    for (const auto& [key, coeff] : rep.h_basis)
                        c.expect(coeff.is_integral(), "h-basis coefficient not in Z[L]" + at);
                }
    return c.result();
}

CheckResult check_d0_sanity(ModuliStore& st) {
    Checker c("d = 0 factorization through Mbar_{0,n}");
    for (auto [r, k] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 4}}) {
        LPoly g = grassmannian_class(r, k);
        std::string at = " for G(" + std::to_string(r) + "," + std::to_string(k) + ")";
        c.expect_poly(rank_of_component(mbar_class(st, r, k, 4, 0), 4), g * P({1, 1}),
                      "rank of Mbar_{0,4}(G,0)" + at);
        c.expect_poly(rank_of_component(mbar_class(st, r, k, 5, 0), 5), g * P({1, 5, 1}),
                      "rank of Mbar_{0,5}(G,0)" + at);
    }
    return c.result();
}

CheckResult check_algebraic_laws(ModuliStore&) {
    Checker c("algebraic laws on randomized instances");
    std::mt19937_64 rng(0x5eed5eedULL);
    // Supports: a of weight <= 3, inner arguments of weight <= 2, degrees
    // <= 1; nested compositions then stay within arity 12, degree 10.
    const Bounds b{14, 14};
    const unsigned trials = 50;

    for (unsigned t = 0; t < trials; ++t) {
        SymSeries a = random_series(rng, b, 3, 1, false);
        SymSeries x = random_series(rng, b, 2, 1, true);
        SymSeries y = random_series(rng, b, 2, 1, true);
        std::string at = " (instance " + std::to_string(t) + ")";
        c.expect(plethysm(plethysm(a, x), y) == plethysm(a, plethysm(x, y)),
                 "plethysm associativity" + at);
        SymSeries a2 = random_series(rng, b, 3, 1, false);
        c.expect(plethysm(a * a2, x) == plethysm(a, x) * plethysm(a2, x),
                 "first-argument multiplicativity" + at);
        Bounds db{b.arity - 1, b.degree};
        c.expect(derive(plethysm(a, x)) ==
                     plethysm(derive(a), x.with_bounds(db)) * derive(x),
                 "chain rule" + at);
        c.expect(from_h_basis(to_h_basis(a), b) == a, "Newton p<->h round-trip" + at);
    }

    std::mt19937_64 rng2(0xdecafULL);
    for (unsigned t = 0; t < trials; ++t) {
        unsigned k = 2 + rng2() % 5;
        unsigned r = 1 + rng2() % (k - 1);
        unsigned d = rng2() % 5;
        LPoly lhs;
        for (unsigned delta = 0; delta <= d; ++delta)
            lhs += omega(k - r, d - delta) * mor_class(r, k, delta);
        std::string at = " at (r,k,d)=(" + std::to_string(r) + "," + std::to_string(k) + "," +
                         std::to_string(d) + ")";
        c.expect_poly(lhs, qbar_class(r, k, d), "deconvolution identity" + at);
    }
    return c.result();
}

CheckResult check_duality_in_r(ModuliStore& st) {
    Checker c("duality G(1,3) vs G(2,3)");
    for (unsigned d = 0; d <= 2; ++d)
        for (unsigned n = 0; n <= 2; ++n) {
            std::string at = " at (n,d)=(" + std::to_string(n) + "," + std::to_string(d) + ")";
            c.expect(mbar_class(st, 1, 3, n, d) == mbar_class(st, 2, 3, n, d),
                     "mbar components differ" + at);
        }
    return c.result();
}

} // namespace

std::vector<CheckResult> run_selfchecks(ModuliStore& st) {
    std::vector<CheckResult> out;
    out.push_back(check_golden_51_class(st));
    out.push_back(check_golden_52_class(st));
    out.push_back(check_golden_omega_mho(st));
    out.push_back(check_golden_qbar(st));
    out.push_back(check_golden_mor(st));
    out.push_back(check_golden_phibar(st));
    out.push_back(check_golden_open_strata(st));
    out.push_back(check_oracle_projective_target(st));
    out.push_back(check_oracle_quot_s1(st));
    out.push_back(check_oracle_gaussian(st));
    out.push_back(check_poincare_duality_sweep(st));
    out.push_back(check_d0_sanity(st));
    out.push_back(check_algebraic_laws(st));
    out.push_back(check_duality_in_r(st));
    return out;
}

} // namespace hgm
