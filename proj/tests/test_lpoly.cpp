#include <doctest.h>

#include <random>

#include "hgmoduli/lpoly.hpp"
#include "hgmoduli/selfcheck.hpp"

using namespace hgm;

namespace {

LPoly P(std::initializer_list<long> ascending) { return LPoly::from_int_coeffs(ascending); }

LPoly random_poly(std::mt19937_64& rng, unsigned max_deg = 4) {
    std::vector<Rat> cs;
    unsigned deg = rng() % (max_deg + 1);
    for (unsigned i = 0; i <= deg; ++i)
        cs.push_back(rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)));
    return LPoly(std::move(cs));
}

} // namespace

TEST_CASE("normal form and ring basics") {
    CHECK(LPoly(std::vector<Rat>{rat(1), rat(0), rat(0)}) == LPoly::one());
    CHECK(LPoly::zero().degree() == -1);
    CHECK((P({0, 1}) - P({0, 1})).is_zero());
    CHECK(P({1, 2}) * P({1, 1}) == P({1, 3, 2}));
    CHECK(P({1, 1}).coeff(5) == 0);
    CHECK(-P({1, -1}) == P({-1, 1}));
}

TEST_CASE("exact division examples") {
    // (L^3 - L) / (L + 1) = L^2 - L
    CHECK(poly_exact_div(P({0, -1, 0, 1}), P({1, 1})) == P({0, -1, 1}));
    // (L^5 - L^3) / (L^3 - L) = L^2
    CHECK(poly_exact_div(P({0, 0, 0, -1, 0, 1}), P({0, -1, 0, 1})) == P({0, 0, 1}));
    // (L + 1) / L has remainder 1
    CHECK_THROWS_AS(poly_exact_div(P({1, 1}), P({0, 1})), Error);
    CHECK_THROWS_AS(poly_exact_div(P({1, 1}), LPoly::zero()), Error);
}

TEST_CASE("exact division round-trips products") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        LPoly a = random_poly(rng);
        LPoly b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK(poly_exact_div(a * b, b) == a);
    }
}

TEST_CASE("Adams substitution") {
    LPoly f = P({1, 1}) * P({1, 1}); // (L+1)^2
    CHECK(poly_adams(f, 2) == P({1, 0, 1}) * P({1, 0, 1}));
    CHECK(poly_adams(f, 1) == f);
    CHECK(poly_adams(P({0, -1, 0, 1}), 3) == P({0, 0, 0, -1, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("Adams is multiplicative and composes") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        LPoly a = random_poly(rng);
        LPoly b = random_poly(rng);
        unsigned n = 1 + rng() % 3, m = 1 + rng() % 3;
        CHECK(poly_adams(a * b, n) == poly_adams(a, n) * poly_adams(b, n));
        CHECK(poly_adams(poly_adams(a, m), n) == poly_adams(a, m * n));
    }
}

TEST_CASE("generalized binomial coefficients") {
    LPoly Lp1 = P({1, 1});
    CHECK(binomial_series_coeff(Lp1, 2) == P({0, 1, 1}).scaled(Rat(1, 2))); // (L^2+L)/2
    std::mt19937_64 rng(1);
    CHECK(binomial_series_coeff(random_poly(rng), 0) == LPoly::one());
    LPoly half = P({0, -1, 1}).scaled(Rat(1, 2)); // (L^2-L)/2
    CHECK(binomial_series_coeff(half, 1) == half);
}

TEST_CASE("binomial coefficients satisfy Pascal's rule") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
        LPoly f = random_poly(rng, 3);
        unsigned j = 1 + rng() % 4;
        LPoly fm1 = f - LPoly::one();
        CHECK(binomial_series_coeff(f, j) ==
              binomial_series_coeff(fm1, j) + binomial_series_coeff(fm1, j - 1));
    }
}

TEST_CASE("projective space classes") {
    CHECK(projective_class(0) == LPoly::one());
    CHECK(projective_class(1) == P({1, 1}));
    CHECK(projective_class(3) == P({1, 1, 1, 1}));
}

TEST_CASE("Grassmannian classes") {
    CHECK(grassmannian_class(1, 2) == P({1, 1}));
    CHECK(grassmannian_class(2, 4) == P({1, 0, 1}) * P({1, 1, 1}));
    CHECK(grassmannian_class(2, 5) == P({1, 1, 2, 2, 2, 1, 1}));
    CHECK(grassmannian_class(0, 3) == LPoly::one());
    CHECK(grassmannian_class(3, 3) == LPoly::one());
    CHECK_THROWS_AS(grassmannian_class(4, 3), Error);
}

TEST_CASE("Grassmannian duality, Gaussian oracle and L = 1 specialization") {
    for (unsigned k = 2; k <= 7; ++k)
        for (unsigned r = 1; r < k; ++r) {
            LPoly g = grassmannian_class(r, k);
            CHECK(g == grassmannian_class(k - r, k));
            CHECK(g == gaussian_binomial_oracle(r, k));
            CHECK(g.degree() == static_cast<int>(r * (k - r)));
            CHECK(g.is_nonneg_integral());
            // binomial coefficient C(k, r) at L = 1
            Rat expected(factorial(k) / (factorial(r) * factorial(k - r)));
            CHECK(g.eval_at_one() == expected);
        }
}

TEST_CASE("evaluation at 1 is a ring homomorphism") {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 30; ++t) {
        LPoly a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
        CHECK((a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one());
    }
}

TEST_CASE("string rendering") {
    CHECK(P({0, -1, 0, 1}).str(true) == "L^3 - L");
    CHECK(P({0, -1, 0, 1}).str(false) == "L^3-L");
    CHECK(P({0, 1, 1}).scaled(Rat(1, 2)).coeff_str() == "(L^2+L)/2");
    CHECK(P({0, -1, 0, 1}).coeff_str() == "(L^3-L)");
    CHECK(P({0, 1}).coeff_str() == "L");
    CHECK(P({3}).coeff_str() == "3");
    CHECK(LPoly::zero().str() == "0");
    CHECK(P({1, 2, 1}).str(true) == "L^2 + 2 L + 1");
}
