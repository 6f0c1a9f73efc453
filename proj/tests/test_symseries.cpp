#include <doctest.h>

#include <random>

#include "hgmoduli/symseries.hpp"

using namespace hgm;

namespace {

LPoly P(std::initializer_list<long> ascending) { return LPoly::from_int_coeffs(ascending); }

SymSeries term(Bounds b, const Partition& lambda, unsigned d, const LPoly& c) {
    SymSeries s(b);
    s.add_term(lambda, d, c);
    return s;
}

} // namespace

TEST_CASE("bound mismatch and F1 preconditions") {
    SymSeries a = SymSeries::s1(Bounds{2, 1});
    SymSeries b = SymSeries::s1(Bounds{3, 1});
    CHECK_THROWS_AS(a * b, Error);
    CHECK_THROWS_AS(a + b, Error);
    SymSeries c = SymSeries::one(Bounds{2, 1}); // nonzero constant term
    CHECK_THROWS_AS(adams_series(2, c), Error);
    CHECK_THROWS_AS(plethysm(a, c), Error);
}

TEST_CASE("series product basics") {
    Bounds b{4, 2};
    SymSeries x = term(b, Partition::single(1), 0, P({2}));
    SymSeries y = term(b, Partition::single(1), 1, P({0, 3}));
    SymSeries xy = x * y;
    CHECK(xy.at(Partition::ones(2), 1) == P({0, 6}));
    CHECK(xy.terms().size() == 1);
    CHECK(x * SymSeries::one(b) == x);

    // e(Phibar_{0,1}) q squares to (L+1)^4 q^2 at the empty partition
    LPoly phibar01 = P({1, 1}) * P({1, 1});
    SymSeries f = term(b, Partition(), 1, phibar01);
    CHECK((f * f).at(Partition(), 2) == phibar01 * phibar01);
}

TEST_CASE("truncation drops overflowing terms") {
    Bounds b{2, 1};
    SymSeries x = term(b, Partition::single(2), 0, P({1}));
    SymSeries prod = x * x; // arity 4 exceeds the bound
    CHECK(prod.is_zero());
}

TEST_CASE("Adams action on series") {
    Bounds b{4, 2};
    LPoly phibar01 = P({1, 1}) * P({1, 1});
    SymSeries f = term(b, Partition(), 1, phibar01);
    SymSeries f2 = adams_series(2, f);
    CHECK(f2.at(Partition(), 2) == P({1, 0, 1}) * P({1, 0, 1}));
    CHECK(f2.terms().size() == 1);

    SymSeries g = term(Bounds{6, 0}, Partition::single(3), 0, P({1}));
    CHECK(adams_series(1, g) == g);
    CHECK(adams_series(2, g).at(Partition::single(6), 0) == P({1}));
}

TEST_CASE("adams_series composes") {
    Bounds b{12, 6};
    SymSeries x(b);
    x.add_term(Partition::single(1), 0, P({1, 2}));
    x.add_term(Partition::single(2), 1, P({0, 1}));
    x.add_term(Partition(), 1, P({3}));
    CHECK(adams_series(2, adams_series(3, x)) == adams_series(6, x));
}

TEST_CASE("plethysm with s1 is the identity on both sides") {
    Bounds b{4, 2};
    SymSeries a(b);
    a.add_term(Partition(std::vector<unsigned>{2, 1}), 1, P({1, 1}));
    a.add_term(Partition::single(1), 0, P({-1, 0, 2}));
    a.add_term(Partition(), 2, P({5}));
    CHECK(plethysm(a, SymSeries::s1(b)) == a);
    // a has zero constant term (its empty-partition part sits at q^2), so it
    // is a valid second argument too.
    CHECK(plethysm(SymSeries::s1(b), a) == a);
}

TEST_CASE("s2 of a sum expands by the binomial rule") {
    Bounds b{8, 4};
    SymSeries s2 = h_in_p(2).with_bounds(b);
    SymSeries s0 = SymSeries::one(b);
    SymSeries s1 = SymSeries::s1(b);
    SymSeries x = term(b, Partition::single(1), 1, P({1, 1}));
    SymSeries y = term(b, Partition::single(2), 0, P({0, 1}));
    SymSeries lhs = plethysm(s2, x + y);
    SymSeries rhs = plethysm(s2, x) * plethysm(s0, y) + plethysm(s1, x) * plethysm(s1, y) +
                    plethysm(s0, x) * plethysm(s2, y);
    CHECK(lhs == rhs);
}

TEST_CASE("s2 composed with the fiber class lands in q^2") {
    Bounds b{4, 2};
    LPoly phibar01 = P({1, 1}) * P({1, 1});
    SymSeries f = term(b, Partition(), 1, phibar01);
    SymSeries out = plethysm(h_in_p(2).with_bounds(b), f);
    LPoly adams2 = P({1, 0, 1}) * P({1, 0, 1});
    LPoly expected = (adams2 + phibar01 * phibar01).scaled(Rat(1, 2));
    CHECK(out.at(Partition(), 2) == expected);
    CHECK(out.terms().size() == 1);
}

TEST_CASE("derivation") {
    CHECK(derive(h_in_p(3)) == h_in_p(2));
    for (unsigned n = 1; n <= 6; ++n) CHECK(derive(h_in_p(n)) == h_in_p(n - 1));

    Bounds b{4, 0};
    SymSeries p2 = term(b, Partition::single(2), 0, P({1}));
    CHECK(derive(p2).is_zero());
    SymSeries p1sq = term(b, Partition::ones(2), 0, P({1}));
    CHECK(derive(p1sq) == term(Bounds{3, 0}, Partition::single(1), 0, P({2})));
}

TEST_CASE("Newton expansions of h_n") {
    CHECK(h_in_p(0) == SymSeries::one(Bounds{0, 0}));
    CHECK(h_in_p(1) == SymSeries::s1(Bounds{1, 0}));

    SymSeries h2 = h_in_p(2);
    CHECK(h2.at(Partition::ones(2), 0) == LPoly(rat(1, 2)));
    CHECK(h2.at(Partition::single(2), 0) == LPoly(rat(1, 2)));

    SymSeries h3 = h_in_p(3);
    CHECK(h3.at(Partition::ones(3), 0) == LPoly(rat(1, 6)));
    CHECK(h3.at(Partition(std::vector<unsigned>{2, 1}), 0) == LPoly(rat(1, 2)));
    CHECK(h3.at(Partition::single(3), 0) == LPoly(rat(1, 3)));
}

TEST_CASE("h-basis conversion") {
    Bounds b{2, 0};
    SymSeries a(b);
    a.add_term(Partition::ones(2), 0, P({0, 1, 1}).scaled(Rat(1, 2)));
    a.add_term(Partition::single(2), 0, P({0, -1, 1}).scaled(Rat(1, 2)));
    HBasisMap h = to_h_basis(a);
    REQUIRE(h.size() == 2);
    CHECK(h.at(SymKey{Partition::ones(2), 0}) == P({0, 1}));
    CHECK(h.at(SymKey{Partition::single(2), 0}) == P({0, -1, 1}));

    SymSeries c = term(Bounds{1, 1}, Partition::single(1), 1, P({1, 2, 3}));
    HBasisMap hc = to_h_basis(c);
    CHECK(hc.at(SymKey{Partition::single(1), 1}) == P({1, 2, 3}));

    LPoly scale = P({0, -1, 0, 1});
    SymSeries h3scaled = h_in_p(3).scaled(scale);
    HBasisMap round = to_h_basis(h3scaled);
    REQUIRE(round.size() == 1);
    CHECK(round.at(SymKey{Partition::single(3), 0}) == scale);
    CHECK(from_h_basis(round, Bounds{3, 0}) == h3scaled);
}

TEST_CASE("rank extraction") {
    SymSeries c = term(Bounds{1, 2}, Partition::single(1), 2, P({1, 7}));
    CHECK(rank_at(c, 1, 2) == P({1, 7}));
    CHECK(rank_at(c, 1, 0).is_zero());
    CHECK_THROWS_AS(rank_at(c, 2, 0), Error);

    LPoly scale = P({0, -1, 0, 1});
    SymSeries h3scaled = h_in_p(3).scaled(scale);
    CHECK(rank_at(h3scaled, 3, 0) == scale); // 6 * (L^3-L)/6
}

TEST_CASE("binomial powers of (1 + p_n)") {
    SymSeries b1 = binomial_power(1, P({1, 1}), Bounds{1, 0});
    CHECK(b1.at(Partition(), 0) == LPoly::one());
    CHECK(b1.at(Partition::single(1), 0) == P({1, 1}));
    CHECK(b1.terms().size() == 2);

    CHECK(binomial_power(3, LPoly::zero(), Bounds{9, 0}) == SymSeries::one(Bounds{9, 0}));

    LPoly half = P({0, -1, 1}).scaled(Rat(1, 2));
    SymSeries b2 = binomial_power(2, half, Bounds{2, 0});
    CHECK(b2.at(Partition::single(2), 0) == half);
}

TEST_CASE("degenerate indices are rejected") {
    SymSeries s = SymSeries::s1(Bounds{2, 0});
    CHECK_THROWS_AS(adams_series(0, s), Error);
    CHECK_THROWS_AS(binomial_power(0, LPoly::one(), Bounds{2, 0}), Error);
}

TEST_CASE("component extraction and rebounding") {
    Bounds b{3, 1};
    SymSeries a(b);
    a.add_term(Partition::single(2), 1, P({1}));
    a.add_term(Partition::ones(2), 1, P({2}));
    a.add_term(Partition::single(1), 0, P({3}));
    auto comp = a.component(2, 1);
    CHECK(comp.size() == 2);
    CHECK(comp.at(Partition::single(2)) == P({1}));
    SymSeries small = a.with_bounds(Bounds{1, 0});
    CHECK(small.terms().size() == 1);
    CHECK(small.at(Partition::single(1), 0) == P({3}));
}
