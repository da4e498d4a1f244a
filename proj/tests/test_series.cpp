#include "doctest.h"
#include "qtoric/bfk.hpp"
#include "qtoric/error.hpp"
#include "qtoric/series.hpp"

using namespace qtoric;

namespace {
Series<Integer> int_monomial(int e, int order) {
    return Series<Integer>::monomial(e, 1, order);
}
}  // namespace

TEST_CASE("Cauchy product respects truncation and order") {
    const auto t = int_monomial(1, 6);
    CHECK((t * t).coeff(2) == 1);
    CHECK((t * t).order() == 6);

    // truncation order is the min of the operands'
    const auto f = int_monomial(1, 3);
    const auto g = int_monomial(1, 5);
    CHECK((f * g).order() == 3);

    const auto one = Series<Integer>::one(6);
    CHECK(f * Series<Integer>::one(3) == f);
    CHECK((one * one).coeff(0) == 1);
}

TEST_CASE("noncommutative coefficients multiply in written order") {
    // Z(t)^2 at t^3 is Z_0 Z_1 + Z_1 Z_0 = 2 Z_1
    const auto z = z_series(5);
    const auto sq = z * z;
    CHECK(sq.coeff(3) == nsymm_generator(1) * Integer(2));
    CHECK(sq.coeff(2) == nsymm_one());
    // t^4: Z_0 Z_2 + Z_1 Z_1 + Z_2 Z_0
    CHECK(sq.coeff(4) ==
          nsymm_generator(2) * Integer(2) + nsymm_word(Composition({1, 1})));
}

TEST_CASE("substitution is Horner evaluation with left coefficients") {
    // f = t^2, g = t + t^2 -> t^2 + 2t^3 + t^4
    Series<Integer> g(6);
    g.set_coeff(1, 1);
    g.set_coeff(2, 1);
    const auto f = int_monomial(2, 6);
    const auto fg = substitute(f, g);
    CHECK(fg.coeff(2) == 1);
    CHECK(fg.coeff(3) == 2);
    CHECK(fg.coeff(4) == 1);
    CHECK(fg.coeff(5) == 0);

    // identity substitution
    Series<Integer> h(4);
    h.set_coeff(1, 3);
    h.set_coeff(3, -2);
    CHECK(substitute(h, int_monomial(1, 4)) == h);

    // t composed with Z(t) is Z(t)
    const auto z = z_series(5);
    CHECK(substitute(Series<NSymmElement>::monomial(1, nsymm_one(), 5), z) == z);

    // nonzero constant term rejected
    CHECK_THROWS_AS(substitute(f, Series<Integer>::one(6)), ArgumentError);
}

TEST_CASE("laurent residue extracts the exponent -1 coefficient") {
    LaurentSeries<Integer> f(3);
    f.set_coeff(-1, 1);
    CHECK(residue(f) == 1);

    LaurentSeries<Integer> g(0);
    g.set_coeff(3, 1);
    CHECK(residue(g) == 0);

    LaurentSeries<Integer> h(2);
    h.set_coeff(-2, 5);
    h.set_coeff(-1, 7);
    h.set_coeff(1, 1);
    CHECK(residue(h) == 7);

    CHECK_THROWS_AS(h.set_coeff(-3, 1), ArgumentError);
}

TEST_CASE("laurent multiplication convolves exponents") {
    LaurentSeries<Integer> a(2), b(1);
    a.set_coeff(-2, 3);
    a.set_coeff(1, 1);
    b.set_coeff(-1, 2);
    b.set_coeff(0, 1);
    const auto p = a * b;
    CHECK(p.pole_bound() == 3);
    CHECK(*p.find(-3) == 6);
    CHECK(*p.find(-2) == 3);
    CHECK(*p.find(0) == 2);
    CHECK(*p.find(1) == 1);
    CHECK(residue(p) == 0);
}

TEST_CASE("series exponents below zero are rejected") {
    Series<Integer> s(3);
    CHECK_THROWS_AS(s.set_coeff(-1, 1), ArgumentError);
    CHECK_THROWS_AS(Series<Integer>(-1), ArgumentError);
    CHECK_THROWS_AS(s.pow(-2), ArgumentError);
}
