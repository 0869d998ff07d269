#include "doctest.h"
#include "qglue/linalg.hpp"
#include "qglue/polynomial.hpp"

#include <random>

using namespace qglue;

namespace {

const Field Q = Field::rationals();

Polynomial poly(const Field& f, std::vector<long> c) {
    std::vector<Scalar> s;
    for (long v : c) s.emplace_back(f, v);
    return Polynomial(f, s);
}

}  // namespace

TEST_CASE("division and gcd") {
    Polynomial a = poly(Q, {-1, 0, 1});  // x^2 - 1
    Polynomial b = poly(Q, {-1, 1});     // x - 1
    auto [q, r] = divmod(a, b);
    CHECK(q == poly(Q, {1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(a, poly(Q, {1, 2, 1})) == poly(Q, {1, 1}));
}

TEST_CASE("extended gcd identity") {
    Polynomial a = poly(Q, {2, -3, 1});
    Polynomial b = poly(Q, {3, 0, 1});
    Bezout e = extended_gcd(a, b);
    CHECK(e.g == poly(Q, {1}));
    CHECK(e.u * a + e.v * b == e.g);
}

TEST_CASE("squarefree decomposition") {
    Polynomial f = poly(Q, {-1, 1}) * poly(Q, {-1, 1}) * poly(Q, {2, 0, 1});
    auto sq = squarefree_decomposition(f);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].second == 1);
    CHECK(sq[0].first == poly(Q, {2, 0, 1}));
    CHECK(sq[1].second == 2);
    CHECK(sq[1].first == poly(Q, {-1, 1}));
}

TEST_CASE("modular and rational roots") {
    Field f = Field::prime(2147483647);
    Polynomial g = poly(f, {-6, 11, -6, 1}) * poly(f, {1, 0, 1});  // (x-1)(x-2)(x-3)(x^2+1)
    auto r = roots_mod_p(g);
    // x^2 + 1 has no root because p = 3 mod 4
    CHECK(r == std::vector<std::uint64_t>{1, 2, 3});

    Polynomial h = poly(Q, {-3, 2}) * poly(Q, {1, 3}) * poly(Q, {-2, 0, 1});  // (2x-3)(3x+1)(x^2-2)
    auto rr = rational_roots(h);
    REQUIRE(rr.size() == 2);
    CHECK(rr[0] == mpq_class(-1, 3));
    CHECK(rr[1] == mpq_class(3, 2));
    CHECK(rational_roots(poly(Q, {0, 0, 1})) == std::vector<mpq_class>{0});
}

TEST_CASE("characteristic polynomial and Cayley-Hamilton") {
    Matrix a = Matrix::from_rows(Q, {{1, 2}, {3, 4}});
    CHECK(characteristic_polynomial(a) == poly(Q, {-2, -5, 1}));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + t % 6;
        Matrix m(Q, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d(rng) > 0) m.set_int(i, j, d(rng));
        Polynomial c = characteristic_polynomial(m);
        CHECK(c.degree() == static_cast<int>(n));
        CHECK(c.evaluate(m).is_zero());
        CHECK(c.coeff(n - 1) == -trace(m));
    }
}
