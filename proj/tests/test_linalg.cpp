#include "doctest.h"
#include "qglue/linalg.hpp"

#include <algorithm>
#include <random>

using namespace qglue;

namespace {

const Field Q = Field::rationals();

Matrix random_small(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set_int(i, j, d(rng));
    return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
    CHECK(rank(Matrix(Q, 3, 2)) == 0);
    CHECK(rank(Matrix::identity(Q, 4)) == 4);
    CHECK(rank(Matrix::from_rows(Q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("mixed fields are rejected") {
    Matrix a(Q, 2, 2);
    Field f7 = Field::prime(7);
    CHECK_THROWS_WITH(a.set(0, 0, Scalar(f7, 3L)), "field mismatch");
    CHECK_THROWS_AS(Matrix::identity(Q, 2) * Matrix::identity(f7, 2), FieldMismatch);
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(Matrix::identity(Q, 3)).cols() == 0);
    CHECK(kernel_basis(Matrix(Q, 2, 3)).cols() == 3);
    CHECK(rank(kernel_basis(Matrix(Q, 2, 3))) == 3);

    Matrix a = Matrix::from_rows(Q, {{1, 1, 0}});
    Matrix k = kernel_basis(a);
    REQUIRE(k.cols() == 2);
    CHECK((a * k).is_zero());
    // same span as {(1,-1,0), (0,0,1)}
    Matrix expected = Matrix::from_rows(Q, {{1, 0}, {-1, 0}, {0, 1}});
    CHECK(rank(hstack({k, expected})) == 2);
}

TEST_CASE("solve") {
    Matrix b = Matrix::from_rows(Q, {{3}, {5}});
    auto x = solve(Matrix::identity(Q, 2), b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK_FALSE(solve(Matrix(Q, 2, 2), Matrix::from_rows(Q, {{1}, {0}})));

    auto half = solve(Matrix::from_rows(Q, {{2}}), Matrix::from_rows(Q, {{1}}));
    REQUIRE(half);
    CHECK(half->at(0, 0) == Scalar(Q, mpq_class(1, 2)));

    CHECK_THROWS_AS(solve(Matrix::identity(Q, 2), Matrix(Q, 3, 1)), std::invalid_argument);
}

TEST_CASE("inverse") {
    Matrix a = Matrix::from_rows(Q, {{2, 1}, {1, 1}});
    CHECK((a * inverse(a)).is_identity());
    CHECK_THROWS(inverse(Matrix::from_rows(Q, {{1, 2}, {2, 4}})));
}

TEST_CASE("kron layout puts the left index major") {
    Matrix a = Matrix::from_rows(Q, {{1, 2}});
    Matrix b = Matrix::from_rows(Q, {{1}, {3}});
    CHECK(kron(a, b) == Matrix::from_rows(Q, {{1, 2}, {3, 6}}));
}

TEST_CASE("rank-nullity, transpose rank and solve soundness over Q and F_p") {
    std::mt19937_64 rng(11);
    Field fp = Field::prime(101);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        const Field& f = trial % 2 ? fp : Q;
        Matrix a = random_small(f, r, c, rng);
        if (trial % 3 == 0 && r > 1) a.set_block(r - 1, 0, a.block(0, 0, 1, c).scaled(Scalar(f, 2L)));
        Matrix k = kernel_basis(a);
        CHECK(rank(a) + k.cols() == c);
        CHECK((a * k).is_zero());
        CHECK(rank(a) == rank(a.transpose()));
        Matrix b = random_small(f, r, 1, rng);
        if (auto x = solve(a, b)) CHECK(a * *x == b);
        Matrix x0 = random_small(f, c, 1, rng);
        auto y = solve(a, a * x0);
        REQUIRE(y);
        CHECK(a * *y == a * x0);
    }
}

TEST_CASE("rational results do not depend on row order") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix a = random_small(Q, 4, 5, rng);
        std::vector<std::size_t> perm = {0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix p(Q, 4, 5);
        for (std::size_t i = 0; i < 4; ++i) p.set_block(i, 0, a.block(perm[i], 0, 1, 5));
        CHECK(rank(a) == rank(p));
        CHECK(kernel_basis(a) == kernel_basis(p));
    }
}

TEST_CASE("span tracker") {
    SpanTracker s(Q, 3);
    CHECK(s.add(Matrix::from_rows(Q, {{1}, {1}, {0}})));
    CHECK(s.add(Matrix::from_rows(Q, {{0}, {1}, {0}})));
    CHECK_FALSE(s.add(Matrix::from_rows(Q, {{2}, {5}, {0}})));
    CHECK(s.contains(Matrix::from_rows(Q, {{1, 0, 0}})));
    CHECK_FALSE(s.contains(Matrix::from_rows(Q, {{0, 0, 1}})));
    CHECK(s.dimension() == 2);
}

TEST_CASE("scalar parsing") {
    CHECK(Scalar::parse(Q, "-3/6") == Scalar(Q, mpq_class(-1, 2)));
    CHECK(Scalar::parse(Field::prime(7), "1/2") == Scalar(Field::prime(7), 4L));
    CHECK_THROWS(Scalar::parse(Q, "1.5"));
    CHECK_THROWS(Scalar::parse(Q, "1/0"));
    CHECK_THROWS(Field::prime(8));
}
