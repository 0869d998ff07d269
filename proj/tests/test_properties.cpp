#include "doctest.h"
#include "property_suite.hpp"

using namespace qglue;

namespace {

void require_clean(const props::Tally& t) {
    INFO(t.name << ": " << t.failures << " of " << t.cases << " failed; first " << t.first_failure);
    CHECK(t.failures == 0);
}

}  // namespace

TEST_CASE("seeded property families") {
    auto tallies = props::run_all(QGLUE_FIXTURE_DIR, 110, 2024);
    std::size_t total = 0;
    for (const auto& t : tallies) {
        require_clean(t);
        total += t.cases;
    }
    CHECK(total >= 500);
}

TEST_CASE("Euler form is bilinear and dualizes under the opposite quiver") {
    std::mt19937_64 rng(77);
    for (int c = 0; c < 120; ++c) {
        Quiver q = props::random_quiver(rng);
        std::size_t n = q.vertex_count();
        DimVector a = props::random_vector(n, -3, 5, rng);
        DimVector b = props::random_vector(n, -3, 5, rng);
        DimVector d = props::random_vector(n, -3, 5, rng);
        long k = static_cast<long>(rng() % 5) - 2;
        CHECK(euler_form(q, a + k * d, b) == euler_form(q, a, b) + k * euler_form(q, d, b));
        CHECK(euler_form(q, a, b + k * d) == euler_form(q, a, b) + k * euler_form(q, a, d));
        CHECK(euler_form(opposite(q), a, b) == euler_form(q, b, a));
    }
}

TEST_CASE("Hom minus Ext equals the Euler form") {
    std::mt19937_64 rng(91);
    Field Q = Field::rationals();
    for (int c = 0; c < 60; ++c) {
        Quiver q = props::random_quiver(rng);
        Representation x = random_rep(q, props::random_vector(q.vertex_count(), 0, 2, rng), Q, rng);
        Representation y = random_rep(q, props::random_vector(q.vertex_count(), 0, 2, rng), Q, rng);
        long h = static_cast<long>(hom_dim(x, y)), e = static_cast<long>(ext_dim(x, y));
        CHECK(h - e == euler_form(q, x.dims(), y.dims()));
    }
}

TEST_CASE("rank plus nullity") {
    std::mt19937_64 rng(13);
    for (int c = 0; c < 120; ++c) {
        Field f = c % 2 ? Field::prime(7) : Field::rationals();
        std::size_t r = 1 + rng() % 5, k = 1 + rng() % 5;
        Matrix m = Matrix::random(f, r, k, rng);
        if (c % 3 == 0) m.set_block(0, 0, Matrix(f, r, k / 2));
        Matrix ker = kernel_basis(m);
        CHECK(rank(m) + ker.cols() == k);
        CHECK((m * ker).is_zero());
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(image_basis(m).cols() == rank(m));
    }
}
