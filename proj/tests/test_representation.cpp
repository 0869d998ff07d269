#include "doctest.h"
#include "qglue/endomorphism.hpp"
#include "qglue/io.hpp"

#include <random>

using namespace qglue;

namespace {

Workspace fixtures(std::initializer_list<const char*> files) {
    Workspace ws;
    for (const char* f : files) ws.load_file(std::string(QGLUE_FIXTURE_DIR) + "/" + f);
    return ws;
}

Representation random_small(const Quiver& q, const Field& f, std::mt19937_64& rng, long max_dim) {
    std::uniform_int_distribution<long> d(0, max_dim);
    DimVector a(q.vertex_count());
    for (auto& x : a) x = d(rng);
    return random_rep(q, a, f, rng);
}

}  // namespace

TEST_CASE("hom and ext of simples") {
    Quiver k2 = kronecker_quiver(2);
    Field Q = Field::rationals();
    for (std::size_t v = 0; v < 2; ++v) {
        Representation s = simple_rep(k2, v, Q);
        CHECK(hom_dim(s, s) == 1);
        CHECK(ext_dim(s, s) == 0);
        CHECK(is_schurian(s));
    }
    CHECK(ext_dim(simple_rep(k2, 0, Q), simple_rep(k2, 1, Q)) == 2);
}

TEST_CASE("loop fixture M") {
    Workspace ws = fixtures({"k3.quiver", "k3_loop.rep"});
    const Representation& m = ws.rep("M");
    CHECK(m.dims() == DimVector{2, 3});
    CHECK(hom_dim(m, m) == 1);
    CHECK(is_schurian(m));
    CHECK(ext_dim(m, m) == 6);
}

TEST_CASE("4-subspace pair") {
    Workspace ws = fixtures({"sub4.quiver", "sub4_pair.rep"});
    const Representation& a = ws.rep("Malpha");
    const Representation& b = ws.rep("Mbeta");
    CHECK(hom_dim(a, b) == 0);
    CHECK(hom_dim(b, a) == 0);
    CHECK(ext_dim(a, b) == 1);
    CHECK(ext_dim(b, a) == 1);
}

TEST_CASE("extension middle terms") {
    Quiver k2 = kronecker_quiver(2);
    Field Q = Field::rationals();
    Representation x = simple_rep(k2, 0, Q), y = simple_rep(k2, 1, Q);
    CHECK(ext_middle_term(x, y, zero_bundle(x, y)) == direct_sum(y, x));
    MapBundle g = elementary_bundle(x, y, 0, 0, 0);
    Representation e = ext_middle_term(x, y, g);
    CHECK(e.dims() == DimVector{1, 1});
    CHECK(e.map(0) == Matrix::from_rows(Q, {{1}}));
    CHECK(e.map(1) == Matrix::from_rows(Q, {{0}}));
    CHECK(indecomposable(e).verdict == Verdict::indecomposable);
}

TEST_CASE("boundaries are trivial classes and shift middle terms by a base change") {
    Field Q = Field::rationals();
    std::mt19937_64 rng(5);
    std::vector<Quiver> qs = {kronecker_quiver(2), kronecker_quiver(3), subspace_quiver(4)};
    for (int t = 0; t < 30; ++t) {
        const Quiver& q = qs[t % qs.size()];
        Representation x = random_small(q, Q, rng, 2), y = random_small(q, Q, rng, 2);
        Matrix fv = Matrix::random(Q, d_matrix(x, y).cols(), 1, rng);
        Morphism f = morphism_from_vector(x, y, fv);
        Matrix gv = Matrix::random(Q, d_matrix(x, y).rows(), 1, rng);
        MapBundle g = bundle_from_vector(x, y, gv);
        MapBundle df = boundary(x, y, f);
        CHECK(same_ext_class(x, y, df, zero_bundle(x, y)));
        CHECK(same_ext_class(x, y, g, g));
        MapBundle shifted = bundle_from_vector(x, y, vectorize(df) + gv);
        std::vector<Matrix> p;
        for (std::size_t v = 0; v < q.vertex_count(); ++v) {
            Matrix b = Matrix::identity(Q, y.dim(v) + x.dim(v));
            b.set_block(0, y.dim(v), f.blocks[v]);
            p.push_back(b);
        }
        CHECK(change_basis(ext_middle_term(x, y, g), p) == ext_middle_term(x, y, shifted));
    }
}

TEST_CASE("Euler identity and intertwining on random pairs") {
    std::mt19937_64 rng(11);
    std::vector<Quiver> qs = {kronecker_quiver(2), kronecker_quiver(3), subspace_quiver(4), subspace_quiver(5),
                              extended_subspace_quiver()};
    std::vector<Field> fields = {Field::rationals(), Field::prime(101)};
    for (int t = 0; t < 200; ++t) {
        const Quiver& q = qs[t % qs.size()];
        const Field& f = fields[(t / qs.size()) % 2];
        Representation x = random_small(q, f, rng, 3), y = random_small(q, f, rng, 3);
        long h = static_cast<long>(hom_dim(x, y));
        long e = static_cast<long>(ext_dim(x, y));
        CHECK(h - e == euler_form(q, x.dims(), y.dims()));
        for (const auto& m : hom_space(x, y)) {
            for (std::size_t a = 0; a < q.arrow_count(); ++a) {
                const Arrow& ar = q.arrow(a);
                CHECK(y.map(a) * m.blocks[ar.source] == m.blocks[ar.target] * x.map(a));
            }
        }
    }
}

TEST_CASE("random representations") {
    Quiver k2 = kronecker_quiver(2);
    Representation a = random_rep(k2, {2, 3}, 101, 7);
    CHECK(a.dims() == DimVector{2, 3});
    CHECK(a == random_rep(k2, {2, 3}, 101, 7));
    for (std::uint64_t s = 0; s < 6; ++s) {
        Representation x = random_rep(k2, {1, 1}, kDefaultPrime, 2 * s + 1);
        Representation y = random_rep(k2, {1, 1}, kDefaultPrime, 2 * s + 2);
        CHECK(hom_dim(x, y) == 0);
    }
}

TEST_CASE("direct sums") {
    Field Q = Field::rationals();
    Quiver k3 = kronecker_quiver(3);
    std::mt19937_64 rng(3);
    Representation x = random_rep(k3, {1, 2}, Q, rng);
    CHECK(direct_sum(x, zero_rep(k3, Q)) == x);
    Representation s = simple_rep(k3, 0, Q);
    CHECK(direct_sum(x, s).dims() == DimVector{2, 2});
    CHECK(indecomposable(direct_sum(s, s)).verdict == Verdict::decomposable);
}

TEST_CASE("mismatches are rejected") {
    Field Q = Field::rationals();
    Representation x = simple_rep(kronecker_quiver(2), 0, Q);
    Representation y = simple_rep(kronecker_quiver(3), 0, Q);
    CHECK_THROWS(hom_space(x, y));
    CHECK_THROWS(hom_space(x, simple_rep(kronecker_quiver(2), 0, Field::prime(7))));
    Representation z(kronecker_quiver(2), Q, {1, 1});
    CHECK_THROWS_WITH(z.set_map(0, Matrix(Q, 2, 1)), doctest::Contains("'a'"));
}
