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

}  // namespace

TEST_CASE("endomorphism algebra of a simple") {
    EndAlgebra e = end_algebra(simple_rep(kronecker_quiver(2), 0, Field::rationals()));
    CHECK(e.dim == 1);
    CHECK(e.radical_dim == 0u);
}

TEST_CASE("Jordan representations of K(2)") {
    Workspace ws = fixtures({"k2.quiver", "k2_jordan.rep"});
    for (const char* name : {"X0", "X1"}) {
        const Representation& x = ws.rep(name);
        EndAlgebra e = end_algebra(x);
        CHECK(e.dim == 2);
        CHECK(e.radical_dim == 1u);
        CHECK_FALSE(is_schurian(x));
        CHECK(indecomposable(x).verdict == Verdict::indecomposable);
    }
}

TEST_CASE("composition closes inside the endomorphism basis") {
    Workspace ws = fixtures({"k3.quiver", "k3_loop.rep"});
    const Representation& x = ws.rep("Mprime");
    EndAlgebra e = end_algebra(x);
    CHECK(e.dim >= 2);
    CHECK(e.coordinates(identity_morphism(x)).rows() == e.dim);
    for (std::size_t i = 0; i < e.dim; ++i)
        for (std::size_t j = 0; j < e.dim; ++j)
            CHECK(e.element(e.left[i].col(j)) == compose(e.basis[i], e.basis[j]));
}

TEST_CASE("the glued representation M' splits") {
    Workspace ws = fixtures({"k3.quiver", "k3_loop.rep"});
    const Representation& mp = ws.rep("Mprime");
    const Morphism& g = ws.morphism("g").morphism;
    CHECK(is_nontrivial_idempotent(mp, g));
    EndAlgebra e = end_algebra(mp);
    CHECK(*e.radical_dim + 2 <= e.dim);
    IndecResult r = indecomposable(mp);
    REQUIRE(r.verdict == Verdict::decomposable);
    REQUIRE(r.witness);
    CHECK(is_nontrivial_idempotent(mp, *r.witness));
    Splitting s = split_by_idempotent(mp, *r.witness);
    CHECK(s.verified);
    CHECK(s.image.dims() + s.kernel.dims() == mp.dims());
    CHECK(split_by_idempotent(mp, g).verified);
    CHECK(indecomposable(ws.rep("M")).verdict == Verdict::indecomposable);
}

TEST_CASE("direct sums of indecomposables are decomposable with verified witnesses") {
    Workspace ws = fixtures({"k2.quiver", "k2_jordan.rep"});
    Field Q = Field::rationals();
    Quiver k2 = ws.quiver("K2");
    std::vector<Representation> pieces = {ws.rep("X0"), ws.rep("X1"), simple_rep(k2, 0, Q), simple_rep(k2, 1, Q)};
    for (const auto& a : pieces)
        for (const auto& b : pieces) {
            IndecResult r = indecomposable(direct_sum(a, b), 3);
            CHECK(r.verdict == Verdict::decomposable);
            REQUIRE(r.witness);
            Representation x = direct_sum(a, b);
            CHECK(split_by_idempotent(x, *r.witness).verified);
        }
}

TEST_CASE("idempotents from elements with rational eigenvalues") {
    Field Q = Field::rationals();
    Quiver k2 = kronecker_quiver(2);
    Representation s = simple_rep(k2, 0, Q);
    Representation x = direct_sum(s, s);
    Morphism phi{{Matrix::from_rows(Q, {{1, 1}, {0, 2}}), Matrix(Q, 0, 0)}};
    auto e = idempotent_from_element(x, phi);
    REQUIRE(e);
    CHECK(is_nontrivial_idempotent(x, *e));
    Morphism scalar{{Matrix::from_rows(Q, {{3, 0}, {0, 3}}), Matrix(Q, 0, 0)}};
    CHECK_FALSE(idempotent_from_element(x, scalar));
}

TEST_CASE("non-rational fields give no verdict") {
    Representation s = simple_rep(kronecker_quiver(2), 0, Field::prime(7));
    CHECK(indecomposable(s).verdict == Verdict::unknown);
    EndAlgebra e = end_algebra(s);
    CHECK(e.dim == 1);
    CHECK_FALSE(e.radical_dim);
}
