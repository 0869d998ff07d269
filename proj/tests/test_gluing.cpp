#include "doctest.h"
#include "qglue/endomorphism.hpp"
#include "qglue/gluing.hpp"
#include "qglue/io.hpp"

#include <random>

using namespace qglue;

namespace {

Workspace fixtures(std::initializer_list<const char*> files) {
    Workspace ws;
    for (const char* f : files) ws.load_file(std::string(QGLUE_FIXTURE_DIR) + "/" + f);
    return ws;
}

GluingData sub4_gluing() {
    Workspace ws = fixtures({"sub4.quiver", "sub4_pair.rep"});
    return build_gluing({ws.rep("Malpha"), ws.rep("Mbeta")});
}

Representation two_cycle_rep(const GluingData& g, long a, long b, std::vector<long> forward, std::vector<long> back) {
    Field Q = Field::rationals();
    std::vector<Matrix> maps(2);
    for (std::size_t k = 0; k < 2; ++k) {
        const Arrow& ar = g.qm.arrow(k);
        std::size_t rows = ar.target == 0 ? a : b, cols = ar.source == 0 ? a : b;
        const auto& vals = ar.source == 0 ? forward : back;
        maps[k] = Matrix(Q, rows, cols);
        for (std::size_t i = 0; i < rows * cols; ++i) maps[k].set_int(i / cols, i % cols, vals[i]);
    }
    return Representation(g.qm, Q, {a, b}, maps);
}

Representation random_over(const Quiver& q, std::mt19937_64& rng, long max_dim) {
    std::uniform_int_distribution<long> d(0, max_dim);
    DimVector a(q.vertex_count());
    for (auto& x : a) x = d(rng);
    return random_rep(q, a, Field::rationals(), rng);
}

}  // namespace

TEST_CASE("tree-shaped basis of the loop fixture") {
    Workspace ws = fixtures({"k3.quiver", "k3_loop.rep", "k3_loop.bases"});
    const Representation& m = ws.rep("M");
    auto printed = to_ext_basis(ws.bases(), m.quiver());
    CHECK(is_ext_basis(m, m, printed));
    auto generated = tree_shaped_ext_basis(m, m);
    REQUIRE(generated.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(generated[i].arrow == printed[i].arrow);
        CHECK(generated[i].row == printed[i].row);
        CHECK(generated[i].col == printed[i].col);
    }
    auto dup = printed;
    dup[1] = dup[0];
    CHECK_FALSE(is_ext_basis(m, m, dup));
    CHECK(tree_shaped_ext_basis(simple_rep(m.quiver(), 0, m.field()), simple_rep(m.quiver(), 0, m.field())).empty());
}

TEST_CASE("loop functor reproduces M'") {
    Workspace ws = fixtures({"k3.quiver", "k3_loop.rep", "k3_loop.bases"});
    const Representation& m = ws.rep("M");
    LoopGluingData l = build_loop_gluing(m, to_ext_basis(ws.bases(), m.quiver()));
    CHECK(l.ln.arrow_count() == 6);
    CHECK(apply_loop_F(l, loop_scalars(l, {0, 0, 0, 0, 0, 0})) == m);
    Representation mp = apply_loop_F(l, loop_scalars(l, {1, 1, 0, 1, 1, 1}));
    CHECK(mp == ws.rep("Mprime"));
    CHECK(indecomposable(mp).verdict == Verdict::decomposable);
    std::mt19937_64 rng(4);
    Representation x2 = random_rep(l.ln, {2}, Field::rationals(), rng);
    CHECK(apply_loop_F(l, x2).dims() == DimVector{4, 6});
    CHECK_THROWS(build_loop_gluing(ws.rep("Mprime")));
}

TEST_CASE("the 4-subspace gluing quiver") {
    GluingData g = sub4_gluing();
    CHECK(g.qm.vertex_count() == 2);
    CHECK(g.arrows_between(0, 1) == 1);
    CHECK(g.arrows_between(1, 0) == 1);
    CHECK(g.basis[0].arrow == 0);
    CHECK(g.basis[1].arrow == 2);
    Workspace ws = fixtures({"sub4.quiver", "sub4_pair.rep", "sub4_pair.bases"});
    GluingData h = build_gluing({ws.rep("Malpha"), ws.rep("Mbeta")}, to_ext_basis(ws.bases(), ws.quiver("sub4")));
    CHECK(h.basis == g.basis);
    std::vector<ExtBasisElement> bad = {{0, 1, 0, 1, 0, 0}};
    bad[0].arrow = 2;
    CHECK_THROWS_WITH(build_gluing(h.M, bad), doctest::Contains("(1,2)"));
    std::string printed = print_gluing(g);
    CHECK(printed.find("extbasis 1 2 1 r1 1 1") != std::string::npos);
    CHECK(printed.find("extbasis 2 1 1 r3 1 1") != std::string::npos);
}

TEST_CASE("glued 4-subspace representations") {
    GluingData g = sub4_gluing();
    struct Case {
        long a, b;
        std::vector<long> fwd, back;
        DimVector expected;
    };
    std::vector<Case> cases = {
        {1, 2, {1, 0}, {0, 1}, {3, 1, 1, 2, 2}},
        {2, 1, {0, 1}, {1, 0}, {3, 2, 2, 1, 1}},
        {1, 1, {1}, {0}, {2, 1, 1, 1, 1}},
    };
    for (const auto& c : cases) {
        Representation x = two_cycle_rep(g, c.a, c.b, c.fwd, c.back);
        REQUIRE(indecomposable(x).verdict == Verdict::indecomposable);
        Representation fx = apply_F(g, x);
        CHECK(fx.dims() == c.expected);
        CHECK(indecomposable(fx).verdict == Verdict::indecomposable);
        CHECK(hom_dim(x, x) == hom_dim(fx, fx));
    }
    Representation s = simple_rep(g.qm, 1, Field::rationals());
    CHECK(apply_F(g, s) == g.M[1]);
    CHECK_THROWS(apply_F(g, simple_rep(kronecker_quiver(2), 0, Field::rationals())));
}

TEST_CASE("functor laws and fullness on random inputs") {
    GluingData g = sub4_gluing();
    std::mt19937_64 rng(21);
    Field Q = Field::rationals();
    for (int t = 0; t < 25; ++t) {
        Representation x = random_over(g.qm, rng, 2), y = random_over(g.qm, rng, 2);
        Representation fx = apply_F(g, x), fy = apply_F(g, y);
        CHECK(hom_dim(x, y) == hom_dim(fx, fy));
        CHECK(apply_F_mor(g, x, x, identity_morphism(x)) == identity_morphism(fx));
        auto hxy = hom_space(x, y), hyx = hom_space(y, x);
        for (const auto& f : hxy) {
            CHECK_FALSE(is_zero(apply_F_mor(g, x, y, f)));
            for (const auto& h : hyx) {
                CHECK(apply_F_mor(g, x, x, compose(h, f)) ==
                      compose(apply_F_mor(g, y, x, h), apply_F_mor(g, x, y, f)));
            }
        }
        std::uint64_t dsum = 0;
        for (std::size_t v = 0; v < 5; ++v) dsum += fx.dim(v);
        std::uint64_t expected = 0;
        for (std::size_t i = 0; i < 2; ++i) expected += g.M[i].total_dim() * x.dim(i);
        CHECK(dsum == expected);
    }
    Representation x = random_over(g.qm, rng, 2);
    CHECK_THROWS(apply_F_mor(g, x, x, Morphism{{Matrix(Q, x.dim(0), x.dim(0)), Matrix(Q, 1, 1)}}));
}

TEST_CASE("elementary sequences") {
    GluingData g = sub4_gluing();
    CHECK(check_elementary(g.M).passed());
    CHECK_FALSE(check_elementary({g.M[0], g.M[0]}).passed());
    Quiver k2 = kronecker_quiver(2);
    Field Q = Field::rationals();
    CHECK(check_elementary({simple_rep(k2, 0, Q), simple_rep(k2, 1, Q)}).passed());
    CHECK(build_gluing({g.M[0]}).qm.arrow_count() == 0);
}

TEST_CASE("gluing conditions") {
    Quiver k2 = kronecker_quiver(2);
    Field Q = Field::rationals();
    Representation p = simple_rep(k2, 1, Q);
    Representation i1 = simple_rep(k2, 0, Q);
    // (S_sink, S_source): Hom and Ext vanish from the first to the second.
    GluingConditionReport r = check_gluing_conditions({p, i1});
    CHECK(r.cond1);
    CHECK(r.cond2);
    CHECK(r.cond3);
    CHECK(r.theta_c);
    CHECK(r.passed());
    CHECK_FALSE(check_gluing_conditions({i1, p}).cond2);
    // Hom(M_2, M_1) != 0 is allowed by (1)-(3) when r = 2.
    Representation m2 = Representation(k2, Q, {1, 1}, {Matrix::from_rows(Q, {{1}}), Matrix::from_rows(Q, {{0}})});
    GluingConditionReport s = check_gluing_conditions({m2, p});
    CHECK_FALSE(s.cond2);
    CHECK(check_gluing_conditions_dual({p, i1}).cond2);
    CHECK_FALSE(check_gluing_conditions_dual({i1, p}).cond2);
    CHECK(opposite_rep(opposite_rep(m2)) == m2);
}

TEST_CASE("theta isomorphism") {
    GluingData g = sub4_gluing();
    Representation x = two_cycle_rep(g, 1, 2, {1, 0}, {0, 1});
    ThetaCheck t = check_theta_iso(g, x);
    CHECK(t.iso);
    CHECK(t.source_dim == 2);
    CHECK(t.ext_dim == 2);
    CHECK_THROWS(check_theta_iso(g, two_cycle_rep(g, 2, 1, {0, 1}, {1, 0})));
    Quiver s4 = subspace_quiver(4);
    Field Q = Field::rationals();
    std::vector<Representation> m = {simple_rep(s4, 0, Q), simple_rep(s4, 1, Q), simple_rep(s4, 2, Q)};
    GluingData h = build_gluing(m);
    std::mt19937_64 rng(8);
    for (int t2 = 0; t2 < 10; ++t2) {
        DimVector d = {1, static_cast<long>(rng() % 3), static_cast<long>(rng() % 3)};
        Representation y = random_rep(h.qm, d, Q, rng);
        ThetaCheck c = check_theta_iso(h, y);
        CHECK(c.iso);
        CHECK(c.source_dim == c.ext_dim);
    }
}
