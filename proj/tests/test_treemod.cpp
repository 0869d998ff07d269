#include "doctest.h"
#include "qglue/endomorphism.hpp"
#include "qglue/treemod.hpp"

#include <random>

using namespace qglue;

namespace {

Workspace fixtures(std::initializer_list<const char*> files) {
    Workspace ws;
    for (const char* f : files) ws.load_file(std::string(QGLUE_FIXTURE_DIR) + "/" + f);
    return ws;
}

CoverFragment edge_fragment(const Quiver& base, const std::string& arrow, const std::string& src,
                            const std::string& dst) {
    CoverFragment f;
    f.name = "edge";
    f.base = base;
    f.vertices = {{"u", src, "1"}, {"v", dst, "x"}};
    f.arrows = {{"e", "u", "v", arrow}};
    Quiver fq("edge", {"u", "v"});
    fq.add_arrow("e", 0, 1);
    Field Q = Field::rationals();
    f.rep = Representation(fq, Q, {1, 1}, {Matrix::from_rows(Q, {{1}})});
    return f;
}

}  // namespace

TEST_CASE("coefficient quiver of the loop fixture") {
    Workspace ws = fixtures({"k3.quiver", "k3_loop.rep"});
    const Representation& m = ws.rep("M");
    CoefficientQuiver c = coefficient_quiver(m);
    CHECK(c.vertices.size() == 5);
    CHECK(c.arrows.size() == 4);
    CHECK(is_tree(c));
    CHECK(arrow_count(m) == 4);
    for (const auto& a : c.arrows) CHECK(a.value.is_one());
    const Representation& mp = ws.rep("Mprime");
    CHECK(arrow_count(mp) > 4);
}

TEST_CASE("coefficient quivers of small representations") {
    Workspace ws = fixtures({"k2.quiver", "k2_jordan.rep"});
    const Representation& x1 = ws.rep("X1");
    CHECK(arrow_count(x1) == 5);
    CHECK_FALSE(is_tree_basis(x1));
    CHECK(arrow_count(ws.rep("X0")) == 3);
    CHECK(is_tree_basis(ws.rep("X0")));

    Field Q = Field::rationals();
    Quiver k2 = ws.quiver("K2");
    CoefficientQuiver z = coefficient_quiver(zero_rep(k2, Q));
    CHECK(z.vertices.empty());
    CHECK_FALSE(is_tree(z));
    CHECK(is_tree_basis(simple_rep(k2, 1, Q)));
    CHECK_FALSE(is_tree_basis(Representation(k2, Q, {1, 1})));

    std::vector<Matrix> singular = {Matrix::from_rows(Q, {{1, 1}, {1, 1}}), Matrix::identity(Q, 2)};
    CHECK_THROWS_WITH(coefficient_quiver(x1, singular), doctest::Contains("not invertible"));
    CHECK_THROWS(coefficient_quiver(x1, {Matrix::identity(Q, 2)}));

    std::vector<Matrix> scaled = {Matrix::from_rows(Q, {{2, 0}, {0, 1}}), Matrix::from_rows(Q, {{2, 0}, {0, 1}})};
    CHECK(arrow_count(x1, scaled) == 5);
}

TEST_CASE("DOT export") {
    Workspace ws = fixtures({"k3.quiver", "k3_loop.rep"});
    const Representation& m = ws.rep("M");
    std::string dot = to_dot(coefficient_quiver(m), m);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("\"q1_1\"") != std::string::npos);
    CHECK(dot.find("\"q2_3\"") != std::string::npos);
    CHECK(dot.find("\"q1_2\" -> \"q2_3\" [label=\"a 1\"]") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("push-down of cover fragments") {
    Workspace ws = fixtures({"k3.quiver", "k3_loop.rep", "k3_tree.fragment"});
    const Quiver& k3 = ws.quiver("K3");
    Representation m = push_down(ws.fragment("Mtree"));
    CHECK(m == ws.rep("M"));
    CHECK(indecomposable(m).verdict == Verdict::indecomposable);

    CoverFragment single;
    single.name = "pt";
    single.base = k3;
    single.vertices = {{"p", "q2", "1"}};
    single.rep = Representation(Quiver("pt", {"p"}), Field::rationals(), {1});
    CHECK(push_down(single) == simple_rep(k3, 1, Field::rationals()));

    CoverFragment e = edge_fragment(k3, "b", "q1", "q2");
    Representation pe = push_down(e);
    CHECK(pe.dims() == DimVector{1, 1});
    CHECK(pe.map(1).at(0, 0).is_one());
    CHECK(pe.map(0).is_zero());

    CHECK_THROWS_WITH(push_down(edge_fragment(k3, "b", "q2", "q1")), doctest::Contains("inconsistent"));
    CHECK_THROWS_WITH(push_down(edge_fragment(k3, "z", "q1", "q2")), doctest::Contains("unknown label"));
}

TEST_CASE("disjoint fragments push down to direct sums") {
    Workspace ws = fixtures({"k3.quiver", "k3_loop.rep", "k3_tree.fragment"});
    const CoverFragment& t = ws.fragment("Mtree");
    const Quiver& k3 = ws.quiver("K3");
    CoverFragment e = edge_fragment(k3, "c", "q1", "q2");

    CoverFragment u;
    u.name = "union";
    u.base = k3;
    u.vertices = t.vertices;
    u.arrows = t.arrows;
    std::vector<std::string> names = t.rep.quiver().vertices();
    names.push_back("u");
    names.push_back("v");
    Quiver uq("union", names);
    for (const auto& a : t.rep.quiver().arrows()) uq.add_arrow(a.name, a.source, a.target);
    uq.add_arrow("e", names.size() - 2, names.size() - 1);
    u.vertices.insert(u.vertices.end(), e.vertices.begin(), e.vertices.end());
    u.arrows.insert(u.arrows.end(), e.arrows.begin(), e.arrows.end());
    DimVector dims = t.rep.dims();
    dims.push_back(1);
    dims.push_back(1);
    std::vector<Matrix> maps = t.rep.maps();
    maps.push_back(e.rep.map(0));
    u.rep = Representation(uq, Field::rationals(), dims, maps);

    Representation pu = push_down(u);
    Representation sum = direct_sum(push_down(t), push_down(e));
    CHECK(pu.dims() == sum.dims());
    auto iso = isomorphism_certificate(pu, sum);
    REQUIRE(iso);
    CHECK(is_morphism(pu, sum, *iso));
    CHECK(indecomposable(pu).verdict == Verdict::decomposable);
}

TEST_CASE("coefficient quivers round-trip through push-down") {
    Workspace ws = fixtures({"k3.quiver", "k3_loop.rep", "k2.quiver", "k2_jordan.rep", "sub4.quiver",
                             "sub4_pair.rep"});
    for (const char* name : {"M", "Mprime", "X0", "X1", "Malpha", "Mbeta"}) {
        const Representation& x = ws.rep(name);
        CoefficientQuiver c = coefficient_quiver(x);
        CoverFragment f = fragment_from_coefficients(c, x);
        CHECK(push_down(f) == x);
        CHECK(f.arrows.size() == arrow_count(x));
    }
    std::mt19937_64 rng(5);
    Quiver k3 = ws.quiver("K3");
    for (int t = 0; t < 10; ++t) {
        Representation x = random_rep(k3, {2, 2}, Field::rationals(), rng);
        CHECK(push_down(fragment_from_coefficients(coefficient_quiver(x), x)) == x);
    }
}

TEST_CASE("isomorphism certificates") {
    Workspace ws = fixtures({"k2.quiver", "k2_jordan.rep"});
    const Representation& x0 = ws.rep("X0");
    const Representation& x1 = ws.rep("X1");
    Field Q = Field::rationals();
    CHECK_FALSE(isomorphism_certificate(x0, x1));
    std::vector<Matrix> p = {Matrix::from_rows(Q, {{1, 2}, {0, 1}}), Matrix::from_rows(Q, {{1, 2}, {0, 1}})};
    Representation y = change_basis(x1, p);
    auto c = isomorphism_certificate(x1, y);
    REQUIRE(c);
    CHECK(is_morphism(x1, y, *c));
    CHECK(is_invertible(c->blocks[0]));
    CHECK(is_invertible(c->blocks[1]));
}
