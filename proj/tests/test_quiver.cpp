#include "doctest.h"
#include "qglue/quiver.hpp"

#include <random>
#include <set>
#include <stdexcept>

using namespace qglue;

TEST_CASE("Euler form") {
    Quiver k3 = kronecker_quiver(3);
    CHECK(euler_form(k3, {2, 3}, {2, 3}) == -5);
    CHECK(euler_form(kronecker_quiver(2), {2, 2}, {2, 2}) == 0);
    Quiver s4 = subspace_quiver(4);
    CHECK(euler_form(s4, {1, 1, 1, 0, 0}, {1, 0, 0, 1, 1}) == -1);
    CHECK_THROWS_AS(euler_form(k3, {1}, {1, 2}), std::invalid_argument);
    Quiver l = loop_quiver(2);
    CHECK(euler_form(l, {3}, {3}) == 9 - 18);
}

TEST_CASE("symmetrized form") {
    CHECK(symmetrized_form(kronecker_quiver(2), {1, 1}, {1, 0}) == 0);
    CHECK(symmetrized_form(kronecker_quiver(3), {1, 0}, {0, 1}) == -3);
    CHECK(symmetrized_form(subspace_quiver(5), {0, 0, 0, 0, 0, 0}, {1, 2, 3, 4, 5, 6}) == 0);
}

TEST_CASE("reflections") {
    CHECK(reflect(kronecker_quiver(2), 1, {1, 0}) == DimVector{1, 2});
    CHECK(reflect(kronecker_quiver(3), 1, {1, 0}) == DimVector{1, 3});
    CHECK_THROWS_WITH(reflect(loop_quiver(1), 0, {1}), "reflection undefined at loop vertex");
}

TEST_CASE("root classification") {
    Quiver k2 = kronecker_quiver(2);
    CHECK(classify_root(k2, {1, 1}).tag == RootTag::imaginary);
    CHECK(classify_root(k2, {1, 1}).word.empty());
    CHECK(classify_root(k2, {1, 0}).tag == RootTag::real);
    CHECK(classify_root(k2, {3, 1}).tag == RootTag::not_root);
    RootClass r = classify_root(k2, {2, 3});
    CHECK(r.tag == RootTag::real);
    CHECK(total_dimension(r.terminal) == 1);
    CHECK_THROWS(classify_root(loop_quiver(2), {1}));
}

TEST_CASE("fundamental domain") {
    Quiver k2 = kronecker_quiver(2);
    CHECK(in_fundamental_domain(k2, {1, 1}));
    CHECK_FALSE(in_fundamental_domain(k2, {1, 0}));
    // hand values of (a, e_q) for (10,3,3,3,3,8): q0: 20-20 = 0, q1..q4: 6-10 = -4, q5: 16-10 = 6
    Quiver s5 = subspace_quiver(5);
    DimVector a = {10, 3, 3, 3, 3, 8};
    CHECK(symmetrized_form(s5, a, unit_vector(s5, 0)) == 0);
    CHECK(symmetrized_form(s5, a, unit_vector(s5, 1)) == -4);
    CHECK(symmetrized_form(s5, a, unit_vector(s5, 5)) == 6);
    CHECK_FALSE(in_fundamental_domain(s5, a));
}

TEST_CASE("opposite quiver") {
    Quiver k2 = kronecker_quiver(2);
    Quiver o = opposite(k2);
    CHECK(o.arrow(0).source == 1);
    CHECK(o.arrow(0).target == 0);
    CHECK(opposite(o) == k2);
    Quiver s4o = opposite(subspace_quiver(4));
    for (const auto& a : s4o.arrows()) CHECK(a.source == 0);
}

TEST_CASE("quiver validation") {
    Quiver q("t", {"a", "b"});
    CHECK_THROWS(q.add_arrow("x", "a", "c"));
    q.add_arrow("x", "a", "b");
    CHECK_THROWS(q.add_arrow("x", "b", "a"));
    CHECK_THROWS(q.add_arrow("y", "a", "a"));
    CHECK_THROWS(Quiver("d", {"a", "a"}));
}

TEST_CASE("dimension vector parsing") {
    CHECK(parse_dim_vector("(1, 2,3)") == DimVector{1, 2, 3});
    CHECK_THROWS(parse_dim_vector("1,2"));
    CHECK_THROWS(parse_dim_vector("(1,x)"));
    CHECK(to_string(DimVector{3, 2, 2, 1, 1}) == "(3,2,2,1,1)");
}

TEST_CASE("algebraic properties on random vectors") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(0, 5);
    std::vector<Quiver> qs = {kronecker_quiver(2), kronecker_quiver(3), subspace_quiver(4), subspace_quiver(5),
                              extended_subspace_quiver()};
    for (int t = 0; t < 300; ++t) {
        const Quiver& q = qs[t % qs.size()];
        auto rv = [&] {
            DimVector v(q.vertex_count());
            for (auto& x : v) x = d(rng);
            return v;
        };
        DimVector a = rv(), a2 = rv(), b = rv();
        CHECK(euler_form(q, a + a2, b) == euler_form(q, a, b) + euler_form(q, a2, b));
        CHECK(euler_form(q, a, b) == euler_form(opposite(q), b, a));
        std::size_t v = rng() % q.vertex_count();
        CHECK(reflect(q, v, reflect(q, v, a)) == a);
        CHECK(symmetrized_form(q, reflect(q, v, a), reflect(q, v, b)) == symmetrized_form(q, a, b));
        CHECK(classify_root(q, unit_vector(q, v)).tag == RootTag::real);
    }
}

TEST_CASE("Kronecker root table") {
    Quiver k2 = kronecker_quiver(2);
    std::set<DimVector> expected;
    for (long n = 0; n <= 4; ++n) {
        if (n + 1 <= 4) {
            expected.insert({n, n + 1});
            expected.insert({n + 1, n});
        }
        if (n >= 1) expected.insert({n, n});
    }
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b) {
            if (a == 0 && b == 0) continue;
            bool root = classify_root(k2, {a, b}).tag != RootTag::not_root;
            CHECK_MESSAGE(root == (expected.count({a, b}) > 0), to_string(DimVector{a, b}));
        }
}
