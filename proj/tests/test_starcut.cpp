#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "tcw/starcut.hpp"

using namespace tcw;

namespace {

Multigraph clique(int n) {
    Multigraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

StarCutInstance bare(Multigraph g, int w) {
    StarCutInstance inst;
    inst.g = std::move(g);
    inst.w = w;
    return inst;
}

}  // namespace

TEST_CASE("make_instance") {
    Multigraph p;  // path a-b-c
    p.add_edge(0, 1);
    p.add_edge(1, 2);

    auto whole = make_instance(p.vertices(), p, 3);
    CHECK(whole.b.empty());
    CHECK(whole.gamma.empty());
    CHECK(whole.g == p);

    auto half = make_instance({0, 1}, p, 3);
    CHECK(half.b == VertexSet{1});
    CHECK(half.gamma.at(1) == 1);
    CHECK(half.g.vertex_count() == 2);
    CHECK(half.g.multiplicity(0, 1) == 1);

    auto k4 = make_instance({0, 1}, clique(4), 3);
    CHECK(k4.b == VertexSet{0, 1});
    CHECK(k4.gamma.at(0) == 2);
    CHECK(k4.gamma.at(1) == 2);
}

TEST_CASE("solve: boundary-weight and size degenerate cases") {
    // some gamma(x) > w: never a YES-instance
    Multigraph e;
    e.add_edge(0, 1);
    StarCutInstance inst = bare(e, 2);
    inst.b = {0};
    inst.gamma[0] = 3;
    CHECK(!solve(inst).has_value());
    CHECK(!brute_force(inst).has_value());

    // single vertex: no non-trivial star
    Multigraph one;
    one.add_vertex(0);
    CHECK(!solve(bare(one, 4)).has_value());
    CHECK(!brute_force(bare(one, 4)).has_value());
}

TEST_CASE("solve: two disjoint edges, w = 3") {
    Multigraph g;
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    auto inst = bare(g, 3);
    auto sol = solve(inst);
    REQUIRE(sol.has_value());
    CHECK(verify_solution(inst, *sol).empty());
    CHECK(brute_force(inst).has_value());
    // the all-in-leaves answer is among the valid ones
    StarCutSolution split{{}, {{0, 1}, {2, 3}}};
    CHECK(verify_solution(inst, split).empty());
}

TEST_CASE("triangle fixtures") {
    auto tri = clique(3);
    // w=2 admits {v} + one two-vertex leaf (cut 2, |X_0|+l = 2); both
    // solvers agree, and w=1 is where it turns infeasible
    auto sol2 = solve(bare(tri, 2));
    REQUIRE(sol2.has_value());
    CHECK(verify_solution(bare(tri, 2), *sol2).empty());
    CHECK(brute_force(bare(tri, 2)).has_value());
    CHECK(!solve(bare(tri, 1)).has_value());
    CHECK(!brute_force(bare(tri, 1)).has_value());

    auto inst3 = bare(tri, 3);
    auto sol = solve(inst3);
    REQUIRE(sol.has_value());
    CHECK(verify_solution(inst3, *sol).empty());
    CHECK(brute_force(inst3).has_value());
}

TEST_CASE("verify_solution flags broken answers") {
    Multigraph g;
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    auto inst = bare(g, 3);

    StarCutSolution ok{{}, {{0, 1}, {2, 3}}};
    CHECK(verify_solution(inst, ok).empty());

    StarCutSolution missing{{}, {{0, 1}}};  // 2, 3 unassigned
    CHECK(!verify_solution(inst, missing).empty());

    StarCutSolution empty_part{{0, 1, 2, 3}, {{}}};
    CHECK(!verify_solution(inst, empty_part).empty());

    StarCutSolution trivial_sol{{}, {{0, 1, 2, 3}}};  // one non-empty bag
    CHECK(!verify_solution(inst, trivial_sol).empty());

    StarCutSolution too_many{{0, 1}, {{2}, {3}}};  // |X_0| + l = 4 > 3
    CHECK(!verify_solution(inst, too_many).empty());
}

TEST_CASE("monotone in w") {
    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        const int n = 3 + static_cast<int>(rng() % 4);
        Multigraph g;
        for (int v = 0; v < n; ++v) g.add_vertex(v);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3) g.add_edge(u, v, 1 + static_cast<int>(rng() % 2));
        bool prev = false;
        for (int w = 1; w <= 5; ++w) {
            auto inst = bare(g, w);
            bool yes = solve(inst).has_value();
            if (prev) CHECK(yes);  // YES at w stays YES at w+1
            prev = yes;
        }
    }
}

TEST_CASE("DP agrees with the enumeration oracle") {
    std::mt19937 rng(23);
    for (int it = 0; it < 120; ++it) {
        const int n = 2 + static_cast<int>(rng() % 6);
        Multigraph g;
        for (int v = 0; v < n; ++v) g.add_vertex(v);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v, 1 + static_cast<int>(rng() % 2));
        const int w = 1 + static_cast<int>(rng() % 4);
        StarCutInstance inst = bare(g, w);
        for (Vertex v : g.vertices())
            if (rng() % 3 == 0) {
                inst.b.insert(v);
                inst.gamma[v] = static_cast<int>(rng() % (w + 2));
            }
        auto fast = solve(inst);
        auto slow = brute_force(inst);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(verify_solution(inst, *fast).empty());
            // condition 2 holds on the literal star
            auto d = fast->as_decomposition();
            CHECK(width(inst.g, d).internal_width <= w);
        }
    }
}

TEST_CASE("solve rejects a broken nice decomposition") {
    Multigraph e;
    e.add_edge(0, 1);
    NiceTreeDecomposition junk;  // empty: not a decomposition of e
    CHECK_THROWS(solve(bare(e, 3), junk));
}
