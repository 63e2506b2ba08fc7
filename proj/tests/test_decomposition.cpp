#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tcw/decomposition.hpp"
#include "tcw/instances.hpp"

using namespace tcw;

namespace {

Multigraph clique(int n) {
    Multigraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// K_4 as a star with an empty center and four singleton leaves
TreeCutDecomposition k4_star() {
    TreeCutDecomposition d;
    d.bags = {{}, {0}, {1}, {2}, {3}};
    d.tree_edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    return d;
}

}  // namespace

TEST_CASE("validate") {
    auto g = clique(4);
    CHECK(validate(g, TreeCutDecomposition::trivial(g)).empty());
    CHECK(validate(g, k4_star()).empty());
    // strict mode flags the empty center only when it is a leaf
    TreeCutDecomposition leafy;
    leafy.bags = {{0, 1, 2, 3}, {}};
    leafy.tree_edges = {{0, 1}};
    CHECK(validate(g, leafy).empty());
    CHECK(!validate(g, leafy, true).empty());

    TreeCutDecomposition bad = k4_star();
    bad.bags[1] = {0, 1};  // overlaps bag 2
    CHECK(!validate(g, bad).empty());
    bad = k4_star();
    bad.bags[1] = {};  // vertex 0 uncovered
    CHECK(!validate(g, bad).empty());
    bad = k4_star();
    bad.tree_edges.pop_back();  // disconnected tree
    CHECK(!validate(g, bad).empty());
}

TEST_CASE("adhesion") {
    auto g = clique(4);
    auto d = k4_star();
    for (const auto& e : d.tree_edges) CHECK(adhesion(g, d, e).size == 3);
    CHECK_THROWS_AS(adhesion(g, d, {1, 2}), std::invalid_argument);

    auto h4 = gen_hw(4);
    auto star = hw_witness(4);
    for (const auto& e : star.tree_edges) CHECK(adhesion(h4, star, e).size == 3);
}

TEST_CASE("three_center") {
    auto g = clique(4);
    CHECK(three_center(g, g.vertices()) == g);

    Multigraph p;  // a-b-c
    p.add_edge(0, 1);
    p.add_edge(1, 2);
    auto r = three_center(p, {0, 2});
    CHECK(r.vertex_count() == 2);
    CHECK(r.multiplicity(0, 2) == 1);

    Multigraph star;
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    auto c = three_center(star, {0});
    CHECK(c.vertex_count() == 1);
    CHECK(c.has_vertex(0));

    // idempotent, never shrinks below |x|
    auto once = three_center(p, {1});
    CHECK(three_center(once, {1}) == once);
    CHECK(once.vertex_count() >= 1);
}

TEST_CASE("torso") {
    auto g = clique(4);
    auto triv = TreeCutDecomposition::trivial(g);
    CHECK(torso(g, triv, 0).graph == g);

    auto t = torso(g, k4_star(), 0);
    CHECK(t.graph.vertex_count() == 4);
    CHECK(t.contracted.size() == 4);
    CHECK(t.graph.edge_total() == 6);  // the K_4 edges between contractions

    auto h4 = gen_hw(4);
    auto center = torso(h4, hw_witness(4), 0);
    CHECK(center.graph.vertex_count() == 4);
    for (const auto& [a, b, m] : center.graph.edges()) CHECK(m == 1);
    CHECK(center.graph.edge_pairs() == 6);
}

TEST_CASE("width") {
    auto g = clique(4);
    CHECK(width(g, TreeCutDecomposition::trivial(g)).width == 4);
    auto rep = width(g, k4_star());
    CHECK(rep.width == 4);           // center torso: 4 contracted vertices
    CHECK(rep.max_adhesion == 3);
    CHECK(rep.internal_width == 4);  // center is internal

    CHECK(width(gen_hw(4), hw_witness(4)).width == 5);
    CHECK(width(gen_hw(6), hw_witness(6)).width == 7);

    TreeCutDecomposition invalid;
    invalid.bags = {{0}};
    CHECK_THROWS_AS(width(g, invalid), std::invalid_argument);
}

TEST_CASE("internal width conventions") {
    auto g = clique(4);
    // trivial decomposition: in-tcw defined as 0
    CHECK(width(g, TreeCutDecomposition::trivial(g)).internal_width == 0);
    // two-bag decomposition: both nodes are leaves, adhesion still counts
    TreeCutDecomposition two;
    two.bags = {{0, 1}, {2, 3}};
    two.tree_edges = {{0, 1}};
    auto rep = width(g, two);
    CHECK(rep.max_adhesion == 4);
    CHECK(rep.internal_width == 4);
    CHECK(rep.width >= rep.internal_width);
}

TEST_CASE("torso_size_3ec matches the 3-center on 3-edge-connected graphs") {
    auto g = clique(4);
    auto d = k4_star();
    CHECK(torso_size_3ec(g, d, 0) == 4);  // 0 + 4 components
    CHECK(torso_size_3ec(g, d, 1) == 2);  // 1 + 1
    for (std::size_t t = 0; t < d.node_count(); ++t) {
        auto to = torso(g, d, static_cast<int>(t));
        CHECK(torso_size_3ec(g, d, static_cast<int>(t)) ==
              static_cast<long long>(three_center(to.graph, d.bags[t]).vertex_count()));
    }

    auto h4 = gen_hw(4);
    CHECK(torso_size_3ec(h4, hw_witness(4), 0) == 4);
}

TEST_CASE("prune_empty_leaves") {
    TreeCutDecomposition d;
    d.bags = {{0}, {}, {}, {1}};
    d.tree_edges = {{0, 1}, {1, 2}, {1, 3}};
    auto p = prune_empty_leaves(d);
    CHECK(p.node_count() == 3);  // node 2 goes, node 1 stays internal

    TreeCutDecomposition chain;
    chain.bags = {{0}, {}, {}};
    chain.tree_edges = {{0, 1}, {1, 2}};
    auto pc = prune_empty_leaves(chain);
    CHECK(pc.node_count() == 1);

    TreeCutDecomposition lone;
    lone.bags = {{}};
    CHECK(prune_empty_leaves(lone).node_count() == 1);  // keeps one node
}

TEST_CASE("nonempty_bag_count") {
    TreeCutDecomposition d;
    d.bags = {{0}, {}, {1, 2}};
    d.tree_edges = {{0, 1}, {1, 2}};
    CHECK(nonempty_bag_count(d) == 2);
}
