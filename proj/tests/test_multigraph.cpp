#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tcw/multigraph.hpp"

using namespace tcw;

namespace {

Multigraph path(int n) {
    Multigraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Multigraph cycle(int n) {
    Multigraph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

Multigraph clique(int n) {
    Multigraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("basic counts and accessors") {
    Multigraph g;
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2);
    g.add_vertex(7);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_total() == 3);
    CHECK(g.edge_pairs() == 2);
    CHECK(g.degree(1) == 3);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(1, 0) == 2);
    CHECK(g.multiplicity(0, 2) == 0);
    CHECK(g.degree(7) == 0);
    CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
    CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.degree(99), std::invalid_argument);
}

TEST_CASE("delta and boundary") {
    auto g = clique(4);
    CHECK(delta(g, {0}, {1, 2, 3}).size == 3);
    CHECK(delta(g, {0, 1}, {2, 3}).size == 4);
    CHECK_THROWS_AS(delta(g, {0, 1}, {1, 2}), std::invalid_argument);
    CHECK(delta_out(g, {0, 1}).size == 4);
    CHECK(boundary(g, {0, 1}) == VertexSet{0, 1});

    // delta is symmetric and matches the degree-sum identity
    for (VertexSet x : {VertexSet{0}, VertexSet{0, 2}, VertexSet{1, 2, 3}}) {
        VertexSet y;
        for (Vertex v : g.vertices())
            if (!x.count(v)) y.insert(v);
        CHECK(delta(g, x, y).size == delta(g, y, x).size);
        long long degsum = 0;
        for (Vertex v : x) degsum += g.degree(v);
        CHECK(delta_out(g, x).size == degsum - 2 * induced(g, x).edge_total());
    }
}

TEST_CASE("dissolve") {
    auto p = path(3);  // a-b-c
    auto d = dissolve(p, 1);
    CHECK(d.vertex_count() == 2);
    CHECK(d.multiplicity(0, 2) == 1);

    auto tri = cycle(3);
    auto dt = dissolve(tri, 0);
    CHECK(dt.multiplicity(1, 2) == 2);  // double edge

    auto c4 = cycle(4);
    auto dc = dissolve(c4, 1);
    CHECK(dc.edge_total() == 3);
    CHECK(dc.multiplicity(0, 2) == 1);

    CHECK(tri.edge_total() - dt.edge_total() == 1);
    CHECK_THROWS_AS(dissolve(clique(4), 0), std::invalid_argument);
    Multigraph dbl;
    dbl.add_edge(0, 1, 2);
    CHECK_THROWS_AS(dissolve(dbl, 0), std::invalid_argument);  // one neighbor only
}

TEST_CASE("identify") {
    auto tri = cycle(3);
    auto h = identify(tri, {1, 2}, 9);
    CHECK(h.vertex_count() == 2);
    CHECK(h.multiplicity(0, 9) == 2);

    auto all = identify(tri, {0, 1, 2}, 5);
    CHECK(all.vertex_count() == 1);
    CHECK(all.edge_total() == 0);

    Multigraph star;  // K_{1,3}, center 0
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    auto s = identify(star, {1, 2}, 8);
    CHECK(s.multiplicity(0, 8) == 2);
    CHECK(s.multiplicity(0, 3) == 1);

    CHECK_THROWS_AS(identify(tri, {}, 9), std::invalid_argument);
    // identify then delta equals delta of the original set
    CHECK(delta(h, {9}, {0}).size == delta(tri, {1, 2}, {0}).size);
}

TEST_CASE("components") {
    Multigraph g;
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_vertex(4);
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet{0, 1});
    CHECK(!is_connected(g));
    CHECK(is_connected(path(5)));
    CHECK(is_connected(Multigraph{}));
}

TEST_CASE("min_cut_le2: bridge, 2-cut, 3-edge-connected") {
    // two triangles joined by one bridge
    Multigraph g = cycle(3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(0, 3);
    auto cut = min_cut_le2(g);
    REQUIRE(cut.has_value());
    CHECK(cut->size == 1);
    CHECK((cut->side == VertexSet{3, 4, 5} || cut->side == VertexSet{0, 1, 2}));

    CHECK(!min_cut_le2(clique(4)).has_value());
    CHECK(is_3_edge_connected(clique(4)));

    auto c4 = cycle(4);
    auto cut2 = min_cut_le2(c4);
    REQUIRE(cut2.has_value());
    CHECK(cut2->size == 2);
    CHECK(is_connected(induced(c4, cut2->side)));
    CHECK(!is_3_edge_connected(c4));

    CHECK_THROWS_AS(min_cut_le2(Multigraph{}), std::invalid_argument);
}

TEST_CASE("min_cut_le2 agrees with pairwise flows on small graphs") {
    for (const Multigraph& g : {clique(4), cycle(5), path(4), clique(5)}) {
        bool all3 = true;
        auto vs = g.vertices();
        for (Vertex s : vs)
            for (Vertex t : vs)
                if (s < t && edge_connectivity(g, s, t, 3) < 3) all3 = false;
        CHECK(min_cut_le2(g).has_value() == !all3);
    }
}

TEST_CASE("min_cut_le2_between ignores cuts that only strip terminals-free parts") {
    // K_4 with a pendant vertex 4; the pendant is not a terminal
    Multigraph g = clique(4);
    g.add_edge(0, 4);
    CHECK(!min_cut_le2_between(g, {0, 1, 2, 3}).has_value());
    auto c = min_cut_le2_between(g, g.vertices());
    REQUIRE(c.has_value());
    CHECK(c->size == 1);
}
