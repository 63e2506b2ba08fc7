#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "tcw/exact.hpp"
#include "tcw/reduce.hpp"

using namespace tcw;

namespace {

Multigraph clique(int n, int base = 0) {
    Multigraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(base + v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(base + u, base + v);
    return g;
}

Multigraph path(int n) {
    Multigraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Multigraph cycle(int n) {
    auto g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

// two K_4's joined by a 2-edge cut
Multigraph two_k4() {
    Multigraph g = clique(4);
    for (const auto& [u, v, m] : clique(4, 4).edges()) g.add_edge(u, v, m);
    g.add_edge(0, 4);
    g.add_edge(1, 5);
    return g;
}

}  // namespace

TEST_CASE("reduce_degree fixed points") {
    auto [t, lt] = reduce_degree(path(6));
    CHECK(t.vertex_count() == 0);
    CHECK(lt.size() == 6);

    auto [c, lc] = reduce_degree(cycle(5));
    CHECK(c.vertex_count() == 0);

    auto [k, lk] = reduce_degree(clique(4));
    CHECK(k == clique(4));
    CHECK(lk.empty());

    // double-edge pendant: removed, not dissolved
    Multigraph dbl = clique(4);
    dbl.add_edge(0, 9, 2);
    auto [r, lr] = reduce_degree(dbl);
    CHECK(r == clique(4));
    REQUIRE(lr.size() == 1);
    CHECK(lr[0].kind == ReductionStep::Remove);
    CHECK(lr[0].v == 9);
    CHECK(lr[0].m1 == 2);

    // every step drops |V|+|E|; min degree >= 3 at the fixed point
    for (Vertex v : r.vertices()) CHECK(r.degree(v) >= 3);
}

TEST_CASE("split_3ec") {
    auto one = split_3ec(clique(4));
    REQUIRE(one.pieces.size() == 1);
    CHECK(one.pieces[0] == clique(4));
    CHECK(one.links.empty());
    CHECK(one.markers[0].empty());

    auto two = split_3ec(two_k4());
    REQUIRE(two.pieces.size() == 2);
    REQUIRE(two.links.size() == 1);
    CHECK(two.links[0].cut_size == 2);
    for (std::size_t i = 0; i < two.pieces.size(); ++i) {
        CHECK(two.pieces[i].vertex_count() == 5);  // K_4 + one marker
        REQUIRE(two.markers[i].size() == 1);
        Vertex m = *two.markers[i].begin();
        CHECK(two.pieces[i].degree(m) == 2);
        // piece minus its marker is 3-edge-connected
        VertexSet rest;
        for (Vertex v : two.pieces[i].vertices())
            if (v != m) rest.insert(v);
        CHECK(is_3_edge_connected(induced(two.pieces[i], rest)));
    }
}

TEST_CASE("recombine") {
    // identity piece set: decomposition passes through
    auto one = split_3ec(clique(4));
    auto triv = TreeCutDecomposition::trivial(clique(4));
    auto back = recombine(one, {triv});
    CHECK(validate(clique(4), back).empty());
    CHECK(width(clique(4), back).width == 4);

    // two pieces, single-bag decompositions each: adhesion = cut size
    auto g = two_k4();
    auto two = split_3ec(g);
    std::vector<TreeCutDecomposition> ds;
    for (const auto& p : two.pieces) ds.push_back(TreeCutDecomposition::trivial(p));
    auto joined = recombine(two, ds);
    CHECK(validate(g, joined).empty());
    auto rep = width(g, joined);
    CHECK(rep.max_adhesion == 2);
    // never wider than the pieces; here strictly better, because dropping
    // the markers shrinks the single bags from 5 back to 4
    long long piece_w = 0;
    for (std::size_t i = 0; i < two.pieces.size(); ++i)
        piece_w = std::max(piece_w, width(two.pieces[i], ds[i]).width);
    CHECK(rep.width <= piece_w);
    CHECK(rep.width == 4);

    // a decomposition that forgot a marker is rejected
    TreeCutDecomposition no_marker;
    no_marker.bags = {{0, 1, 2, 3}};
    CHECK_THROWS(recombine(two, {no_marker, ds[1]}));
}

TEST_CASE("lift_degree") {
    auto g = two_k4();
    Multigraph gp = g;
    gp.add_edge(0, 100);       // pendant
    gp.add_edge(100, 101);     // chain off the pendant
    auto [core, log] = reduce_degree(gp);
    CHECK(core == g);

    auto d = TreeCutDecomposition::trivial(core);
    auto lifted = lift_degree(gp, log, d);
    CHECK(validate(gp, lifted).empty());
    CHECK(width(gp, lifted).width <= std::max<long long>(width(core, d).width, 2));

    // reduce-to-empty case: whole decomposition grown from scratch
    auto [e, elog] = reduce_degree(cycle(6));
    CHECK(e.vertex_count() == 0);
    auto le = lift_degree(cycle(6), elog, TreeCutDecomposition{});
    CHECK(validate(cycle(6), le).empty());
    CHECK(width(cycle(6), le).width <= 2);
}

TEST_CASE("split + reduce compose with the oracle") {
    std::mt19937 rng(5);
    for (int it = 0; it < 12; ++it) {
        const int n = 4 + static_cast<int>(rng() % 3);
        Multigraph g;
        for (int v = 0; v < n; ++v) g.add_vertex(v);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3) g.add_edge(u, v, 1 + static_cast<int>(rng() % 2));
        if (!is_connected(g)) continue;
        for (int w = 2; w <= 3; ++w) {
            bool whole = exact_tcw_decision(g, w);
            auto [core, log] = reduce_degree(g);
            bool all = true;
            if (core.vertex_count() > 0) {
                auto ps = split_3ec(core, w);
                for (const auto& p : ps.pieces)
                    if (!exact_tcw_decision(p, w)) all = false;
            }
            CHECK(whole == all);
        }
    }
}
