#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <random>

#include "doctest.h"
#include "tcw/exact.hpp"
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

Multigraph cycle(int n) {
    Multigraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, n - 1);
    return g;
}

Multigraph random_graph(std::mt19937& rng, int n, int edge_den = 2, int max_mult = 2) {
    Multigraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 3) < edge_den)
                g.add_edge(u, v, 1 + static_cast<int>(rng() % max_mult));
    return g;
}

// Independent tiny-graph reference: partitions into labeled bags, trees on
// bag nodes plus up to two extra empty hubs, enumerated via Pruefer codes,
// minimum width over everything. Only for |V| <= 4.
void partitions(const std::vector<Vertex>& vs, std::size_t i, std::vector<VertexSet>& parts,
                const std::function<void(const std::vector<VertexSet>&)>& f) {
    if (i == vs.size()) {
        f(parts);
        return;
    }
    const std::size_t base = parts.size();
    for (std::size_t j = 0; j < base; ++j) {
        parts[j].insert(vs[i]);
        partitions(vs, i + 1, parts, f);
        parts[j].erase(vs[i]);
    }
    parts.push_back({vs[i]});
    partitions(vs, i + 1, parts, f);
    parts.pop_back();
}

long long reference_tcw(const Multigraph& g) {
    REQUIRE(g.vertex_count() <= 4);
    const VertexSet vset = g.vertices();  // vertices() returns by value
    std::vector<Vertex> vs(vset.begin(), vset.end());
    long long best = 1 << 20;
    std::vector<VertexSet> parts;
    std::function<void(const std::vector<VertexSet>&)> eval =
        [&](const std::vector<VertexSet>& bags) {
            for (int aux = 0; aux <= 2; ++aux) {
                const int k = static_cast<int>(bags.size()) + aux;
                TreeCutDecomposition d;
                d.bags = bags;
                for (int a = 0; a < aux; ++a) d.bags.push_back({});
                // bags are disjoint and covering by construction, and Pruefer
                // decoding always yields a tree, so no validate() needed
                if (k == 1) {
                    d.tree_edges.clear();
                    best = std::min<long long>(best, width(g, d).width);
                    continue;
                }
                // all labeled trees on k nodes from Pruefer sequences
                std::vector<int> code(k - 2, 0);
                while (true) {
                    std::vector<int> deg(k, 1);
                    for (int c : code) ++deg[c];
                    d.tree_edges.clear();
                    std::vector<int> cd = code;
                    std::vector<int> degc = deg;
                    for (int c : cd) {
                        for (int leaf = 0; leaf < k; ++leaf)
                            if (degc[leaf] == 1) {
                                d.tree_edges.push_back({leaf, c});
                                --degc[leaf];
                                --degc[c];
                                break;
                            }
                    }
                    int a = -1, b = -1;
                    for (int t = 0; t < k; ++t)
                        if (degc[t] == 1) (a < 0 ? a : b) = t;
                    d.tree_edges.push_back({a, b});
                    best = std::min<long long>(best, width(g, d).width);
                    int pos = k - 3;
                    while (pos >= 0 && code[pos] == k - 1) code[pos--] = 0;
                    if (pos < 0) break;
                    ++code[pos];
                }
            }
        };
    partitions(vs, 0, parts, eval);
    return best;
}

}  // namespace

TEST_CASE("small fixtures") {
    Multigraph one;
    one.add_vertex(0);
    auto r1 = exact_tcw(one);
    CHECK(r1.tcw == 1);
    CHECK(width(one, r1.witness).width == 1);

    Multigraph edge;
    edge.add_edge(0, 1);
    auto re = exact_tcw(edge);
    CHECK(re.tcw == 1);  // leaf torsos dissolve the contracted neighbor

    auto rk = exact_tcw(clique(4));
    CHECK(rk.tcw == 4);
    CHECK(validate(clique(4), rk.witness).empty());
    CHECK(width(clique(4), rk.witness).width == 4);

    CHECK(exact_tcw(Multigraph{}).tcw == 0);
    CHECK(exact_tcw(cycle(5)).tcw == 2);
    CHECK(exact_tcw(gen_hw(2)).tcw == 1);  // 4 vertices, a path in disguise

    CHECK_THROWS_AS(exact_tcw(clique(9)), std::invalid_argument);
}

TEST_CASE("decision wrapper") {
    CHECK(exact_tcw_decision(clique(4), 4));
    CHECK(!exact_tcw_decision(clique(4), 3));
    CHECK(exact_tcw_decision(Multigraph{}, 0));
    CHECK(exact_tcw_decision(cycle(4), 2));
    CHECK(!exact_tcw_decision(cycle(4), 1));
}

TEST_CASE("matches the tree-enumeration reference on tiny graphs") {
    std::mt19937 rng(31);
    for (int it = 0; it < 15; ++it) {
        auto g = random_graph(rng, 2 + static_cast<int>(rng() % 3));
        CHECK(exact_tcw(g).tcw == reference_tcw(g));
    }
    CHECK(exact_tcw(clique(4)).tcw == reference_tcw(clique(4)));
}

TEST_CASE("monotone under edge deletion") {
    std::mt19937 rng(41);
    for (int it = 0; it < 10; ++it) {
        auto g = random_graph(rng, 5);
        if (g.edge_pairs() == 0) continue;
        int base = exact_tcw(g).tcw;
        for (const auto& [du, dv, dm] : g.edges()) {
            Multigraph h;
            for (Vertex v : g.vertices()) h.add_vertex(v);
            for (const auto& [u, v, m] : g.edges())
                if (!(u == du && v == dv))
                    h.add_edge(u, v, m);
                else if (m > 1)
                    h.add_edge(u, v, m - 1);
            CHECK(exact_tcw(h).tcw <= base);
        }
    }
}

TEST_CASE("invariant under degree-1 removal and degree-2 dissolve") {
    std::mt19937 rng(53);
    int checked = 0;
    for (int it = 0; it < 40 && checked < 12; ++it) {
        auto g = random_graph(rng, 5, 1, 1);
        if (!is_connected(g) || g.vertex_count() < 3) continue;
        for (Vertex v : g.vertices()) {
            auto nb = g.neighbors(v);
            if (g.degree(v) == 1) {
                VertexSet rest = g.vertices();
                rest.erase(v);
                CHECK(exact_tcw(induced(g, rest)).tcw == exact_tcw(g).tcw);
                ++checked;
            } else if (g.degree(v) == 2 && nb.size() == 2) {
                CHECK(exact_tcw(dissolve(g, v)).tcw == exact_tcw(g).tcw);
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("never beaten by a handed-in decomposition") {
    auto c6 = cycle(6);
    TreeCutDecomposition d;  // path of 2-vertex bags
    d.bags = {{0, 1}, {2, 3}, {4, 5}};
    d.tree_edges = {{0, 1}, {1, 2}};
    REQUIRE(validate(c6, d).empty());
    CHECK(exact_tcw(c6).tcw <= width(c6, d).width);
}
