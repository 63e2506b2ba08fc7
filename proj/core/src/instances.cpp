#include "tcw/instances.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tcw {

namespace {

int hw_id(int w, int i, int j) { return (i - 1) * w + (j - 1); }  // i, j in [1, w]

}  // namespace

Multigraph gen_hw(int w) {
    if (w < 1) throw std::invalid_argument("gen_hw: w >= 1 required");
    Multigraph g;
    for (int i = 1; i <= w; ++i)
        for (int j = 1; j <= w; ++j) g.add_vertex(hw_id(w, i, j));
    for (int i = 1; i <= w; ++i)
        for (int j = 1; j <= w; ++j)
            for (int k = j + 1; k <= w; ++k) g.add_edge(hw_id(w, i, j), hw_id(w, i, k));
    for (int i = 1; i <= w; ++i)
        for (int j = i + 1; j <= w; ++j) g.add_edge(hw_id(w, i, j), hw_id(w, j, i));
    return g;
}

TreeCutDecomposition hw_witness(int w) {
    if (w < 1) throw std::invalid_argument("hw_witness: w >= 1 required");
    TreeCutDecomposition d;
    d.bags.push_back({});  // empty center
    for (int i = 1; i <= w; ++i) {
        VertexSet q;
        for (int j = 1; j <= w; ++j) q.insert(hw_id(w, i, j));
        d.bags.push_back(q);
        d.tree_edges.emplace_back(0, i);
    }
    return d;
}

Bramble gen_bramble(int w) {
    if (w < 2 || w % 2 != 0) throw std::invalid_argument("gen_bramble: even w >= 2 required");
    Bramble br;
    const int half = w / 2;
    for (int i = 1; i <= w; ++i) {
        // all Z subset of [w]\{i} with |Z| = w/2, as a bit-subset sweep
        std::vector<int> pool;
        for (int j = 1; j <= w; ++j)
            if (j != i) pool.push_back(j);
        std::vector<int> pick(half);
        // lexicographic combinations
        for (int t = 0; t < half; ++t) pick[t] = t;
        while (true) {
            VertexSet b;
            for (int t = 0; t < half; ++t) {
                const int j = pool[pick[t]];
                b.insert(hw_id(w, i, j));
                b.insert(hw_id(w, j, i));
            }
            br.sets.push_back(std::move(b));
            int t = half - 1;
            while (t >= 0 && pick[t] == static_cast<int>(pool.size()) - half + t) --t;
            if (t < 0) break;
            ++pick[t];
            for (int u = t + 1; u < half; ++u) pick[u] = pick[u - 1] + 1;
        }
    }
    return br;
}

bool is_bramble(const Multigraph& g, const Bramble& br) {
    for (const auto& b : br.sets) {
        if (b.empty()) return false;
        for (Vertex v : b)
            if (!g.has_vertex(v)) return false;
        if (!is_connected(induced(g, b))) return false;
    }
    for (std::size_t i = 0; i < br.sets.size(); ++i) {
        for (std::size_t j = i + 1; j < br.sets.size(); ++j) {
            const auto& x = br.sets[i];
            const auto& y = br.sets[j];
            bool touch = false;
            for (Vertex v : x)
                if (y.count(v)) {
                    touch = true;
                    break;
                }
            for (Vertex v : x) {
                if (touch) break;
                for (const auto& [u, m] : g.adjacency(v))
                    if (y.count(u)) {
                        touch = true;
                        break;
                    }
            }
            if (!touch) return false;
        }
    }
    return true;
}

namespace {

void hitting_search(const std::vector<VertexSet>& sets, VertexSet& chosen, int& best) {
    if (static_cast<int>(chosen.size()) >= best) return;
    // first set not yet hit
    const VertexSet* unhit = nullptr;
    for (const auto& s : sets) {
        bool hit = false;
        for (Vertex v : s)
            if (chosen.count(v)) {
                hit = true;
                break;
            }
        if (!hit) {
            unhit = &s;
            break;
        }
    }
    if (!unhit) {
        best = static_cast<int>(chosen.size());
        return;
    }
    for (Vertex v : *unhit) {
        chosen.insert(v);
        hitting_search(sets, chosen, best);
        chosen.erase(v);
    }
}

}  // namespace

int bramble_order(const Multigraph& g, const Bramble& br, int cap) {
    if (static_cast<int>(g.vertex_count()) > cap)
        throw std::invalid_argument("bramble_order: host graph exceeds the cap");
    if (br.sets.empty()) return 0;
    int best = static_cast<int>(g.vertex_count());
    VertexSet chosen;
    hitting_search(br.sets, chosen, best);
    return best;
}

BisectionInstance gen_bisection_instance(const Multigraph& g, int k) {
    const int n = static_cast<int>(g.vertex_count());
    if (n % 2 != 0) throw std::invalid_argument("gen_bisection_instance: even |V| required");
    const long long w = static_cast<long long>(n) * n * n / 2 + k;
    const long long qn = w - 2;
    if (static_cast<long long>(n) * n > qn)
        throw std::invalid_argument(
            "gen_bisection_instance: n^2 > w-2, the Q attachment is infeasible");

    BisectionInstance inst;
    inst.w = static_cast<int>(w);
    inst.g = g;
    inst.v_part = g.vertices();
    Vertex next = 0;
    for (Vertex v : inst.v_part) next = std::max(next, v + 1);
    std::vector<Vertex> q;
    for (long long i = 0; i < qn; ++i) {
        q.push_back(next);
        inst.g.add_vertex(next);
        inst.q.insert(next++);
    }
    for (Vertex x : inst.v_part)
        for (int i = 0; i < n * n; ++i) inst.g.add_edge(x, q[i]);
    for (std::size_t a = 0; a < q.size(); ++a) {
        for (std::size_t b = a + 1; b < q.size(); ++b) {
            VertexSet c;
            for (long long i = 0; i <= w; ++i) {
                inst.g.add_vertex(next);
                inst.g.add_edge(next, q[a]);
                inst.g.add_edge(next, q[b]);
                c.insert(next++);
            }
            inst.c_sets.push_back(std::move(c));
        }
    }
    return inst;
}

TreeCutDecomposition bisection_witness(const BisectionInstance& inst, const VertexSet& v1,
                                       const VertexSet& v2) {
    VertexSet all = v1;
    all.insert(v2.begin(), v2.end());
    if (all != inst.v_part || all.size() != v1.size() + v2.size())
        throw std::invalid_argument("bisection_witness: (v1, v2) must partition the originals");
    TreeCutDecomposition d;
    d.bags.push_back(inst.q);
    d.bags.push_back(v1);
    d.bags.push_back(v2);
    d.tree_edges.emplace_back(0, 1);
    d.tree_edges.emplace_back(0, 2);
    for (const auto& c : inst.c_sets) {
        for (Vertex v : c) {
            const int node = static_cast<int>(d.node_count());
            d.bags.push_back({v});
            d.tree_edges.emplace_back(0, node);
        }
    }
    return d;
}

Multigraph gen_random(int n, int m, int max_mult, unsigned seed) {
    if (n < 0 || m < 0 || max_mult < 1) throw std::invalid_argument("gen_random: bad parameters");
    std::mt19937 rng(seed);
    Multigraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int i = 0; i < m && n >= 2; ++i) {
        // explicit modulo: identical streams on every platform
        const int u = static_cast<int>(rng() % n);
        const int v = static_cast<int>(rng() % n);
        const int mult = 1 + static_cast<int>(rng() % max_mult);
        if (u == v) continue;
        g.add_edge(u, v, mult);
    }
    return g;
}

}  // namespace tcw
