#include "tcw/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace tcw {

std::vector<std::vector<int>> TreeCutDecomposition::node_adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (const auto& [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

bool TreeCutDecomposition::is_leaf(int node) const {
    int deg = 0;
    for (const auto& [a, b] : tree_edges)
        if (a == node || b == node) ++deg;
    return deg <= 1;
}

TreeCutDecomposition TreeCutDecomposition::trivial(const Multigraph& g) {
    TreeCutDecomposition d;
    d.bags.push_back(g.vertices());
    return d;
}

std::vector<std::string> validate(const Multigraph& g, const TreeCutDecomposition& d,
                                  bool strict) {
    std::vector<std::string> bad;
    const std::size_t n = d.node_count();
    if (n == 0) {
        if (g.vertex_count() != 0) bad.push_back("no nodes but graph has vertices");
        return bad;
    }
    for (const auto& [a, b] : d.tree_edges) {
        if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n) || a == b) {
            bad.push_back("tree edge references invalid node");
            return bad;
        }
    }
    if (d.tree_edges.size() != n - 1) {
        bad.push_back("tree must have exactly n-1 edges");
    } else {
        // connectivity (acyclicity follows from edge count)
        auto adj = d.node_adjacency();
        std::vector<char> seen(n, 0);
        std::deque<int> queue{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    queue.push_back(u);
                }
        }
        if (reached != n) bad.push_back("tree is not connected");
    }
    std::map<Vertex, int> where;
    for (std::size_t t = 0; t < n; ++t) {
        for (Vertex v : d.bags[t]) {
            if (!g.has_vertex(v)) bad.push_back("bag vertex not in graph");
            auto [it, fresh] = where.emplace(v, static_cast<int>(t));
            if (!fresh) bad.push_back("bags are not pairwise disjoint");
        }
    }
    if (where.size() != g.vertex_count()) bad.push_back("bags do not cover V(G)");
    if (strict) {
        for (std::size_t t = 0; t < n; ++t)
            if (n > 1 && d.is_leaf(static_cast<int>(t)) && d.bags[t].empty())
                bad.push_back("leaf node with empty bag");
    }
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    return bad;
}

namespace {

// Side of the tree containing `from` after deleting the edge {from, other}.
std::vector<int> tree_side(const TreeCutDecomposition& d, int from, int other) {
    auto adj = d.node_adjacency();
    std::vector<char> seen(d.node_count(), 0);
    seen[other] = 1;  // blocked
    seen[from] = 1;
    std::vector<int> side{from};
    std::deque<int> queue{from};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                side.push_back(u);
                queue.push_back(u);
            }
    }
    return side;
}

}  // namespace

EdgeCut adhesion(const Multigraph& g, const TreeCutDecomposition& d,
                 std::pair<int, int> tree_edge) {
    const bool present =
        std::find(d.tree_edges.begin(), d.tree_edges.end(), tree_edge) != d.tree_edges.end() ||
        std::find(d.tree_edges.begin(), d.tree_edges.end(),
                  std::make_pair(tree_edge.second, tree_edge.first)) != d.tree_edges.end();
    if (!present) throw std::invalid_argument("adhesion: not a tree edge");
    VertexSet left, right;
    for (int t : tree_side(d, tree_edge.first, tree_edge.second))
        left.insert(d.bags[t].begin(), d.bags[t].end());
    for (int t : tree_side(d, tree_edge.second, tree_edge.first))
        right.insert(d.bags[t].begin(), d.bags[t].end());
    return delta(g, left, right);
}

Multigraph three_center(const Multigraph& h, const VertexSet& x) {
    std::map<Vertex, std::map<Vertex, int>> adj;
    for (Vertex v : h.vertices()) adj[v] = h.adjacency(v);

    auto deg = [&](Vertex v) {
        int s = 0;
        for (auto& [u, m] : adj[v]) s += m;
        return s;
    };

    std::deque<Vertex> work;
    for (auto& [v, nb] : adj)
        if (!x.count(v)) work.push_back(v);

    while (!work.empty()) {
        Vertex v = work.front();
        work.pop_front();
        auto it = adj.find(v);
        if (it == adj.end() || x.count(v)) continue;
        auto& nb = it->second;
        const int d = deg(v);
        if (nb.size() <= 1 && d <= 2) {
            // removal: at most one neighbor, degree at most two
            for (auto& [u, m] : nb) {
                adj[u].erase(v);
                work.push_back(u);
            }
            adj.erase(it);
        } else if (nb.size() == 2 && d == 2) {
            // dissolution: splice the two neighbors together
            Vertex a = nb.begin()->first, b = std::next(nb.begin())->first;
            adj[a].erase(v);
            adj[b].erase(v);
            adj[a][b] += 1;
            adj[b][a] += 1;
            adj.erase(it);
            work.push_back(a);
            work.push_back(b);
        }
    }

    Multigraph out;
    for (auto& [v, nb] : adj) out.add_vertex(v);
    for (auto& [v, nb] : adj)
        for (auto& [u, m] : nb)
            if (v < u) out.add_edge(v, u, m);
    return out;
}

Torso torso(const Multigraph& g, const TreeCutDecomposition& d, int node) {
    if (node < 0 || node >= static_cast<int>(d.node_count()))
        throw std::invalid_argument("torso: invalid node");
    Torso result;
    // fresh ids for contracted components, above every graph vertex id
    Vertex fresh = 0;
    if (g.vertex_count() > 0) fresh = *g.vertices().rbegin() + 1;

    std::map<Vertex, Vertex> repr;  // graph vertex -> torso vertex
    for (Vertex v : d.bags[node]) repr[v] = v;

    auto adj = d.node_adjacency();
    for (int nb : adj[node]) {
        VertexSet uni;
        for (int t : tree_side(d, nb, node))
            uni.insert(d.bags[t].begin(), d.bags[t].end());
        if (uni.empty()) continue;  // empty unions are not identified
        Vertex z = fresh++;
        result.contracted[nb] = z;
        for (Vertex v : uni) repr[v] = z;
    }

    for (Vertex v : d.bags[node]) result.graph.add_vertex(v);
    for (auto& [nb, z] : result.contracted) result.graph.add_vertex(z);
    for (const auto& [a, b, m] : g.edges()) {
        Vertex ra = repr.at(a), rb = repr.at(b);
        if (ra != rb) result.graph.add_edge(ra, rb, m);
    }
    return result;
}

long long torso_size_3ec(const Multigraph& g, const TreeCutDecomposition& d, int node) {
    if (node < 0 || node >= static_cast<int>(d.node_count()))
        throw std::invalid_argument("torso_size_3ec: invalid node");
    long long comps = 0;
    auto adj = d.node_adjacency();
    for (int nb : adj[node]) {
        bool nonempty = false;
        for (int t : tree_side(d, nb, node))
            if (!d.bags[t].empty()) nonempty = true;
        if (nonempty) ++comps;
    }
    return static_cast<long long>(d.bags[node].size()) + comps;
}

int nonempty_bag_count(const TreeCutDecomposition& d) {
    int c = 0;
    for (const auto& b : d.bags)
        if (!b.empty()) ++c;
    return c;
}

WidthReport width(const Multigraph& g, const TreeCutDecomposition& d) {
    if (auto bad = validate(g, d); !bad.empty()) {
        std::ostringstream os;
        os << "invalid decomposition:";
        for (auto& s : bad) os << " [" << s << "]";
        throw std::invalid_argument(os.str());
    }
    WidthReport rep;
    const int n = static_cast<int>(d.node_count());
    if (n == 0) return rep;

    std::map<Vertex, int> node_of;
    for (int t = 0; t < n; ++t)
        for (Vertex v : d.bags[t]) node_of[v] = t;

    auto adj = d.node_adjacency();
    std::vector<int> parent(n, -1), depth(n, 0), order;
    order.reserve(n);
    {
        std::deque<int> queue{0};
        std::vector<char> seen(n, 0);
        seen[0] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (int u : adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    queue.push_back(u);
                }
        }
    }

    // Per-node torso edge lists; contracted components are encoded as
    // -1 - (neighbor node on that side).
    std::vector<std::vector<std::tuple<Vertex, Vertex, int>>> torso_edges(n);
    std::map<std::pair<int, int>, long long> adhesion_size;
    for (const auto& [a, b] : d.tree_edges) adhesion_size[{std::min(a, b), std::max(a, b)}] = 0;

    auto bump_adhesion = [&](int a, int b, int m) {
        adhesion_size[{std::min(a, b), std::max(a, b)}] += m;
    };

    for (const auto& [u, v, m] : g.edges()) {
        int a = node_of.at(u), b = node_of.at(v);
        if (a == b) {
            torso_edges[a].emplace_back(u, v, m);
            continue;
        }
        // walk the tree path a..b
        std::vector<int> up_a{a}, up_b{b};
        int x = a, y = b;
        while (depth[x] > depth[y]) { x = parent[x]; up_a.push_back(x); }
        while (depth[y] > depth[x]) { y = parent[y]; up_b.push_back(y); }
        while (x != y) {
            x = parent[x]; up_a.push_back(x);
            y = parent[y]; up_b.push_back(y);
        }
        std::vector<int> path(up_a);
        path.pop_back();  // meeting node re-added from the b side
        for (auto it = up_b.rbegin(); it != up_b.rend(); ++it) path.push_back(*it);

        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            bump_adhesion(path[i], path[i + 1], m);
        for (std::size_t i = 0; i < path.size(); ++i) {
            int t = path[i];
            Vertex ru = (t == a) ? u : static_cast<Vertex>(-1 - path[i - 1]);
            Vertex rv = (t == b) ? v : static_cast<Vertex>(-1 - path[i + 1]);
            torso_edges[t].emplace_back(ru, rv, m);
        }
    }

    // subtree non-empty bag counts (root = node 0)
    std::vector<int> sub_nonempty(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int t = *it;
        if (!d.bags[t].empty()) ++sub_nonempty[t];
        if (parent[t] >= 0) sub_nonempty[parent[t]] += sub_nonempty[t];
    }
    const int total_nonempty = sub_nonempty.empty() ? 0 : sub_nonempty[0];

    rep.torso_sizes.assign(n, 0);
    for (int t = 0; t < n; ++t) {
        Multigraph h;
        for (Vertex v : d.bags[t]) h.add_vertex(v);
        for (int nb : adj[t]) {
            const int cnt = (nb == parent[t]) ? total_nonempty - sub_nonempty[t]
                                              : sub_nonempty[nb];
            if (cnt > 0) h.add_vertex(-1 - nb);
        }
        for (const auto& [ra, rb, m] : torso_edges[t]) h.add_edge(ra, rb, m);
        const long long sz =
            static_cast<long long>(three_center(h, d.bags[t]).vertex_count());
        rep.torso_sizes[t] = sz;
        if (sz > rep.width) {
            rep.width = sz;
            rep.witness_node = t;
        }
        if (!d.is_leaf(t) && sz > rep.internal_width) rep.internal_width = sz;
    }
    for (const auto& [e, sz] : adhesion_size) {
        if (sz > rep.max_adhesion) {
            rep.max_adhesion = sz;
            rep.witness_edge = e;
        }
    }
    rep.width = std::max(rep.width, rep.max_adhesion);
    if (nonempty_bag_count(d) <= 1)
        rep.internal_width = 0;  // trivial decomposition
    else
        rep.internal_width = std::max(rep.internal_width, rep.max_adhesion);
    return rep;
}

TreeCutDecomposition prune_empty_leaves(const TreeCutDecomposition& d) {
    std::vector<VertexSet> bags = d.bags;
    std::vector<std::pair<int, int>> edges = d.tree_edges;
    std::vector<char> gone(bags.size(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> degree(bags.size(), 0);
        for (auto& [a, b] : edges) {
            ++degree[a];
            ++degree[b];
        }
        int alive = 0;
        for (std::size_t t = 0; t < bags.size(); ++t)
            if (!gone[t]) ++alive;
        for (std::size_t t = 0; t < bags.size(); ++t) {
            if (gone[t] || !bags[t].empty() || degree[t] > 1) continue;
            if (alive <= 1) break;
            gone[t] = 1;
            --alive;
            std::erase_if(edges, [&](auto& e) {
                return e.first == static_cast<int>(t) || e.second == static_cast<int>(t);
            });
            changed = true;
        }
    }
    // compact node ids
    std::vector<int> remap(bags.size(), -1);
    TreeCutDecomposition out;
    for (std::size_t t = 0; t < bags.size(); ++t) {
        if (gone[t]) continue;
        remap[t] = static_cast<int>(out.bags.size());
        out.bags.push_back(bags[t]);
    }
    for (auto& [a, b] : edges) {
        int x = remap[a], y = remap[b];
        out.tree_edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    return out;
}

}  // namespace tcw
