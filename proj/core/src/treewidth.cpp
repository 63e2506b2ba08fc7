#include "tcw/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace tcw {

namespace {

// Simple skeleton as adjacency sets, ignoring multiplicities.
std::map<Vertex, VertexSet> skeleton(const Multigraph& g) {
    std::map<Vertex, VertexSet> adj;
    for (Vertex v : g.vertices()) adj[v];
    for (const auto& [u, v, m] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return adj;
}

// Tree decomposition from an elimination order via the fill-in construction:
// bag(i) = v_i plus its not-yet-eliminated neighbors at elimination time,
// attached under the bag of the earliest-eliminated such neighbor.
TreeDecomposition td_from_order(std::map<Vertex, VertexSet> adj,
                                const std::vector<Vertex>& order) {
    TreeDecomposition d;
    if (order.empty()) {
        d.bags.push_back({});
        return d;
    }
    std::map<Vertex, int> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    std::vector<int> parent(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        VertexSet nbrs = adj[v];
        d.bags.push_back(nbrs);
        d.bags.back().insert(v);
        // fill in
        for (Vertex a : nbrs)
            for (Vertex b : nbrs)
                if (a < b) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
        for (Vertex a : nbrs) adj[a].erase(v);
        adj.erase(v);
        int best = -1;
        for (Vertex a : nbrs)
            if (best == -1 || pos[a] < best) best = pos[a];
        parent[i] = best;
    }
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        int p = parent[i] >= 0 ? parent[i] : static_cast<int>(i) + 1;
        d.tree_edges.emplace_back(static_cast<int>(i), p);
    }
    return d;
}

}  // namespace

int TreeDecomposition::width() const {
    std::size_t mx = 0;
    for (const auto& b : bags) mx = std::max(mx, b.size());
    return static_cast<int>(mx) - 1;
}

std::vector<std::string> validate(const Multigraph& g, const TreeDecomposition& d) {
    std::vector<std::string> errs;
    const std::size_t n = d.bags.size();
    if (n == 0) {
        errs.push_back("decomposition has no nodes");
        return errs;
    }
    if (d.tree_edges.size() != n - 1) errs.push_back("tree edge count is not nodes-1");
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : d.tree_edges) {
        if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n) || a == b) {
            errs.push_back("tree edge out of range");
            return errs;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!bfs.empty()) {
        int t = bfs.front();
        bfs.pop();
        for (int u : adj[t])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                bfs.push(u);
            }
    }
    if (reached != n) errs.push_back("tree is disconnected");

    for (Vertex v : g.vertices()) {
        std::vector<int> holds;
        for (std::size_t t = 0; t < n; ++t)
            if (d.bags[t].count(v)) holds.push_back(static_cast<int>(t));
        if (holds.empty()) {
            errs.push_back("vertex " + std::to_string(v) + " is in no bag");
            continue;
        }
        std::set<int> in(holds.begin(), holds.end());
        std::set<int> comp{holds[0]};
        std::queue<int> q;
        q.push(holds[0]);
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            for (int u : adj[t])
                if (in.count(u) && comp.insert(u).second) q.push(u);
        }
        if (comp.size() != in.size())
            errs.push_back("occurrences of vertex " + std::to_string(v) + " are disconnected");
    }
    for (const auto& [u, v, m] : g.edges()) {
        bool ok = false;
        for (const auto& b : d.bags)
            if (b.count(u) && b.count(v)) {
                ok = true;
                break;
            }
        if (!ok)
            errs.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} is covered by no bag");
    }
    return errs;
}

int NiceTreeDecomposition::width() const {
    std::size_t mx = 0;
    for (const auto& nd : nodes) mx = std::max(mx, nd.bag.size());
    return static_cast<int>(mx) - 1;
}

std::vector<int> NiceTreeDecomposition::postorder() const {
    std::vector<int> out;
    if (root < 0) return out;
    // iterative two-stack post-order
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        out.push_back(t);
        for (int c : nodes[t].children) stack.push_back(c);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<std::string> validate(const Multigraph& g, const NiceTreeDecomposition& d) {
    std::vector<std::string> errs;
    if (d.root < 0 || d.root >= static_cast<int>(d.nodes.size())) {
        errs.push_back("bad root index");
        return errs;
    }
    if (!d.nodes[d.root].bag.empty()) errs.push_back("root bag is not empty");
    auto order = d.postorder();
    if (order.size() != d.nodes.size()) errs.push_back("nodes unreachable from root");

    std::map<std::pair<Vertex, Vertex>, int> introduced;
    for (int t : order) {
        const NiceNode& nd = d.nodes[t];
        switch (nd.kind) {
            case NiceKind::Leaf:
                if (!nd.children.empty()) errs.push_back("leaf node with children");
                if (!nd.bag.empty()) errs.push_back("leaf node with non-empty bag");
                break;
            case NiceKind::Introduce: {
                if (nd.children.size() != 1) {
                    errs.push_back("introduce node without exactly one child");
                    break;
                }
                const auto& cb = d.nodes[nd.children[0]].bag;
                if (cb.count(nd.vertex) || !nd.bag.count(nd.vertex))
                    errs.push_back("introduce node payload mismatch");
                VertexSet expect = cb;
                expect.insert(nd.vertex);
                if (expect != nd.bag) errs.push_back("introduce node bag mismatch");
                break;
            }
            case NiceKind::Forget: {
                if (nd.children.size() != 1) {
                    errs.push_back("forget node without exactly one child");
                    break;
                }
                VertexSet expect = d.nodes[nd.children[0]].bag;
                if (!expect.count(nd.vertex)) errs.push_back("forget node payload mismatch");
                expect.erase(nd.vertex);
                if (expect != nd.bag) errs.push_back("forget node bag mismatch");
                break;
            }
            case NiceKind::IntroduceEdge: {
                if (nd.children.size() != 1) {
                    errs.push_back("edge node without exactly one child");
                    break;
                }
                if (nd.bag != d.nodes[nd.children[0]].bag)
                    errs.push_back("edge node bag differs from child");
                if (!nd.bag.count(nd.edge_u) || !nd.bag.count(nd.edge_v))
                    errs.push_back("edge node endpoints outside bag");
                introduced[{std::min(nd.edge_u, nd.edge_v), std::max(nd.edge_u, nd.edge_v)}] +=
                    nd.edge_mult;
                break;
            }
            case NiceKind::Join: {
                if (nd.children.size() != 2) {
                    errs.push_back("join node without exactly two children");
                    break;
                }
                if (nd.bag != d.nodes[nd.children[0]].bag ||
                    nd.bag != d.nodes[nd.children[1]].bag)
                    errs.push_back("join node bags differ");
                break;
            }
        }
    }
    for (const auto& [u, v, m] : g.edges()) {
        auto it = introduced.find({u, v});
        if (it == introduced.end())
            errs.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} never introduced");
        else if (it->second != m)
            errs.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} multiplicity mismatch");
        introduced.erase({u, v});
    }
    if (!introduced.empty()) errs.push_back("introduced edge absent from the graph");
    return errs;
}

std::pair<int, TreeDecomposition> exact_treewidth(const Multigraph& g, int cap) {
    const auto verts = [&] {
        std::vector<Vertex> vs;
        for (Vertex v : g.vertices()) vs.push_back(v);
        return vs;
    }();
    const int n = static_cast<int>(verts.size());
    if (n > cap)
        throw std::invalid_argument("exact_treewidth: " + std::to_string(n) +
                                    " vertices exceeds the cap of " + std::to_string(cap) +
                                    "; use heuristic_ub instead");
    if (n == 0) {
        TreeDecomposition d;
        d.bags.push_back({});
        return {-1, d};
    }

    std::vector<std::uint32_t> adj(n, 0);
    std::map<Vertex, int> idx;
    for (int i = 0; i < n; ++i) idx[verts[i]] = i;
    for (const auto& [u, v, m] : g.edges()) {
        adj[idx[u]] |= 1u << idx[v];
        adj[idx[v]] |= 1u << idx[u];
    }

    // q(S, v): neighbours of v reachable through eliminated set S.
    auto elim_degree = [&](std::uint32_t s, int v) {
        std::uint32_t inside = s | (1u << v);
        std::uint32_t comp = 1u << v, touched = adj[v];
        while (true) {
            std::uint32_t grow = (touched & inside) & ~comp;
            if (!grow) break;
            comp |= grow;
            std::uint32_t t = grow;
            while (t) {
                int u = std::countr_zero(t);
                t &= t - 1;
                touched |= adj[u];
            }
        }
        return std::popcount(touched & ~inside);
    };

    const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<std::uint8_t> f(full + 1, 0), choice(full + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = n + 1, pick = -1;
        std::uint32_t t = s;
        while (t) {
            int v = std::countr_zero(t);
            t &= t - 1;
            const std::uint32_t rest = s & ~(1u << v);
            int cost = std::max<int>(f[rest], elim_degree(rest, v));
            if (cost < best) {
                best = cost;
                pick = v;
            }
        }
        f[s] = static_cast<std::uint8_t>(best);
        choice[s] = static_cast<std::uint8_t>(pick);
    }

    // recover the elimination order (reverse of removal sequence)
    std::vector<Vertex> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        int v = choice[s];
        order[i] = verts[v];
        s &= ~(1u << v);
    }
    TreeDecomposition d = td_from_order(skeleton(g), order);
    return {f[full], d};
}

std::pair<int, TreeDecomposition> heuristic_ub(const Multigraph& g) {
    auto base = skeleton(g);
    if (base.empty()) {
        TreeDecomposition d;
        d.bags.push_back({});
        return {-1, d};
    }

    auto run = [&](bool min_fill) {
        auto adj = base;
        std::vector<Vertex> order;
        while (!adj.empty()) {
            Vertex best = -1;
            long long best_score = -1;
            for (const auto& [v, nbrs] : adj) {
                long long score;
                if (min_fill) {
                    score = 0;
                    for (Vertex a : nbrs)
                        for (Vertex b : nbrs)
                            if (a < b && !adj[a].count(b)) ++score;
                } else {
                    score = static_cast<long long>(nbrs.size());
                }
                if (best == -1 || score < best_score) {
                    best = v;
                    best_score = score;
                }
            }
            order.push_back(best);
            auto nbrs = adj[best];
            for (Vertex a : nbrs)
                for (Vertex b : nbrs)
                    if (a < b) {
                        adj[a].insert(b);
                        adj[b].insert(a);
                    }
            for (Vertex a : nbrs) adj[a].erase(best);
            adj.erase(best);
        }
        return td_from_order(base, order);
    };

    TreeDecomposition deg = run(false), fill = run(true);
    const TreeDecomposition& pick = fill.width() <= deg.width() ? fill : deg;
    return {pick.width(), pick};
}

NiceTreeDecomposition to_nice(const Multigraph& g, const TreeDecomposition& d) {
    NiceTreeDecomposition out;
    auto add = [&](NiceNode nd) {
        out.nodes.push_back(std::move(nd));
        return static_cast<int>(out.nodes.size()) - 1;
    };
    auto leaf = [&] { return add({NiceKind::Leaf, {}, {}, -1, -1, -1, 0}); };
    auto intro = [&](int child, Vertex v) {
        VertexSet bag = out.nodes[child].bag;
        bag.insert(v);
        return add({NiceKind::Introduce, std::move(bag), {child}, v, -1, -1, 0});
    };
    auto forget = [&](int child, Vertex v) {
        VertexSet bag = out.nodes[child].bag;
        bag.erase(v);
        return add({NiceKind::Forget, std::move(bag), {child}, v, -1, -1, 0});
    };

    const std::size_t n = std::max<std::size_t>(d.bags.size(), 1);
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : d.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // chain from `from` (a nice node) up to bag `target`
    auto morph = [&](int from, const VertexSet& target) {
        for (Vertex v : VertexSet(out.nodes[from].bag))
            if (!target.count(v)) from = forget(from, v);
        for (Vertex v : target)
            if (!out.nodes[from].bag.count(v)) from = intro(from, v);
        return from;
    };

    // iterative DFS over the input tree rooted at node 0
    VertexSet root_bag = d.bags.empty() ? VertexSet{} : d.bags[0];
    std::vector<int> parent(n, -2);
    std::vector<int> dfs_order;
    {
        std::vector<int> stack{0};
        parent[0] = -1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            dfs_order.push_back(t);
            for (int c : adj[t])
                if (parent[c] == -2) {
                    parent[c] = t;
                    stack.push_back(c);
                }
        }
    }
    std::vector<int> built(n, -1);
    for (auto it = dfs_order.rbegin(); it != dfs_order.rend(); ++it) {
        int t = *it;
        const VertexSet& bag = d.bags.empty() ? root_bag : d.bags[t];
        std::vector<int> kids;
        for (int c : adj[t])
            if (parent[c] == t) kids.push_back(morph(built[c], bag));
        int cur;
        if (kids.empty()) {
            cur = morph(leaf(), bag);
        } else {
            cur = kids[0];
            for (std::size_t i = 1; i < kids.size(); ++i)
                cur = add({NiceKind::Join, bag, {cur, kids[i]}, -1, -1, -1, 0});
        }
        built[t] = cur;
    }
    out.root = morph(built[0], {});

    // parent pointers for edge splicing
    std::vector<int> nparent(out.nodes.size(), -1);
    for (std::size_t t = 0; t < out.nodes.size(); ++t)
        for (int c : out.nodes[t].children) nparent[c] = static_cast<int>(t);

    // introduce each edge at the first post-order node containing both ends,
    // so infeasible partial states die as early as possible
    auto post = out.postorder();
    for (const auto& [u, v, m] : g.edges()) {
        int at = -1;
        for (int t : post)
            if (out.nodes[t].bag.count(u) && out.nodes[t].bag.count(v)) {
                at = t;
                break;
            }
        if (at < 0) continue;  // caller passed an invalid decomposition; validate() reports it
        int p = nparent[at];
        int e = add({NiceKind::IntroduceEdge, out.nodes[at].bag, {at}, -1, u, v, m});
        nparent.push_back(p);
        nparent[at] = e;
        if (p < 0) {
            out.root = e;
        } else {
            for (int& c : out.nodes[p].children)
                if (c == at) c = e;
        }
        post = out.postorder();
    }
    return out;
}

}  // namespace tcw
