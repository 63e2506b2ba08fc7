#include "tcw/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>

namespace tcw {

void Multigraph::add_vertex(Vertex v) { adj_.try_emplace(v); }

void Multigraph::add_edge(Vertex u, Vertex v, int mult) {
    if (u == v) throw std::invalid_argument("loop edge rejected");
    if (mult <= 0) throw std::invalid_argument("edge multiplicity must be positive");
    adj_.try_emplace(u);
    adj_.try_emplace(v);
    adj_[u][v] += mult;
    adj_[v][u] += mult;
}

long long Multigraph::edge_total() const {
    long long s = 0;
    for (const auto& [v, nbrs] : adj_)
        for (const auto& [u, m] : nbrs) s += m;
    return s / 2;
}

std::size_t Multigraph::edge_pairs() const {
    std::size_t s = 0;
    for (const auto& [v, nbrs] : adj_) s += nbrs.size();
    return s / 2;
}

int Multigraph::degree(Vertex v) const {
    const auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("degree: unknown vertex");
    int d = 0;
    for (const auto& [u, m] : it->second) d += m;
    return d;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
    const auto it = adj_.find(u);
    if (it == adj_.end()) return 0;
    const auto jt = it->second.find(v);
    return jt == it->second.end() ? 0 : jt->second;
}

std::vector<Vertex> Multigraph::neighbors(Vertex v) const {
    const auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("neighbors: unknown vertex");
    std::vector<Vertex> out;
    out.reserve(it->second.size());
    for (const auto& [u, m] : it->second) out.push_back(u);
    return out;
}

VertexSet Multigraph::vertices() const {
    VertexSet s;
    for (const auto& [v, nbrs] : adj_) s.insert(s.end(), v);
    return s;
}

std::vector<std::tuple<Vertex, Vertex, int>> Multigraph::edges() const {
    std::vector<std::tuple<Vertex, Vertex, int>> out;
    for (const auto& [v, nbrs] : adj_)
        for (const auto& [u, m] : nbrs)
            if (v < u) out.emplace_back(v, u, m);
    return out;
}

const std::map<Vertex, int>& Multigraph::adjacency(Vertex v) const {
    const auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("adjacency: unknown vertex");
    return it->second;
}

EdgeCut delta(const Multigraph& g, const VertexSet& x, const VertexSet& y) {
    for (Vertex v : x)
        if (y.count(v)) throw std::invalid_argument("delta: overlapping sets");
    EdgeCut cut;
    for (Vertex v : x) {
        for (const auto& [u, m] : g.adjacency(v)) {
            if (y.count(u)) {
                cut.size += m;
                cut.edges.emplace_back(std::min(v, u), std::max(v, u), m);
            }
        }
    }
    std::sort(cut.edges.begin(), cut.edges.end());
    return cut;
}

EdgeCut delta_out(const Multigraph& g, const VertexSet& x) {
    EdgeCut cut;
    for (Vertex v : x) {
        for (const auto& [u, m] : g.adjacency(v)) {
            if (!x.count(u)) {
                cut.size += m;
                cut.edges.emplace_back(std::min(v, u), std::max(v, u), m);
            }
        }
    }
    std::sort(cut.edges.begin(), cut.edges.end());
    return cut;
}

VertexSet boundary(const Multigraph& g, const VertexSet& x) {
    VertexSet out;
    for (Vertex v : x)
        for (const auto& [u, m] : g.adjacency(v))
            if (!x.count(u)) {
                out.insert(v);
                break;
            }
    return out;
}

Multigraph dissolve(const Multigraph& g, Vertex v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.size() != 2 || g.degree(v) != 2)
        throw std::invalid_argument("dissolve: vertex must have degree 2 and two neighbors");
    Multigraph h;
    for (Vertex u : g.vertices())
        if (u != v) h.add_vertex(u);
    for (const auto& [a, b, m] : g.edges())
        if (a != v && b != v) h.add_edge(a, b, m);
    h.add_edge(nbrs[0], nbrs[1], 1);
    return h;
}

Multigraph identify(const Multigraph& g, const VertexSet& z, Vertex fresh) {
    if (z.empty()) throw std::invalid_argument("identify: empty set");
    for (Vertex v : z)
        if (!g.has_vertex(v)) throw std::invalid_argument("identify: unknown vertex in set");
    if (g.has_vertex(fresh) && !z.count(fresh))
        throw std::invalid_argument("identify: fresh id already present");
    Multigraph h;
    h.add_vertex(fresh);
    for (Vertex u : g.vertices())
        if (!z.count(u)) h.add_vertex(u);
    for (const auto& [a, b, m] : g.edges()) {
        const bool az = z.count(a) != 0, bz = z.count(b) != 0;
        if (az && bz) continue;
        h.add_edge(az ? fresh : a, bz ? fresh : b, m);
    }
    return h;
}

Multigraph induced(const Multigraph& g, const VertexSet& s) {
    Multigraph h;
    for (Vertex v : s) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced: unknown vertex");
        h.add_vertex(v);
    }
    for (const auto& [a, b, m] : g.edges())
        if (s.count(a) && s.count(b)) h.add_edge(a, b, m);
    return h;
}

std::vector<VertexSet> components(const Multigraph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (Vertex start : g.vertices()) {
        if (seen.count(start)) continue;
        VertexSet comp;
        std::deque<Vertex> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            comp.insert(v);
            for (const auto& [u, m] : g.adjacency(v))
                if (seen.insert(u).second) queue.push_back(u);
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Multigraph& g) {
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

namespace {

// Components after deleting the listed pairs entirely.
std::vector<VertexSet> components_without(const Multigraph& g,
                                          const std::vector<std::pair<Vertex, Vertex>>& gone) {
    Multigraph stripped;
    for (Vertex v : g.vertices()) stripped.add_vertex(v);
    for (const auto& [a, b, m] : g.edges()) {
        bool skip = false;
        for (const auto& [ca, cb] : gone)
            if (ca == a && cb == b) skip = true;
        if (!skip) stripped.add_edge(a, b, m);
    }
    return components(stripped);
}

// Unit-style max flow on multiplicities, capped; returns (flow, side of s
// in the residual graph when flow < cap).
std::pair<int, VertexSet> capped_flow(const Multigraph& g, Vertex s, Vertex t, int cap) {
    std::map<std::pair<Vertex, Vertex>, int> residual;
    for (const auto& [a, b, m] : g.edges()) {
        residual[{a, b}] = m;
        residual[{b, a}] = m;
    }
    int flow = 0;
    while (flow < cap) {
        std::map<Vertex, Vertex> parent;
        std::deque<Vertex> queue{s};
        parent[s] = s;
        while (!queue.empty() && !parent.count(t)) {
            Vertex v = queue.front();
            queue.pop_front();
            for (const auto& [u, m] : g.adjacency(v)) {
                if (parent.count(u) || residual[{v, u}] <= 0) continue;
                parent[u] = v;
                queue.push_back(u);
            }
        }
        if (!parent.count(t)) break;
        for (Vertex v = t; v != s; v = parent[v]) {
            residual[{parent[v], v}] -= 1;
            residual[{v, parent[v]}] += 1;
        }
        ++flow;
    }
    VertexSet side;
    if (flow < cap) {
        std::deque<Vertex> queue{s};
        side.insert(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (const auto& [u, m] : g.adjacency(v))
                if (!side.count(u) && residual[{v, u}] > 0) {
                    side.insert(u);
                    queue.push_back(u);
                }
        }
    }
    return {flow, side};
}

}  // namespace

int edge_connectivity(const Multigraph& g, Vertex s, Vertex t, int cap) {
    return capped_flow(g, s, t, cap).first;
}

std::optional<SmallCut> min_cut_le2_between(const Multigraph& g, const VertexSet& terminals) {
    if (!is_connected(g) || g.vertex_count() < 2)
        throw std::invalid_argument("min_cut_le2: connected graph with >= 2 vertices required");
    if (terminals.size() < 2) return std::nullopt;
    const auto verts = g.vertices();
    const Vertex s = *terminals.begin();
    std::optional<SmallCut> best;
    for (Vertex t : terminals) {
        if (t == s) continue;
        auto [flow, s_side] = capped_flow(g, s, t, 3);
        if (flow >= 3) continue;
        VertexSet x_side;
        for (Vertex v : verts)
            if (!s_side.count(v)) x_side.insert(v);
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (const auto& [a, b, m] : delta_out(g, x_side).edges) pairs.emplace_back(a, b);
        // The flow cut may be non-minimal (a side may fall apart). A cut
        // of size <= 2 is minimal iff both sides are connected, so repair
        // by picking a whole component of g - cut-pairs, or everything
        // outside the component of s, whichever yields connected sides.
        auto comps = components_without(g, pairs);
        std::vector<VertexSet> candidates;
        VertexSet rest;
        for (auto& c : comps) {
            if (c.count(s)) continue;
            candidates.push_back(c);
            rest.insert(c.begin(), c.end());
        }
        if (comps.size() > 2) candidates.push_back(std::move(rest));
        for (const auto& side : candidates) {
            bool has_terminal = false;
            for (Vertex v : side)
                if (terminals.count(v)) {
                    has_terminal = true;
                    break;
                }
            if (!has_terminal) continue;
            auto cut = delta_out(g, side);
            if (cut.size > 2) continue;
            VertexSet other;
            for (Vertex v : verts)
                if (!side.count(v)) other.insert(v);
            if (!is_connected(induced(g, side)) || !is_connected(induced(g, other))) continue;
            if (!best || cut.size < best->size) best = SmallCut{side, static_cast<int>(cut.size)};
            break;
        }
        if (best && best->size <= 1) break;  // connected: nothing smaller exists
    }
    return best;
}

std::optional<SmallCut> min_cut_le2(const Multigraph& g) {
    return min_cut_le2_between(g, g.vertices());
}

bool is_3_edge_connected(const Multigraph& g) {
    if (g.vertex_count() < 2) return true;
    if (!is_connected(g)) return false;
    return !min_cut_le2(g).has_value();
}

}  // namespace tcw
