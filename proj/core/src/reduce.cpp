#include "tcw/reduce.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tcw {

namespace {

Multigraph without_vertex(const Multigraph& g, Vertex v) {
    Multigraph h;
    for (Vertex u : g.vertices())
        if (u != v) h.add_vertex(u);
    for (const auto& [a, b, m] : g.edges())
        if (a != v && b != v) h.add_edge(a, b, m);
    return h;
}

void split_rec(const Multigraph& g, const VertexSet& markers, int stop_size, Vertex& fresh,
               PieceSet& out) {
    VertexSet terminals;
    for (Vertex v : g.vertices())
        if (!markers.count(v)) terminals.insert(v);
    std::optional<SmallCut> cut;
    if (static_cast<int>(g.vertex_count()) > stop_size && terminals.size() >= 2)
        cut = min_cut_le2_between(g, terminals);
    if (!cut) {
        out.pieces.push_back(g);
        out.markers.push_back(markers);
        return;
    }

    const VertexSet& side_b = cut->side;
    VertexSet side_a;
    for (Vertex v : g.vertices())
        if (!side_b.count(v)) side_a.insert(v);
    const Vertex ma = fresh++;  // in the a piece, stands for side_b
    const Vertex mb = fresh++;  // in the b piece, stands for side_a

    Multigraph ga = induced(g, side_a);
    Multigraph gb = induced(g, side_b);
    ga.add_vertex(ma);
    gb.add_vertex(mb);
    SplitLink link{ma, mb, cut->size, {}};
    for (const auto& [u, v, m] : delta(g, side_a, side_b).edges) {
        const Vertex a_end = side_a.count(u) ? u : v;
        const Vertex b_end = side_a.count(u) ? v : u;
        link.cut_edges.emplace_back(a_end, b_end, m);
        ga.add_edge(a_end, ma, m);
        gb.add_edge(b_end, mb, m);
    }
    out.links.push_back(std::move(link));

    VertexSet mk_a{ma}, mk_b{mb};
    for (Vertex v : markers) (side_a.count(v) ? mk_a : mk_b).insert(v);
    split_rec(ga, mk_a, stop_size, fresh, out);
    split_rec(gb, mk_b, stop_size, fresh, out);
}

}  // namespace

std::pair<Multigraph, ReductionLog> reduce_degree(const Multigraph& g) {
    Multigraph h = g;
    ReductionLog log;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : h.vertices()) {
            if (h.degree(v) > 2) continue;
            const auto nbrs = h.neighbors(v);
            ReductionStep st;
            st.v = v;
            if (nbrs.size() == 2) {
                st.kind = ReductionStep::Dissolve;
                st.n1 = nbrs[0];
                st.n2 = nbrs[1];
                st.m1 = 1;
                h = dissolve(h, v);
            } else {
                st.kind = ReductionStep::Remove;
                if (!nbrs.empty()) {
                    st.n1 = nbrs[0];
                    st.m1 = h.multiplicity(v, nbrs[0]);
                }
                h = without_vertex(h, v);
            }
            log.push_back(st);
            changed = true;
            break;  // restart: smallest eligible id first, deterministic
        }
    }
    return {h, log};
}

PieceSet split_3ec(const Multigraph& g, int stop_size) {
    PieceSet out;
    Vertex fresh = 0;
    for (Vertex v : g.vertices()) fresh = std::max(fresh, v + 1);
    for (const auto& comp : components(g)) split_rec(induced(g, comp), {}, stop_size, fresh, out);
    return out;
}

TreeCutDecomposition recombine(const PieceSet& ps,
                               const std::vector<TreeCutDecomposition>& decomps) {
    if (ps.pieces.size() != decomps.size())
        throw std::invalid_argument("recombine: one decomposition per piece required");
    if (decomps.empty()) {
        TreeCutDecomposition d;
        d.bags.push_back({});
        return d;
    }

    std::vector<TreeCutDecomposition> work = decomps;
    std::vector<char> alive(work.size(), 1);
    std::map<Vertex, std::pair<int, int>> loc;  // vertex -> (work id, node)
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t t = 0; t < work[i].node_count(); ++t)
            for (Vertex v : work[i].bags[t]) loc[v] = {static_cast<int>(i), static_cast<int>(t)};

    // absorb work[b] into work[a], returning the node-id offset
    auto absorb = [&](int a, int b) {
        const int offset = static_cast<int>(work[a].node_count());
        for (std::size_t t = 0; t < work[b].node_count(); ++t) {
            for (Vertex v : work[b].bags[t]) loc[v] = {a, static_cast<int>(t) + offset};
            work[a].bags.push_back(std::move(work[b].bags[t]));
        }
        for (const auto& [x, y] : work[b].tree_edges)
            work[a].tree_edges.emplace_back(x + offset, y + offset);
        work[b] = {};
        alive[b] = 0;
        return offset;
    };

    for (auto it = ps.links.rbegin(); it != ps.links.rend(); ++it) {
        const auto la = loc.find(it->marker_a);
        const auto lb = loc.find(it->marker_b);
        if (la == loc.end() || lb == loc.end())
            throw std::invalid_argument("recombine: split marker missing from every bag");
        auto [wa, na] = la->second;
        auto [wb, nb] = lb->second;
        if (wa == wb) throw std::invalid_argument("recombine: markers of one link share a tree");
        work[wa].bags[na].erase(it->marker_a);
        work[wb].bags[nb].erase(it->marker_b);
        loc.erase(it->marker_a);
        loc.erase(it->marker_b);
        const int offset = absorb(wa, wb);
        work[wa].tree_edges.emplace_back(na, nb + offset);
    }

    // disconnected inputs leave several trees; join them with 0-adhesion edges
    int first = -1;
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (!alive[i]) continue;
        if (first < 0) {
            first = static_cast<int>(i);
            continue;
        }
        const int offset = absorb(first, static_cast<int>(i));
        work[first].tree_edges.emplace_back(0, offset);
    }
    return work[first];
}

TreeCutDecomposition lift_degree(const Multigraph&, const ReductionLog& log,
                                 TreeCutDecomposition d) {
    std::map<Vertex, int> loc;
    for (std::size_t t = 0; t < d.node_count(); ++t)
        for (Vertex v : d.bags[t]) loc[v] = static_cast<int>(t);

    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        const Vertex v = it->v;
        if (d.bags.empty()) {
            d.bags.push_back({v});
            loc[v] = 0;
            continue;
        }
        int host = 0;
        if (it->n1 != -1) {
            const auto h = loc.find(it->n1);
            if (h != loc.end()) host = h->second;
        }
        const int node = static_cast<int>(d.node_count());
        d.bags.push_back({v});
        d.tree_edges.emplace_back(host, node);
        loc[v] = node;
    }
    return d;
}

}  // namespace tcw
