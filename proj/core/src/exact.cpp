#include "tcw/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tcw {

namespace {

// Tree-arrangement search for one fixed bag partition. Works on part
// subsets: reach(S) = "the parts of S can form a rooted subtree whose
// root's torso and internal adhesions all fit the width bound", with the
// rest of the graph contracted to a single outside vertex. Empty hub
// nodes are allowed as roots with >= 2 children (hubs of tree-degree <= 2
// never help, so this loses nothing).
struct Arranger {
    const Multigraph& g;
    int w;
    std::vector<std::tuple<int, int, int>> eidx;  // edges as vertex indices
    std::vector<Vertex> verts;
    std::vector<VertexSet> part_set;
    std::vector<std::uint16_t> part_vmask;
    int p = 0;
    std::uint16_t full = 0;
    Vertex fresh_base = 0;
    long long& trees_tried;

    std::map<std::uint16_t, char> memo;
    std::map<std::uint16_t, std::pair<int, std::vector<std::uint16_t>>> choice;
    int top_rb = -2;
    std::vector<std::uint16_t> top_groups;

    Arranger(const Multigraph& graph, const std::vector<VertexSet>& parts, int width_bound,
             long long& trees)
        : g(graph), w(width_bound), trees_tried(trees) {
        std::map<Vertex, int> idx;
        for (Vertex v : g.vertices()) {
            idx[v] = static_cast<int>(verts.size());
            verts.push_back(v);
            fresh_base = std::max(fresh_base, v + 1);
        }
        for (const auto& [u, v, m] : g.edges()) eidx.emplace_back(idx[u], idx[v], m);
        part_set = parts;
        p = static_cast<int>(parts.size());
        full = static_cast<std::uint16_t>((1u << p) - 1);
        for (const auto& ps : parts) {
            std::uint16_t m = 0;
            for (Vertex v : ps) m |= static_cast<std::uint16_t>(1u << idx[v]);
            part_vmask.push_back(m);
        }
    }

    std::uint16_t vmask_of(std::uint16_t pmask) const {
        std::uint16_t m = 0;
        for (int i = 0; i < p; ++i)
            if (pmask & (1u << i)) m |= part_vmask[i];
        return m;
    }

    int cut(std::uint16_t vmask) const {
        int c = 0;
        for (const auto& [a, b, m] : eidx)
            if (((vmask >> a) & 1) != ((vmask >> b) & 1)) c += m;
        return c;
    }

    // 3-center size of the root torso: bag of part rb (or empty hub),
    // one contracted vertex per child group, plus one for everything
    // outside S when the subtree has a parent.
    bool torso_fits(int rb, std::uint16_t s_pmask, const std::vector<std::uint16_t>& groups,
                    bool has_parent) const {
        ++trees_tried;
        const VertexSet bag = rb >= 0 ? part_set[rb] : VertexSet{};
        const std::uint16_t s_vmask = vmask_of(s_pmask);
        std::vector<std::uint16_t> gv;
        for (auto gm : groups) gv.push_back(vmask_of(gm));

        auto klass = [&](int vi) {  // 0 = bag, 1+i = child i, -1 = outside
            if (rb >= 0 && (part_vmask[rb] >> vi) & 1) return 0;
            for (std::size_t i = 0; i < gv.size(); ++i)
                if ((gv[i] >> vi) & 1) return static_cast<int>(i) + 1;
            return -1;
        };
        auto rep = [&](int k, int vi) {
            if (k == 0) return verts[vi];
            if (k < 0) return fresh_base + static_cast<Vertex>(gv.size());
            return fresh_base + (k - 1);
        };

        Multigraph h;
        for (Vertex v : bag) h.add_vertex(v);
        for (std::size_t i = 0; i < gv.size(); ++i) h.add_vertex(fresh_base + (Vertex)i);
        if (has_parent) h.add_vertex(fresh_base + static_cast<Vertex>(gv.size()));
        for (const auto& [a, b, m] : eidx) {
            const int ka = klass(a), kb = klass(b);
            if (!has_parent && (ka < 0 || kb < 0)) continue;  // cannot happen at the top
            if (ka == kb && ka != 0) continue;
            const Vertex ra = rep(ka, a), rb2 = rep(kb, b);
            if (ra != rb2) h.add_edge(ra, rb2, m);
        }
        return static_cast<int>(three_center(h, bag).vertex_count()) <= w;
    }

    bool reach(std::uint16_t s) {
        auto it = memo.find(s);
        if (it != memo.end()) return it->second != 0;
        memo[s] = 0;  // also blocks degenerate hub self-recursion
        bool ok = false;
        for (int rb = 0; rb <= p && !ok; ++rb) {
            const bool aux = rb == p;  // empty hub root tried last
            if (!aux && !((s >> rb) & 1)) continue;
            const std::uint16_t rest = aux ? s : static_cast<std::uint16_t>(s & ~(1u << rb));
            if (aux && std::popcount(static_cast<unsigned>(rest)) < 2) continue;
            std::vector<std::uint16_t> groups;
            ok = split_groups(aux ? -1 : rb, s, rest, aux ? 2 : 0, true, groups);
        }
        memo[s] = ok ? 1 : 0;
        return ok;
    }

    // assign `remaining` parts to child subtrees, lowest part first
    bool split_groups(int rb, std::uint16_t s, std::uint16_t remaining, int min_groups,
                      bool has_parent, std::vector<std::uint16_t>& groups) {
        if (remaining == 0) {
            if (static_cast<int>(groups.size()) < min_groups) return false;
            if (!torso_fits(rb, s, groups, has_parent)) return false;
            if (has_parent)
                choice[s] = {rb, groups};
            else {
                top_rb = rb;
                top_groups = groups;
            }
            return true;
        }
        const int r = std::countr_zero(static_cast<unsigned>(remaining));
        const std::uint16_t others = static_cast<std::uint16_t>(remaining & ~(1u << r));
        for (std::uint16_t t = others;; t = static_cast<std::uint16_t>((t - 1) & others)) {
            const std::uint16_t grp = static_cast<std::uint16_t>(t | (1u << r));
            if (cut(vmask_of(grp)) <= w && reach(grp)) {
                groups.push_back(grp);
                if (split_groups(rb, s, static_cast<std::uint16_t>(remaining & ~grp), min_groups,
                                 has_parent, groups))
                    return true;
                groups.pop_back();
            }
            if (t == 0) break;
        }
        return false;
    }

    std::optional<TreeCutDecomposition> decide() {
        for (int rb = 0; rb <= p; ++rb) {
            const bool aux = rb == p;
            const std::uint16_t rest = aux ? full : static_cast<std::uint16_t>(full & ~(1u << rb));
            if (aux && std::popcount(static_cast<unsigned>(rest)) < 2) continue;
            std::vector<std::uint16_t> groups;
            if (split_groups(aux ? -1 : rb, full, rest, aux ? 2 : 0, false, groups)) {
                TreeCutDecomposition d;
                build(d, top_rb, top_groups);
                return d;
            }
        }
        return std::nullopt;
    }

    int build(TreeCutDecomposition& d, int rb, const std::vector<std::uint16_t>& groups) {
        const int me = static_cast<int>(d.node_count());
        d.bags.push_back(rb >= 0 ? part_set[rb] : VertexSet{});
        for (auto grp : groups) {
            const auto& [crb, cgroups] = choice.at(grp);
            const int c = build(d, crb, cgroups);
            d.tree_edges.emplace_back(me, c);
        }
        return me;
    }
};

// all partitions of V into non-empty parts of size <= w, restricted
// growth string order
template <typename F>
void for_each_partition(const std::vector<Vertex>& verts, int max_part, F&& fn) {
    const int n = static_cast<int>(verts.size());
    std::vector<int> a(n, 0);
    while (true) {
        int nparts = 0;
        for (int i = 0; i < n; ++i) nparts = std::max(nparts, a[i] + 1);
        std::vector<VertexSet> parts(nparts);
        bool fits = true;
        for (int i = 0; i < n; ++i) {
            parts[a[i]].insert(verts[i]);
            if (static_cast<int>(parts[a[i]].size()) > max_part) fits = false;
        }
        if (fits && fn(parts)) return;
        // next restricted growth string
        int i = n - 1;
        while (i > 0) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, a[j] + 1);
            if (a[i] < mx) {
                ++a[i];
                break;
            }
            a[i] = 0;
            --i;
        }
        if (i == 0) break;
    }
}

std::optional<TreeCutDecomposition> decide_width(const Multigraph& g, int w,
                                                 long long& partitions, long long& trees) {
    std::vector<Vertex> verts;
    for (Vertex v : g.vertices()) verts.push_back(v);
    std::optional<TreeCutDecomposition> found;
    for_each_partition(verts, w, [&](const std::vector<VertexSet>& parts) {
        ++partitions;
        Arranger arr(g, parts, w, trees);
        found = arr.decide();
        return found.has_value();
    });
    return found;
}

}  // namespace

OracleResult exact_tcw(const Multigraph& g, int cap) {
    const int n = static_cast<int>(g.vertex_count());
    if (n > cap)
        throw std::invalid_argument("exact_tcw: " + std::to_string(n) +
                                    " vertices exceeds the cap of " + std::to_string(cap));
    OracleResult res;
    if (n == 0) {
        res.tcw = 0;
        res.witness.bags.push_back({});
        return res;
    }
    for (int w = 1; w <= n; ++w) {
        auto d = decide_width(g, w, res.partitions_tried, res.trees_tried);
        if (d) {
            auto rep = width(g, *d);
            if (rep.width > w) throw std::logic_error("exact_tcw: witness wider than claimed");
            res.tcw = w;
            res.witness = std::move(*d);
            return res;
        }
    }
    throw std::logic_error("exact_tcw: no decomposition found up to the trivial width");
}

bool exact_tcw_decision(const Multigraph& g, int w, int cap) {
    const int n = static_cast<int>(g.vertex_count());
    if (n > cap)
        throw std::invalid_argument("exact_tcw_decision: " + std::to_string(n) +
                                    " vertices exceeds the cap of " + std::to_string(cap));
    if (n == 0) return w >= 0;
    if (w <= 0) return false;
    if (w >= n) return true;  // single bag always achieves width n
    long long partitions = 0, trees = 0;
    return decide_width(g, w, partitions, trees).has_value();
}

}  // namespace tcw
