#include "tcw/approx.hpp"

#include <algorithm>
#include <stdexcept>

#include "tcw/reduce.hpp"
#include "tcw/treewidth.hpp"

namespace tcw {

namespace {

// the large leaf to refine next: biggest bag, then smallest minimum id
int pick_large_leaf(const TreeCutDecomposition& d, int w) {
    int best = -1;
    for (std::size_t t = 0; t < d.node_count(); ++t) {
        if (!d.is_leaf(static_cast<int>(t))) continue;
        if (static_cast<int>(d.bags[t].size()) < 2 * w) continue;
        if (best < 0 || d.bags[t].size() > d.bags[best].size() ||
            (d.bags[t].size() == d.bags[best].size() &&
             *d.bags[t].begin() < *d.bags[best].begin()))
            best = static_cast<int>(t);
    }
    return best;
}

// decomposition of one 3-edge-connected (modulo markers) piece, or nullopt
// with the certificate filled in
std::optional<TreeCutDecomposition> solve_piece(const Multigraph& gp, int w,
                                                ApproxOutcome& fail) {
    TreeCutDecomposition d = TreeCutDecomposition::trivial(gp);
    for (int leaf = pick_large_leaf(d, w); leaf >= 0; leaf = pick_large_leaf(d, w)) {
        const VertexSet bag = d.bags[leaf];
        const Multigraph sub = induced(gp, bag);
        const long long tw_bound = 2LL * w * w + 3 * w;

        TreeDecomposition td;
        if (sub.vertex_count() <= 20) {
            auto [tw, exact_td] = exact_treewidth(sub);
            if (tw > tw_bound) {
                fail.too_wide = true;
                fail.certificate = TooWideCertificate::TreewidthExceeded;
                return std::nullopt;
            }
            td = std::move(exact_td);
        } else {
            // An upper bound cannot certify "treewidth too large"; a too
            // wide heuristic decomposition just costs DP time, so carry on
            // and let the star-cut answer speak.
            td = heuristic_ub(sub).second;
        }

        auto inst = make_instance(bag, gp, w);
        auto sol = solve(inst, to_nice(sub, td));
        if (!sol) {
            fail.too_wide = true;
            fail.certificate = TooWideCertificate::StarCutInfeasible;
            fail.infeasible_leaf = bag;
            return std::nullopt;
        }
        d = refine(gp, d, leaf, *sol);
        if (width(gp, d).internal_width > 2LL * w)
            throw std::logic_error("approx_tcw: refinement broke the 2w invariant");
    }
    return d;
}

}  // namespace

TreeCutDecomposition refine(const Multigraph& g, const TreeCutDecomposition& d, int leaf,
                            const StarCutSolution& sol) {
    if (leaf < 0 || leaf >= static_cast<int>(d.node_count()) || !d.is_leaf(leaf))
        throw std::invalid_argument("refine: not a leaf node");
    VertexSet covered = sol.center;
    for (const auto& p : sol.parts) covered.insert(p.begin(), p.end());
    if (covered != d.bags[leaf])
        throw std::invalid_argument("refine: solution does not partition the leaf bag");

    TreeCutDecomposition out = d;
    out.bags[leaf] = sol.center;
    for (const auto& p : sol.parts) {
        const int node = static_cast<int>(out.node_count());
        out.bags.push_back(p);
        out.tree_edges.emplace_back(leaf, node);
    }
    return out;
}

ApproxOutcome approx_tcw(const Multigraph& g, int w) {
    ApproxOutcome out;

    if (w <= 1) {
        // tcw <= 0 only for the empty graph; a non-empty degree-reduced
        // core is immersed in g and has tree-cut width >= 2, so for w = 1
        // the answer hinges on the core alone.
        auto [core, log] = reduce_degree(g);
        if ((w <= 0 && g.vertex_count() > 0) || core.vertex_count() > 0) {
            out.too_wide = true;
            out.certificate = TooWideCertificate::TinyWidthCore;
            return out;
        }
        TreeCutDecomposition d = lift_degree(g, log, {});
        if (d.bags.empty()) d.bags.push_back({});
        out.decomposition = prune_empty_leaves(d);
        out.report = width(g, out.decomposition);
        if (out.report.width > 2LL * w) {
            // only reachable for w <= 0 with an empty graph handled above
            throw std::logic_error("approx_tcw: degenerate path exceeded 2w");
        }
        return out;
    }

    auto [core, log] = reduce_degree(g);
    auto pieces = split_3ec(core, std::max(2, w));
    std::vector<TreeCutDecomposition> piece_ds;
    for (const auto& gp : pieces.pieces) {
        auto d = solve_piece(gp, w, out);
        if (!d) return out;
        piece_ds.push_back(std::move(*d));
    }
    TreeCutDecomposition joined = recombine(pieces, piece_ds);
    TreeCutDecomposition lifted = lift_degree(g, log, joined);
    out.decomposition = prune_empty_leaves(lifted);
    out.report = width(g, out.decomposition);
    if (out.report.width > 2LL * w)
        throw std::logic_error("approx_tcw: final decomposition exceeds 2w");
    return out;
}

}  // namespace tcw
