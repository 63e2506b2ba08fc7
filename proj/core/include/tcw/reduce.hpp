#ifndef TCW_REDUCE_HPP
#define TCW_REDUCE_HPP

#include <string>
#include <tuple>
#include <vector>

#include "tcw/decomposition.hpp"
#include "tcw/multigraph.hpp"

namespace tcw {

/// One degree reduction, replayable in both directions.
struct ReductionStep {
    enum Kind { Remove, Dissolve } kind = Remove;
    Vertex v = -1;
    // Remove: n1 = the sole neighbor (or -1 for an isolated vertex) with
    // multiplicity m1. Dissolve: the two neighbors, one edge each.
    Vertex n1 = -1, n2 = -1;
    int m1 = 0;
};

using ReductionLog = std::vector<ReductionStep>;

/// A 2-cut split: `marker_a` lives in piece of side A and stands in for
/// side B, and vice versa. Cut edges keep their original endpoints
/// (a-side vertex, b-side vertex, multiplicity).
struct SplitLink {
    Vertex marker_a = -1, marker_b = -1;
    int cut_size = 0;
    std::vector<std::tuple<Vertex, Vertex, int>> cut_edges;
};

struct PieceSet {
    std::vector<Multigraph> pieces;
    std::vector<VertexSet> markers;  // marker vertices inside each piece
    std::vector<SplitLink> links;    // in creation order
};

// Eliminates vertices of degree <= 2 to a fixed point: degree <= 1 and
// single-neighbor degree-2 vertices are removed, two-neighbor degree-2
// vertices are dissolved. Preserves tree-cut width for queries with w >= 2.
std::pair<Multigraph, ReductionLog> reduce_degree(const Multigraph& g);

// Recursively splits g along minimal cuts of size <= 2 that separate two
// non-marker vertices, identifying each far side into a marker vertex.
// Recursion stops once a piece has at most stop_size vertices or no such
// cut remains. Disconnected input yields one root piece per component.
PieceSet split_3ec(const Multigraph& g, int stop_size = 2);

// Inverse of split_3ec at the decomposition level: one decomposition per
// piece; markers are deleted from their bags and the trees are joined at
// the nodes that held them (adhesion = recorded cut <= 2). Throws on a
// marker missing from every bag.
TreeCutDecomposition recombine(const PieceSet& pieces,
                               const std::vector<TreeCutDecomposition>& decomps);

// Inverse of reduce_degree at the decomposition level: replays the log
// backwards, giving each re-inserted vertex a fresh singleton leaf bag
// attached to the node holding its (first) neighbor. Resulting width is
// at most max(width(d), 2).
TreeCutDecomposition lift_degree(const Multigraph& g_original, const ReductionLog& log,
                                 TreeCutDecomposition d);

}  // namespace tcw

#endif
