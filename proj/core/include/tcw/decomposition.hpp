#ifndef TCW_DECOMPOSITION_HPP
#define TCW_DECOMPOSITION_HPP

#include <map>
#include <string>
#include <vector>

#include "tcw/multigraph.hpp"

namespace tcw {

/// Tree-cut decomposition: a tree over nodes 0..n-1 plus pairwise disjoint
/// (possibly empty) bags whose union covers the companion graph.
struct TreeCutDecomposition {
    std::vector<VertexSet> bags;                 // one per node
    std::vector<std::pair<int, int>> tree_edges; // undirected, a < b

    std::size_t node_count() const { return bags.size(); }
    std::vector<std::vector<int>> node_adjacency() const;
    bool is_leaf(int node) const;

    // Single node holding all of V(g).
    static TreeCutDecomposition trivial(const Multigraph& g);
};

struct WidthReport {
    long long width = 0;
    long long internal_width = 0;
    long long max_adhesion = 0;
    std::vector<long long> torso_sizes;  // |V(3-center of torso)| per node
    int witness_node = -1;               // node with the largest torso
    std::pair<int, int> witness_edge{-1, -1};  // tree edge with the largest adhesion
};

// Structural validation. Strict mode additionally requires every leaf bag
// to be non-empty. Returns the list of violated invariants (empty = ok).
std::vector<std::string> validate(const Multigraph& g, const TreeCutDecomposition& d,
                                  bool strict = false);

// Edge cut across a tree edge (all graph edges between the two sides).
EdgeCut adhesion(const Multigraph& g, const TreeCutDecomposition& d,
                 std::pair<int, int> tree_edge);

// Fixed point of: dissolve any v outside x with two neighbors and degree
// 2; remove any v outside x with degree <= 2 and at most one neighbor.
Multigraph three_center(const Multigraph& h, const VertexSet& x);

struct Torso {
    Multigraph graph;
    // component id (the neighbor node of t on that side) -> contracted vertex
    std::map<int, Vertex> contracted;
};

Torso torso(const Multigraph& g, const TreeCutDecomposition& d, int node);

// |X_t| + number of components of T minus t with a non-empty bag union.
// Matches |V(3-center of torso)| on 3-edge-connected graphs.
long long torso_size_3ec(const Multigraph& g, const TreeCutDecomposition& d, int node);

// Width and internal width of d. Throws std::invalid_argument (with the
// violation list) when d is not a valid decomposition of g.
WidthReport width(const Multigraph& g, const TreeCutDecomposition& d);

// Number of non-empty bags; a decomposition is trivial when this is <= 1.
int nonempty_bag_count(const TreeCutDecomposition& d);

// Iteratively deletes empty leaf nodes (never changes the width); keeps at
// least one node.
TreeCutDecomposition prune_empty_leaves(const TreeCutDecomposition& d);

}  // namespace tcw

#endif
