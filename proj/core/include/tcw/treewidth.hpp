#ifndef TCW_TREEWIDTH_HPP
#define TCW_TREEWIDTH_HPP

#include <optional>
#include <string>
#include <vector>

#include "tcw/multigraph.hpp"

namespace tcw {

/// Ordinary tree decomposition; width = largest bag minus one.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const;
};

std::vector<std::string> validate(const Multigraph& g, const TreeDecomposition& d);

enum class NiceKind { Leaf, Introduce, Forget, IntroduceEdge, Join };

struct NiceNode {
    NiceKind kind = NiceKind::Leaf;
    VertexSet bag;
    std::vector<int> children;      // at most two
    Vertex vertex = -1;             // Introduce / Forget payload
    Vertex edge_u = -1, edge_v = -1;  // IntroduceEdge payload
    int edge_mult = 0;
};

/// Rooted binary decomposition with typed nodes; the root bag is empty and
/// every multigraph edge is introduced, with its full multiplicity, at
/// exactly one IntroduceEdge node.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
    // post-order traversal (children before parents)
    std::vector<int> postorder() const;
};

std::vector<std::string> validate(const Multigraph& g, const NiceTreeDecomposition& d);

// Exact treewidth by subset dynamic programming over elimination orders,
// on the simple skeleton. Throws std::invalid_argument above the cap.
std::pair<int, TreeDecomposition> exact_treewidth(const Multigraph& g, int cap = 20);

// Greedy elimination upper bound (best of min-degree and min-fill).
std::pair<int, TreeDecomposition> heuristic_ub(const Multigraph& g);

// Converts d into a nice tree decomposition of the same width, assigning
// each edge to a single IntroduceEdge node.
NiceTreeDecomposition to_nice(const Multigraph& g, const TreeDecomposition& d);

}  // namespace tcw

#endif
