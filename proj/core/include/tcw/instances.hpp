#ifndef TCW_INSTANCES_HPP
#define TCW_INSTANCES_HPP

#include <vector>

#include "tcw/decomposition.hpp"
#include "tcw/multigraph.hpp"

namespace tcw {

/// H_w: w disjoint w-cliques Q_1..Q_w, vertex (i,j) = id (i-1)*w + (j-1),
/// plus a matching edge between (i,j) and (j,i) for i < j. Treewidth
/// grows quadratically in its tree-cut width.
Multigraph gen_hw(int w);

// Star decomposition of gen_hw(w): empty center, one leaf per clique.
TreeCutDecomposition hw_witness(int w);

/// Pairwise-touching connected vertex sets over a host graph.
struct Bramble {
    std::vector<VertexSet> sets;
};

// B(i,Z) = {(i,j),(j,i) : j in Z} over gen_hw(w), for all i in [w] and
// Z subset of [w]\{i} with |Z| = w/2. Requires even w.
Bramble gen_bramble(int w);

bool is_bramble(const Multigraph& g, const Bramble& br);

// Exact minimum hitting set size by branch and bound; |V(g)| <= cap.
int bramble_order(const Multigraph& g, const Bramble& br, int cap = 20);

/// Bisection hardness instance: original vertices V, a hub clique-like set
/// Q of size w-2, and a size-(w+1) connector set per pair of Q.
struct BisectionInstance {
    Multigraph g;
    int w = 0;
    VertexSet v_part, q;
    std::vector<VertexSet> c_sets;  // one per unordered pair of q, pair-sorted
};

// Builds (G', w) with w = n^3/2 + k from an even-order graph. Each
// original vertex attaches to the n^2 lowest-id members of Q. Throws on
// odd n or when n^2 > w - 2.
BisectionInstance gen_bisection_instance(const Multigraph& g, int k);

// The three-heavy-nodes star witness for a bipartition (V1, V2) of the
// original vertices: center Q, leaves V1, V2 and one singleton leaf per
// connector vertex.
TreeCutDecomposition bisection_witness(const BisectionInstance& inst, const VertexSet& v1,
                                       const VertexSet& v2);

// Seeded multigraph on vertices 0..n-1: m pair draws (loops skipped),
// multiplicities in [1, max_mult]. Deterministic across platforms.
Multigraph gen_random(int n, int m, int max_mult, unsigned seed);

}  // namespace tcw

#endif
