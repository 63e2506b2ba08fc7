#ifndef TCW_EXACT_HPP
#define TCW_EXACT_HPP

#include "tcw/decomposition.hpp"
#include "tcw/multigraph.hpp"

namespace tcw {

struct OracleResult {
    int tcw = 0;
    TreeCutDecomposition witness;
    long long partitions_tried = 0;
    long long trees_tried = 0;
};

// Exhaustive tree-cut width for small graphs: enumerates bag partitions of
// V(g) and, per partition, searches all tree arrangements (with empty hub
// nodes) by dynamic programming over part subsets, deepening the width
// bound until a decomposition exists. Ground truth for everything else.
// Throws std::invalid_argument above the cap.
OracleResult exact_tcw(const Multigraph& g, int cap = 8);

// Decision wrapper: tcw(g) <= w, without the full deepening sweep.
bool exact_tcw_decision(const Multigraph& g, int w, int cap = 8);

}  // namespace tcw

#endif
