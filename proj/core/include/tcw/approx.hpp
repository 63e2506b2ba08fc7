#ifndef TCW_APPROX_HPP
#define TCW_APPROX_HPP

#include "tcw/decomposition.hpp"
#include "tcw/multigraph.hpp"
#include "tcw/starcut.hpp"

namespace tcw {

/// Why a TooWide verdict is sound: which failed test certifies tcw > w.
enum class TooWideCertificate {
    TreewidthExceeded,   // exact treewidth of a large-leaf subgraph > 2w^2+3w
    StarCutInfeasible,   // a mandatory star-cut instance has no solution
    TinyWidthCore,       // w <= 1 and the degree-reduced core is non-empty
};

struct ApproxOutcome {
    bool too_wide = false;

    // when !too_wide: a decomposition of verified width <= 2w
    TreeCutDecomposition decomposition;
    WidthReport report;

    // when too_wide
    TooWideCertificate certificate = TooWideCertificate::TinyWidthCore;
    VertexSet infeasible_leaf;  // bag behind a StarCutInfeasible verdict
};

// 2-approximation: returns a decomposition of width <= 2w, or certifies
// tcw(g) > w. Deterministic.
ApproxOutcome approx_tcw(const Multigraph& g, int w);

// One refinement step: replace the large leaf by the star of sol (the
// center inherits the leaf's tree edge). Validates sol first.
TreeCutDecomposition refine(const Multigraph& g, const TreeCutDecomposition& d, int leaf,
                            const StarCutSolution& sol);

}  // namespace tcw

#endif
