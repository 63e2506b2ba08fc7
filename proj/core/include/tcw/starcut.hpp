#ifndef TCW_STARCUT_HPP
#define TCW_STARCUT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcw/decomposition.hpp"
#include "tcw/multigraph.hpp"
#include "tcw/treewidth.hpp"

namespace tcw {

/// Constrained star-cut decomposition instance (G, w, B, gamma).
struct StarCutInstance {
    Multigraph g;
    int w = 0;
    VertexSet b;
    std::map<Vertex, int> gamma;  // defined exactly on b
};

/// A star-shaped answer: center bag X_0 plus non-empty leaf bags X_1..X_l.
struct StarCutSolution {
    VertexSet center;
    std::vector<VertexSet> parts;

    // The literal star decomposition (node 0 = center) over inst.g.
    TreeCutDecomposition as_decomposition() const;
};

// I(S, G) = (G[S], w, boundary of S, edges of x leaving S).
StarCutInstance make_instance(const VertexSet& s, const Multigraph& g, int w);

// Dynamic program over the nice tree decomposition of inst.g. Returns a
// verified solution or nullopt when none exists.
std::optional<StarCutSolution> solve(const StarCutInstance& inst,
                                     const NiceTreeDecomposition& nice);

// Convenience: builds the tree decomposition internally.
std::optional<StarCutSolution> solve(const StarCutInstance& inst);

// Definition-level enumeration over all assignments V -> {0..l}, l <= w.
// Independent of the DP; capped at 10 vertices.
std::optional<StarCutSolution> brute_force(const StarCutInstance& inst);

// Violated conditions (empty = ok); includes the internal-width check on
// the reconstructed star.
std::vector<std::string> verify_solution(const StarCutInstance& inst,
                                         const StarCutSolution& sol);

}  // namespace tcw

#endif
