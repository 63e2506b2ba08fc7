#ifndef TCW_MULTIGRAPH_HPP
#define TCW_MULTIGRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcw {

using Vertex = int;
using VertexSet = std::set<Vertex>;

/// Loopless undirected multigraph. Parallel edges are stored as a
/// multiplicity count per unordered vertex pair. Values are immutable in
/// spirit: every structural operation returns a fresh graph.
class Multigraph {
public:
    Multigraph() = default;

    void add_vertex(Vertex v);
    // Adds `mult` parallel copies of {u,v}. Creates missing endpoints.
    void add_edge(Vertex u, Vertex v, int mult = 1);

    bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
    std::size_t vertex_count() const { return adj_.size(); }
    // Total edge multiplicity.
    long long edge_total() const;
    // Number of distinct adjacent pairs.
    std::size_t edge_pairs() const;

    int degree(Vertex v) const;           // multiplicity-weighted
    int multiplicity(Vertex u, Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    VertexSet vertices() const;
    // Edges as (u, v, mult) with u < v, sorted.
    std::vector<std::tuple<Vertex, Vertex, int>> edges() const;
    const std::map<Vertex, int>& adjacency(Vertex v) const;

    bool operator==(const Multigraph&) const = default;

private:
    // vertex -> (neighbor -> multiplicity); isolated vertices keep an
    // empty inner map.
    std::map<Vertex, std::map<Vertex, int>> adj_;
};

struct EdgeCut {
    long long size = 0;  // total multiplicity of the listed pairs
    std::vector<std::tuple<Vertex, Vertex, int>> edges;
};

// All edges with one endpoint in x and one in y, with multiplicity.
// Throws std::invalid_argument if x and y overlap.
EdgeCut delta(const Multigraph& g, const VertexSet& x, const VertexSet& y);

// delta(g, x, V \ x)
EdgeCut delta_out(const Multigraph& g, const VertexSet& x);

// Vertices of x with a neighbor outside x.
VertexSet boundary(const Multigraph& g, const VertexSet& x);

// Removes v (degree exactly 2, two distinct neighbors) and joins its
// neighbors by an edge, bumping multiplicity if the edge exists.
Multigraph dissolve(const Multigraph& g, Vertex v);

// Replaces the non-empty set z by the single vertex `fresh`; edges inside
// z are dropped, edges leaving z keep their multiplicity.
Multigraph identify(const Multigraph& g, const VertexSet& z, Vertex fresh);

Multigraph induced(const Multigraph& g, const VertexSet& s);

std::vector<VertexSet> components(const Multigraph& g);
bool is_connected(const Multigraph& g);

struct SmallCut {
    VertexSet side;  // side not containing the reference vertex
    int size = 0;    // 0, 1 or 2
};

// A minimal cut of size <= 2 of a connected graph with >= 2 vertices, or
// nullopt when g is 3-edge-connected. Flow-based; O(n * m).
std::optional<SmallCut> min_cut_le2(const Multigraph& g);

// Same, but only cuts separating two of the given terminals count; both
// sides of the returned cut are connected and the reported side contains a
// terminal other than the reference one. nullopt when every terminal pair
// is 3-edge-connected.
std::optional<SmallCut> min_cut_le2_between(const Multigraph& g, const VertexSet& terminals);

// Edge connectivity between s and t, capped at `cap` (early exit).
int edge_connectivity(const Multigraph& g, Vertex s, Vertex t, int cap);

bool is_3_edge_connected(const Multigraph& g);

}  // namespace tcw

#endif
