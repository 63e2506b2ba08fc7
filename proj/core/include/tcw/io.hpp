#ifndef TCW_IO_HPP
#define TCW_IO_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "tcw/decomposition.hpp"
#include "tcw/multigraph.hpp"
#include "tcw/starcut.hpp"

namespace tcw {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// `tcwgraph <n> <m>` followed by m sorted lines `<u> <v> <mult>` with
// 0 <= u < v < n. Rejects loops, duplicates and out-of-range ids.
Multigraph read_graph(std::istream& in);
Multigraph read_graph_file(const std::string& path);

// Writes the graph with vertex ids compacted (order-preserving) onto
// 0..n-1; returns the id mapping used.
std::map<Vertex, int> write_graph(std::ostream& out, const Multigraph& g);

// `tcwdecomp <nodes> <tedges>` followed by `b <node> <k> <v...>` lines and
// `t <a> <b>` lines, all sorted. `relabel` maps in-core vertex ids to file
// ids (use the map from write_graph); pass {} for identity.
void write_decomposition(std::ostream& out, const TreeCutDecomposition& d,
                         const std::map<Vertex, int>& relabel = {});
TreeCutDecomposition read_decomposition(std::istream& in);
TreeCutDecomposition read_decomposition_file(const std::string& path);

// `starcut <n> <m> <w> <|B|>` + graph lines + `g <v> <gamma>` lines.
StarCutInstance read_starcut_instance(std::istream& in);
StarCutInstance read_starcut_instance_file(const std::string& path);
void write_starcut_instance(std::ostream& out, const StarCutInstance& inst);

// Star solution in decomposition format, node 0 = center.
void write_starcut_solution(std::ostream& out, const StarCutSolution& sol,
                            const std::map<Vertex, int>& relabel = {});

// Human inspection only; layout is not normative.
void write_dot(std::ostream& out, const Multigraph& g, const TreeCutDecomposition& d);

}  // namespace tcw

#endif
