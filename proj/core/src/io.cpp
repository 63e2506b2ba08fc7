#include "tcw/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tcw {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

long long to_int(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
}

bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return true;
    }
    return false;
}

}  // namespace

Multigraph read_graph(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_line(in, line, lineno)) throw ParseError(1, "empty input");
    auto head = tokens(line);
    if (head.size() != 3 || head[0] != "tcwgraph")
        throw ParseError(lineno, "expected header 'tcwgraph <n> <m>'");
    const long long n = to_int(head[1], lineno);
    const long long m = to_int(head[2], lineno);
    if (n < 0 || m < 0) throw ParseError(lineno, "negative counts");

    Multigraph g;
    for (long long v = 0; v < n; ++v) g.add_vertex(static_cast<Vertex>(v));
    std::pair<long long, long long> prev{-1, -1};
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line, lineno)) throw ParseError(lineno + 1, "missing edge line");
        auto tok = tokens(line);
        if (tok.size() != 3) throw ParseError(lineno, "expected '<u> <v> <mult>'");
        const long long u = to_int(tok[0], lineno), v = to_int(tok[1], lineno),
                        mult = to_int(tok[2], lineno);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "loop edge");
        if (u > v) throw ParseError(lineno, "edge must satisfy u < v");
        if (mult < 1) throw ParseError(lineno, "multiplicity must be >= 1");
        if (std::make_pair(u, v) <= prev)
            throw ParseError(lineno, "edge lines must be strictly sorted (no duplicates)");
        prev = {u, v};
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<int>(mult));
    }
    return g;
}

Multigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

std::map<Vertex, int> write_graph(std::ostream& out, const Multigraph& g) {
    std::map<Vertex, int> relabel;
    for (Vertex v : g.vertices()) relabel.emplace(v, static_cast<int>(relabel.size()));
    out << "tcwgraph " << g.vertex_count() << ' ' << g.edge_pairs() << '\n';
    std::vector<std::tuple<int, int, int>> lines;
    for (const auto& [u, v, m] : g.edges()) {
        int a = relabel[u], b = relabel[v];
        lines.emplace_back(std::min(a, b), std::max(a, b), m);
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b, m] : lines) out << a << ' ' << b << ' ' << m << '\n';
    return relabel;
}

void write_decomposition(std::ostream& out, const TreeCutDecomposition& d,
                         const std::map<Vertex, int>& relabel) {
    out << "tcwdecomp " << d.node_count() << ' ' << d.tree_edges.size() << '\n';
    for (std::size_t t = 0; t < d.node_count(); ++t) {
        std::vector<int> ids;
        for (Vertex v : d.bags[t])
            ids.push_back(relabel.empty() ? v : relabel.at(v));
        std::sort(ids.begin(), ids.end());
        out << "b " << t << ' ' << ids.size();
        for (int v : ids) out << ' ' << v;
        out << '\n';
    }
    auto edges = d.tree_edges;
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) out << "t " << a << ' ' << b << '\n';
}

TreeCutDecomposition read_decomposition(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_line(in, line, lineno)) throw ParseError(1, "empty input");
    auto head = tokens(line);
    if (head.size() != 3 || head[0] != "tcwdecomp")
        throw ParseError(lineno, "expected header 'tcwdecomp <nodes> <tedges>'");
    const long long nodes = to_int(head[1], lineno);
    const long long tedges = to_int(head[2], lineno);
    if (nodes < 0 || tedges < 0) throw ParseError(lineno, "negative counts");

    TreeCutDecomposition d;
    d.bags.resize(nodes);
    std::vector<char> seen(nodes, 0);
    for (long long i = 0; i < nodes; ++i) {
        if (!next_line(in, line, lineno)) throw ParseError(lineno + 1, "missing bag line");
        auto tok = tokens(line);
        if (tok.size() < 3 || tok[0] != "b")
            throw ParseError(lineno, "expected 'b <node> <k> <v...>'");
        const long long id = to_int(tok[1], lineno);
        if (id < 0 || id >= nodes) throw ParseError(lineno, "node id out of range");
        if (seen[id]) throw ParseError(lineno, "duplicate bag line for node");
        seen[id] = 1;
        const long long k = to_int(tok[2], lineno);
        if (static_cast<long long>(tok.size()) != 3 + k)
            throw ParseError(lineno, "bag size does not match vertex count");
        for (long long j = 0; j < k; ++j) {
            const long long v = to_int(tok[3 + j], lineno);
            if (v < 0) throw ParseError(lineno, "negative vertex id");
            if (!d.bags[id].insert(static_cast<Vertex>(v)).second)
                throw ParseError(lineno, "duplicate vertex in bag");
        }
    }
    for (long long i = 0; i < tedges; ++i) {
        if (!next_line(in, line, lineno)) throw ParseError(lineno + 1, "missing tree edge line");
        auto tok = tokens(line);
        if (tok.size() != 3 || tok[0] != "t") throw ParseError(lineno, "expected 't <a> <b>'");
        const long long a = to_int(tok[1], lineno), b = to_int(tok[2], lineno);
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b)
            throw ParseError(lineno, "tree edge out of range");
        d.tree_edges.emplace_back(static_cast<int>(std::min(a, b)),
                                  static_cast<int>(std::max(a, b)));
    }
    return d;
}

TreeCutDecomposition read_decomposition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_decomposition(in);
}

StarCutInstance read_starcut_instance(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_line(in, line, lineno)) throw ParseError(1, "empty input");
    auto head = tokens(line);
    if (head.size() != 5 || head[0] != "starcut")
        throw ParseError(lineno, "expected header 'starcut <n> <m> <w> <|B|>'");
    const long long n = to_int(head[1], lineno), m = to_int(head[2], lineno),
                    w = to_int(head[3], lineno), nb = to_int(head[4], lineno);
    if (n < 0 || m < 0 || w < 0 || nb < 0) throw ParseError(lineno, "negative counts");

    StarCutInstance inst;
    inst.w = static_cast<int>(w);
    for (long long v = 0; v < n; ++v) inst.g.add_vertex(static_cast<Vertex>(v));
    std::pair<long long, long long> prev{-1, -1};
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line, lineno)) throw ParseError(lineno + 1, "missing edge line");
        auto tok = tokens(line);
        if (tok.size() != 3) throw ParseError(lineno, "expected '<u> <v> <mult>'");
        const long long u = to_int(tok[0], lineno), v = to_int(tok[1], lineno),
                        mult = to_int(tok[2], lineno);
        if (u < 0 || v >= n || u >= v || mult < 1)
            throw ParseError(lineno, "bad edge line");
        if (std::make_pair(u, v) <= prev) throw ParseError(lineno, "edge lines must be sorted");
        prev = {u, v};
        inst.g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<int>(mult));
    }
    for (long long i = 0; i < nb; ++i) {
        if (!next_line(in, line, lineno)) throw ParseError(lineno + 1, "missing gamma line");
        auto tok = tokens(line);
        if (tok.size() != 3 || tok[0] != "g") throw ParseError(lineno, "expected 'g <v> <gamma>'");
        const long long v = to_int(tok[1], lineno), gv = to_int(tok[2], lineno);
        if (v < 0 || v >= n || gv < 0) throw ParseError(lineno, "bad gamma line");
        if (!inst.b.insert(static_cast<Vertex>(v)).second)
            throw ParseError(lineno, "duplicate gamma line for vertex");
        inst.gamma[static_cast<Vertex>(v)] = static_cast<int>(gv);
    }
    return inst;
}

StarCutInstance read_starcut_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_starcut_instance(in);
}

void write_starcut_instance(std::ostream& out, const StarCutInstance& inst) {
    out << "starcut " << inst.g.vertex_count() << ' ' << inst.g.edge_pairs() << ' ' << inst.w
        << ' ' << inst.b.size() << '\n';
    for (const auto& [u, v, m] : inst.g.edges()) out << u << ' ' << v << ' ' << m << '\n';
    for (Vertex v : inst.b) out << "g " << v << ' ' << inst.gamma.at(v) << '\n';
}

void write_starcut_solution(std::ostream& out, const StarCutSolution& sol,
                            const std::map<Vertex, int>& relabel) {
    write_decomposition(out, sol.as_decomposition(), relabel);
}

void write_dot(std::ostream& out, const Multigraph& g, const TreeCutDecomposition& d) {
    out << "graph tcw {\n  node [shape=box];\n";
    for (std::size_t t = 0; t < d.node_count(); ++t) {
        out << "  n" << t << " [label=\"" << t << ": {";
        bool first = true;
        for (Vertex v : d.bags[t]) {
            if (!first) out << ',';
            out << v;
            first = false;
        }
        out << "}\"];\n";
    }
    for (const auto& [a, b] : d.tree_edges) {
        auto cut = adhesion(g, d, {a, b});
        out << "  n" << a << " -- n" << b << " [label=\"" << cut.size << "\"];\n";
    }
    out << "}\n";
}

}  // namespace tcw
