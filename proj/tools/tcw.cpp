// Command-line front end: graph generators, the 2-approximation, the exact
// oracle, verifiers and the star-cut solver over the text formats.
//
// Exit codes: 0 success / YES, 1 NO / TooWide, 2 usage or validation error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tcw/approx.hpp"
#include "tcw/exact.hpp"
#include "tcw/instances.hpp"
#include "tcw/io.hpp"
#include "tcw/reduce.hpp"
#include "tcw/starcut.hpp"
#include "tcw/treewidth.hpp"

namespace {

tcw::Multigraph load_graph(const std::string& path) {
    if (path == "-") return tcw::read_graph(std::cin);
    return tcw::read_graph_file(path);
}

tcw::TreeCutDecomposition load_decomposition(const std::string& path) {
    if (path == "-") return tcw::read_decomposition(std::cin);
    return tcw::read_decomposition_file(path);
}

// run `fn(stream)` against the file or standard output
template <typename F>
void with_output(const std::string& path, F&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    fn(out);
}

const char* certificate_name(tcw::TooWideCertificate c) {
    switch (c) {
        case tcw::TooWideCertificate::TreewidthExceeded: return "treewidth-exceeded";
        case tcw::TooWideCertificate::StarCutInfeasible: return "starcut-infeasible";
        case tcw::TooWideCertificate::TinyWidthCore: return "tiny-width-core";
    }
    return "?";
}

int cmd_approx(const std::string& graph, int w, const std::string& out_path,
               const std::string& dot_path) {
    auto g = load_graph(graph);
    auto outcome = tcw::approx_tcw(g, w);
    if (outcome.too_wide) {
        std::cout << "TOOWIDE " << certificate_name(outcome.certificate);
        if (outcome.certificate == tcw::TooWideCertificate::StarCutInfeasible) {
            for (tcw::Vertex v : outcome.infeasible_leaf) std::cout << ' ' << v;
        }
        std::cout << '\n';
        return 1;
    }
    std::cout << "WIDTH " << outcome.report.width << '\n';
    if (!out_path.empty())
        with_output(out_path,
                    [&](std::ostream& os) { tcw::write_decomposition(os, outcome.decomposition); });
    if (!dot_path.empty())
        with_output(dot_path,
                    [&](std::ostream& os) { tcw::write_dot(os, g, outcome.decomposition); });
    return 0;
}

int cmd_exact(const std::string& graph, int cap, const std::string& out_path) {
    auto g = load_graph(graph);
    auto res = tcw::exact_tcw(g, cap);
    std::cout << "TCW " << res.tcw << '\n';
    with_output(out_path, [&](std::ostream& os) { tcw::write_decomposition(os, res.witness); });
    return 0;
}

int cmd_verify(const std::string& graph, const std::string& decomp) {
    auto g = load_graph(graph);
    auto d = load_decomposition(decomp);
    auto errs = tcw::validate(g, d);
    if (!errs.empty()) {
        for (const auto& e : errs) std::cerr << "invalid: " << e << '\n';
        return 2;
    }
    auto rep = tcw::width(g, d);
    std::cout << "width " << rep.width << '\n'
              << "internal-width " << rep.internal_width << '\n'
              << "max-adhesion " << rep.max_adhesion << '\n'
              << "widest-torso-node " << rep.witness_node << '\n'
              << "widest-adhesion-edge " << rep.witness_edge.first << ' '
              << rep.witness_edge.second << '\n';
    return 0;
}

int cmd_starcut(const std::string& path) {
    tcw::StarCutInstance inst =
        path == "-" ? tcw::read_starcut_instance(std::cin) : tcw::read_starcut_instance_file(path);
    auto sol = tcw::solve(inst);
    if (!sol) {
        std::cout << "NO\n";
        return 1;
    }
    std::cout << "YES\n";
    tcw::write_starcut_solution(std::cout, *sol);
    return 0;
}

int cmd_tw(const std::string& graph) {
    auto g = load_graph(graph);
    if (g.vertex_count() <= 20) {
        std::cout << "TW " << tcw::exact_treewidth(g).first << " EXACT\n";
    } else {
        std::cout << "TW " << tcw::heuristic_ub(g).first << " UB\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree-cut width toolkit"};
    app.require_subcommand(1);

    std::string graph_path, decomp_path, out_path, dot_path;
    int w = 0, cap = 8, k = 0, n = 0, m = 0, max_mult = 1;
    unsigned seed = 0;

    auto* approx = app.add_subcommand("approx", "2-approximate tree-cut width");
    approx->add_option("--w", w, "width bound")->required();
    approx->add_option("graph", graph_path, "tcwgraph file or -")->required();
    approx->add_option("--out", out_path, "write the decomposition here");
    approx->add_option("--dot", dot_path, "write a DOT rendering here");

    auto* exact = app.add_subcommand("exact", "exhaustive tree-cut width");
    exact->add_option("graph", graph_path)->required();
    exact->add_option("--cap", cap, "vertex cap");
    exact->add_option("--out", out_path, "witness file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "validate a decomposition and report widths");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("decomp", decomp_path)->required();

    auto* starcut = app.add_subcommand("starcut", "solve a star-cut instance");
    starcut->add_option("instance", graph_path)->required();

    auto* tw = app.add_subcommand("tw", "treewidth (exact up to 20 vertices, else an upper bound)");
    tw->add_option("graph", graph_path)->required();

    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto* gen_hw_cmd = gen->add_subcommand("hw", "the clique-matching family H_w");
    gen_hw_cmd->add_option("--w", w)->required();
    gen_hw_cmd->add_option("--out", out_path);
    auto* gen_bis = gen->add_subcommand("bisection", "min-bisection hardness instance");
    gen_bis->add_option("--graph", graph_path)->required();
    gen_bis->add_option("--k", k)->required();
    gen_bis->add_option("--out", out_path);
    auto* gen_rand = gen->add_subcommand("random", "seeded random multigraph");
    gen_rand->add_option("--n", n)->required();
    gen_rand->add_option("--m", m)->required();
    gen_rand->add_option("--max-mult", max_mult);
    gen_rand->add_option("--seed", seed);
    gen_rand->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(approx)) return cmd_approx(graph_path, w, out_path, dot_path);
        if (app.got_subcommand(exact)) return cmd_exact(graph_path, cap, out_path);
        if (app.got_subcommand(verify)) return cmd_verify(graph_path, decomp_path);
        if (app.got_subcommand(starcut)) return cmd_starcut(graph_path);
        if (app.got_subcommand(tw)) return cmd_tw(graph_path);
        if (app.got_subcommand(gen)) {
            tcw::Multigraph g;
            if (gen->got_subcommand(gen_hw_cmd)) {
                g = tcw::gen_hw(w);
            } else if (gen->got_subcommand(gen_bis)) {
                g = tcw::gen_bisection_instance(load_graph(graph_path), k).g;
            } else {
                g = tcw::gen_random(n, m, max_mult, seed);
            }
            with_output(out_path, [&](std::ostream& os) { tcw::write_graph(os, g); });
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
