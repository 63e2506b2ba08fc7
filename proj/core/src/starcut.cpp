#include "tcw/starcut.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "tcw/decomposition.hpp"

namespace tcw {

namespace {

// One DP quadruple (phi, a, alpha, beta) plus the part-occupancy record and
// provenance for witness reconstruction. alpha/beta are nibble-packed per
// part index 1..w (hence the w <= 15 cap); phi rides in a short string so
// bags of up to 15 vertices stay inside the SSO buffer.
struct State {
    std::string phi;                    // label per bag vertex, bag in sorted order
    std::uint64_t alpha = 0, beta = 0;  // 4-bit entries, index 0 unused
    std::uint32_t nonempty = 0;         // parts intersecting Z_t

    int child = -1, child2 = -1;  // state ids in the child tables
    std::uint8_t a = 0;           // |X_0 ∩ Z_t|
    std::uint8_t label = 0;       // branch taken at an Introduce node
    bool dead = false;            // dominated by a cheaper sibling state
};

// Back-pointer triple kept after a table is no longer a DP frontier.
struct Slim {
    int child = -1, child2 = -1;
    std::uint8_t label = 0;
};

int nib(std::uint64_t x, int i) { return static_cast<int>((x >> (4 * i)) & 0xF); }

void set_nib(std::uint64_t& x, int i, int v) {
    x = (x & ~(0xFULL << (4 * i))) | (static_cast<std::uint64_t>(v) << (4 * i));
}

// Group key: everything the root test and the transition shapes depend on.
// alpha and beta stay outside: within a group they are pure costs, and a
// state whose (alpha, beta) is componentwise >= another's can never reach
// an outcome its dominator cannot (all updates and prunes are monotone).
std::string group_key(const State& s) {
    std::string k = s.phi;
    k.push_back(static_cast<char>(s.a));
    for (int i = 0; i < 4; ++i) k.push_back(static_cast<char>(s.nonempty >> (8 * i)));
    return k;
}

bool cost_le(const State& a, const State& b) {
    for (int i = 1; i < 16; ++i)
        if (nib(a.alpha, i) > nib(b.alpha, i) || nib(a.beta, i) > nib(b.beta, i)) return false;
    return true;
}

int bag_index(const VertexSet& bag, Vertex v) {
    return static_cast<int>(std::distance(bag.begin(), bag.find(v)));
}

}  // namespace

TreeCutDecomposition StarCutSolution::as_decomposition() const {
    TreeCutDecomposition d;
    d.bags.push_back(center);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        d.bags.push_back(parts[i]);
        d.tree_edges.emplace_back(0, static_cast<int>(i) + 1);
    }
    return d;
}

StarCutInstance make_instance(const VertexSet& s, const Multigraph& g, int w) {
    StarCutInstance inst;
    inst.g = induced(g, s);
    inst.w = w;
    for (Vertex x : s) {
        int out = 0;
        for (const auto& [nb, mult] : g.adjacency(x))
            if (!s.count(nb)) out += mult;
        if (out > 0) {
            inst.b.insert(x);
            inst.gamma[x] = out;
        }
    }
    return inst;
}

std::vector<std::string> verify_solution(const StarCutInstance& inst,
                                         const StarCutSolution& sol) {
    std::vector<std::string> errs;
    const int w = inst.w;
    const std::size_t l = sol.parts.size();
    if (l < 1) errs.push_back("no leaf parts");

    VertexSet all = sol.center;
    std::size_t total = sol.center.size();
    for (const auto& p : sol.parts) {
        if (p.empty()) errs.push_back("empty leaf part");
        all.insert(p.begin(), p.end());
        total += p.size();
    }
    if (total != all.size()) errs.push_back("parts are not pairwise disjoint");
    if (all != inst.g.vertices()) errs.push_back("parts do not cover the vertex set");

    int nonempty_bags = sol.center.empty() ? 0 : 1;
    for (const auto& p : sol.parts)
        if (!p.empty()) ++nonempty_bags;
    if (nonempty_bags < 2) errs.push_back("trivial decomposition (fewer than two non-empty bags)");

    if (static_cast<int>(sol.center.size() + l) > w)
        errs.push_back("|center| + leaf count exceeds w");
    for (std::size_t i = 0; i < l; ++i) {
        long long weight = 0;
        for (Vertex v : sol.parts[i])
            if (inst.b.count(v)) weight += inst.gamma.at(v);
        if (weight > w) errs.push_back("leaf " + std::to_string(i + 1) + " boundary weight > w");
        if (delta_out(inst.g, sol.parts[i]).size > w)
            errs.push_back("leaf " + std::to_string(i + 1) + " adhesion > w");
    }
    if (errs.empty()) {
        auto rep = width(inst.g, sol.as_decomposition());
        if (rep.internal_width > w) errs.push_back("internal width of the star exceeds w");
    }
    return errs;
}

namespace {

// One DP sweep with part labels restricted to 0..maxl. Complete for
// solutions with at most maxl leaves; solve() deepens maxl from 1 to w.
std::optional<StarCutSolution> solve_capped(const StarCutInstance& inst,
                                            const NiceTreeDecomposition& nice, int maxl) {
    const int w = inst.w;
    const auto order = nice.postorder();
    std::vector<std::vector<State>> tables(nice.nodes.size());
    std::vector<std::vector<Slim>> back(nice.nodes.size());
    // Once both children of a node are consumed their full states are dead
    // weight; keep only the back-pointers so memory tracks the frontier.
    auto retire = [&](int c) {
        back[c].reserve(tables[c].size());
        for (const State& s : tables[c]) back[c].push_back({s.child, s.child2, s.label});
        tables[c].clear();
        tables[c].shrink_to_fit();
    };

    using Groups = std::unordered_map<std::string, std::vector<int>>;
    auto push = [&](std::vector<State>& tab, Groups& seen, State s) {
        // prune: a and the part count only ever grow
        if (s.a + std::popcount(s.nonempty) > w) return;
        auto& front = seen[group_key(s)];
        for (int idx : front)
            if (cost_le(tab[idx], s)) return;  // dominated, drop
        std::erase_if(front, [&](int idx) {
            if (!cost_le(s, tab[idx])) return false;
            tab[idx].dead = true;
            return true;
        });
        front.push_back(static_cast<int>(tab.size()));
        tab.push_back(std::move(s));
    };

    for (int t : order) {
        const NiceNode& nd = nice.nodes[t];
        auto& tab = tables[t];
        Groups seen;
        switch (nd.kind) {
            case NiceKind::Leaf: {
                tab.push_back(State{});
                break;
            }
            case NiceKind::Introduce: {
                const Vertex v = nd.vertex;
                const int pos = bag_index(nd.bag, v);
                const bool in_b = inst.b.count(v) > 0;
                const int gv = in_b ? inst.gamma.at(v) : 0;
                const auto& ctab = tables[nd.children[0]];
                for (std::size_t ci = 0; ci < ctab.size(); ++ci) {
                    if (ctab[ci].dead) continue;
                    for (int lab = 0; lab <= maxl; ++lab) {
                        State s = ctab[ci];
                        s.phi.insert(static_cast<std::size_t>(pos), 1, static_cast<char>(lab));
                        if (lab == 0) {
                            if (s.a + 1 > w) continue;
                            ++s.a;
                        } else {
                            if (in_b) {
                                const int na = nib(s.alpha, lab) + gv;
                                if (na > w) continue;
                                set_nib(s.alpha, lab, na);
                            }
                            s.nonempty |= 1u << lab;
                        }
                        s.child = static_cast<int>(ci);
                        s.child2 = -1;
                        s.label = static_cast<std::uint8_t>(lab);
                        push(tab, seen, std::move(s));
                    }
                }
                break;
            }
            case NiceKind::IntroduceEdge: {
                const int pu = bag_index(nd.bag, nd.edge_u);
                const int pv = bag_index(nd.bag, nd.edge_v);
                const int c = nd.edge_mult;
                const auto& ctab = tables[nd.children[0]];
                for (std::size_t ci = 0; ci < ctab.size(); ++ci) {
                    if (ctab[ci].dead) continue;
                    State s = ctab[ci];
                    const int lu = s.phi[pu], lv = s.phi[pv];
                    if (lu != lv) {
                        bool ok = true;
                        for (int lab : {lu, lv}) {
                            if (lab == 0) continue;
                            const int nb = nib(s.beta, lab) + c;
                            if (nb > w) {
                                ok = false;
                                break;
                            }
                            set_nib(s.beta, lab, nb);
                        }
                        if (!ok) continue;
                    }
                    s.child = static_cast<int>(ci);
                    s.child2 = -1;
                    push(tab, seen, std::move(s));
                }
                break;
            }
            case NiceKind::Forget: {
                const int pos = bag_index(nice.nodes[nd.children[0]].bag, nd.vertex);
                const auto& ctab = tables[nd.children[0]];
                for (std::size_t ci = 0; ci < ctab.size(); ++ci) {
                    if (ctab[ci].dead) continue;
                    State s = ctab[ci];
                    s.phi.erase(static_cast<std::size_t>(pos), 1);
                    s.child = static_cast<int>(ci);
                    s.child2 = -1;
                    push(tab, seen, std::move(s));
                }
                break;
            }
            case NiceKind::Join: {
                // shared counts over the common bag, per phi
                std::vector<Vertex> bagv(nd.bag.begin(), nd.bag.end());
                std::map<std::string, std::vector<int>> by_phi;
                const auto& lt = tables[nd.children[0]];
                const auto& rt = tables[nd.children[1]];
                for (std::size_t i = 0; i < lt.size(); ++i)
                    if (!lt[i].dead) by_phi[lt[i].phi].push_back((int)i);
                for (std::size_t j = 0; j < rt.size(); ++j) {
                    if (rt[j].dead) continue;
                    auto it = by_phi.find(rt[j].phi);
                    if (it == by_phi.end()) continue;
                    const State& r = rt[j];
                    int shared0 = 0;
                    std::vector<int> shared_gamma(w + 1, 0);
                    for (std::size_t k = 0; k < bagv.size(); ++k) {
                        if (r.phi[k] == 0)
                            ++shared0;
                        else if (inst.b.count(bagv[k]))
                            shared_gamma[r.phi[k]] += inst.gamma.at(bagv[k]);
                    }
                    for (int i : it->second) {
                        const State& l = lt[i];
                        State s;
                        s.phi = r.phi;
                        const int na = l.a + r.a - shared0;
                        if (na > w) continue;
                        s.a = static_cast<std::uint8_t>(na);
                        bool ok = true;
                        for (int p = 1; p <= maxl; ++p) {
                            const int al = nib(l.alpha, p) + nib(r.alpha, p) - shared_gamma[p];
                            const int be = nib(l.beta, p) + nib(r.beta, p);
                            if (al > w || be > w) {
                                ok = false;
                                break;
                            }
                            set_nib(s.alpha, p, al);
                            set_nib(s.beta, p, be);
                        }
                        if (!ok) continue;
                        s.nonempty = l.nonempty | r.nonempty;
                        s.child = i;
                        s.child2 = j;
                        push(tab, seen, std::move(s));
                    }
                }
                break;
            }
        }
        for (int c : nd.children) retire(c);
        if (tab.empty()) return std::nullopt;
    }

    // root acceptance: at least one part, a + parts <= w, and non-triviality
    const auto& root_tab = tables[nice.root];
    int accept = -1;
    for (std::size_t i = 0; i < root_tab.size(); ++i) {
        const State& s = root_tab[i];
        if (s.dead) continue;
        const int k = std::popcount(s.nonempty);
        if (k >= 1 && s.a + k <= w && (k >= 2 || s.a >= 1)) {
            accept = static_cast<int>(i);
            break;
        }
    }
    if (accept < 0) return std::nullopt;
    retire(nice.root);

    // walk the back-pointers to recover the vertex labelling
    std::map<Vertex, int> label_of;
    std::vector<std::pair<int, int>> stack{{nice.root, accept}};
    while (!stack.empty()) {
        auto [t, si] = stack.back();
        stack.pop_back();
        const NiceNode& nd = nice.nodes[t];
        const Slim& s = back[t][si];
        switch (nd.kind) {
            case NiceKind::Leaf:
                break;
            case NiceKind::Introduce:
                label_of[nd.vertex] = s.label;
                stack.push_back({nd.children[0], s.child});
                break;
            case NiceKind::Forget:
            case NiceKind::IntroduceEdge:
                stack.push_back({nd.children[0], s.child});
                break;
            case NiceKind::Join:
                stack.push_back({nd.children[0], s.child});
                stack.push_back({nd.children[1], s.child2});
                break;
        }
    }

    StarCutSolution sol;
    std::map<int, VertexSet> groups;
    for (const auto& [v, lab] : label_of) {
        if (lab == 0)
            sol.center.insert(v);
        else
            groups[lab].insert(v);
    }
    for (auto& [lab, vs] : groups) sol.parts.push_back(std::move(vs));

    auto errs = verify_solution(inst, sol);
    if (!errs.empty())
        throw std::logic_error("solve: reconstructed solution failed verification: " + errs[0]);
    return sol;
}

}  // namespace

std::optional<StarCutSolution> solve(const StarCutInstance& inst,
                                     const NiceTreeDecomposition& nice) {
    {
        auto errs = validate(inst.g, nice);
        if (!errs.empty())
            throw std::invalid_argument("solve: invalid nice tree decomposition: " + errs[0]);
    }
    const int w = inst.w;
    // A solvable instance has gamma(x) <= w everywhere on B.
    for (const auto& [x, gx] : inst.gamma)
        if (gx > w) return std::nullopt;
    if (w < 1) return std::nullopt;
    if (w > 15) throw std::invalid_argument("solve: w larger than 15 is unsupported");

    // Deepen the leaf-count cap: a solution with l leaves needs only labels
    // 0..l, and small answers are the common case, so the cheap sweeps come
    // first. NO is only certain after the full sweep at l = w.
    for (int maxl = 1; maxl <= w; ++maxl)
        if (auto sol = solve_capped(inst, nice, maxl)) return sol;
    return std::nullopt;
}

std::optional<StarCutSolution> solve(const StarCutInstance& inst) {
    TreeDecomposition td = inst.g.vertex_count() <= 20 ? exact_treewidth(inst.g).second
                                                      : heuristic_ub(inst.g).second;
    return solve(inst, to_nice(inst.g, td));
}

std::optional<StarCutSolution> brute_force(const StarCutInstance& inst) {
    const auto vs = [&] {
        std::vector<Vertex> out;
        for (Vertex v : inst.g.vertices()) out.push_back(v);
        return out;
    }();
    const int n = static_cast<int>(vs.size());
    if (n > 10) throw std::invalid_argument("brute_force: more than 10 vertices");
    const int w = inst.w;
    for (const auto& [x, gx] : inst.gamma)
        if (gx > w) return std::nullopt;

    for (int l = 1; l <= w; ++l) {
        std::vector<int> assign(n, 0);
        while (true) {
            StarCutSolution sol;
            sol.parts.assign(l, {});
            for (int i = 0; i < n; ++i) {
                if (assign[i] == 0)
                    sol.center.insert(vs[i]);
                else
                    sol.parts[assign[i] - 1].insert(vs[i]);
            }
            bool parts_ok = true;
            for (const auto& p : sol.parts)
                if (p.empty()) parts_ok = false;
            if (parts_ok && verify_solution(inst, sol).empty()) return sol;

            int i = n - 1;
            while (i >= 0 && assign[i] == l) assign[i--] = 0;
            if (i < 0) break;
            ++assign[i];
        }
    }
    return std::nullopt;
}

}  // namespace tcw
