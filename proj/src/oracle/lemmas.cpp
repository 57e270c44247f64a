#include "locsep/lemmas.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "locsep/cycles.hpp"
#include "locsep/decomposition.hpp"
#include "locsep/error.hpp"
#include "locsep/explorer.hpp"
#include "locsep/gf2.hpp"
#include "locsep/separators.hpp"
#include "locsep/surgery.hpp"

namespace locsep::lemmas {

namespace {

using NamePair = std::pair<std::string, std::string>;

std::string pair_str(const MultiGraph& g, int a, int b) { return "{" + g.name(a) + "," + g.name(b) + "}"; }

// Engine errors become failures of the check; cap overruns still propagate.
template <class F>
OracleReport run(const std::string& check, const std::string& instance, F&& body) {
    OracleReport rep(check, instance);
    try {
        body(rep);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::cap_exceeded) throw;
        rep.fail(std::string("engine error: ") + e.what());
    }
    return rep;
}

// Pairs v < w at distance <= r/2, the domain of Expl(v,w).
std::vector<std::pair<int, int>> close_pairs(const MultiGraph& g, Scale r) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const std::vector<long> d = distances_from(g, v);
        for (int w = v + 1; w < g.num_vertices(); ++w)
            if (d[w] != kUnreachable && r.admits(2 * d[w])) out.emplace_back(v, w);
    }
    return out;
}

bool has_loop_at(const MultiGraph& g, int v) {
    return std::any_of(g.incident(v).begin(), g.incident(v).end(), [&](int pos) { return g.edge(pos).is_loop(); });
}

// cut_2separator refuses a separator with a loop at either end.
bool cuttable(const MultiGraph& g, const LocalSeparator& s) { return !has_loop_at(g, s.a) && !has_loop_at(g, s.b); }

bool has_loop(const MultiGraph& g) {
    return std::any_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); });
}

// Fundamental cycles of the subgraph of e.graph on the edges mapped from `side`.
std::vector<gf2::BitVector> side_cycles(const ExplorerNeighbourhood& e, unsigned side) {
    const MultiGraph& h = e.graph;
    const int n = h.num_vertices();
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    std::vector<std::vector<std::pair<int, int>>> forest(n);  // (neighbour, edge position)
    std::vector<gf2::BitVector> out;
    for (int p = 0; p < h.num_edges(); ++p) {
        if (!(e.edges[p].sides & side)) continue;
        const Edge& ed = h.edge(p);
        const int a = find(ed.u), b = find(ed.v);
        if (a != b) {
            root[a] = b;
            forest[ed.u].emplace_back(ed.v, p);
            forest[ed.v].emplace_back(ed.u, p);
            continue;
        }
        gf2::BitVector vec(h.num_edges());
        vec.flip(p);
        if (ed.u != ed.v) {
            std::vector<int> via(n, -2);
            std::vector<int> prev(n, -1);
            std::vector<int> queue{ed.u};
            via[ed.u] = -1;
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (auto [y, q] : forest[queue[i]])
                    if (via[y] == -2) {
                        via[y] = q;
                        prev[y] = queue[i];
                        queue.push_back(y);
                    }
            for (int x = ed.v; x != ed.u; x = prev[x]) vec.flip(via[x]);
        }
        out.push_back(std::move(vec));
    }
    return out;
}

bool alternates(const Cycle& c, int a1, int a2, int b1, int b2) {
    auto at = [&](int x) {
        return static_cast<long>(std::find(c.vertices.begin(), c.vertices.end(), x) - c.vertices.begin());
    };
    const long k = static_cast<long>(c.vertices.size());
    long i = at(a1), j = at(a2);
    const long p = at(b1), q = at(b2);
    if (i == k || j == k || p == k || q == k) return false;
    if (i > j) std::swap(i, j);
    auto inside = [&](long x) { return i < x && x < j; };
    return inside(p) != inside(q);
}

// Slices grouped by the vertex they replace.
std::map<std::string, std::vector<int>> slices_by_parent(const CutResult& c) {
    std::map<std::string, std::vector<int>> out;
    for (int x = 0; x < c.graph.num_vertices(); ++x)
        if (c.provenance[x].kind == Origin::Kind::slice) out[c.provenance[x].parent].push_back(x);
    return out;
}

std::string far_violation(const CutResult& c, Scale r) {
    for (const auto& [parent, xs] : slices_by_parent(c))
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const std::vector<long> d = distances_from(c.graph, xs[i]);
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                if (d[xs[j]] != kUnreachable && r.admits(d[xs[j]]))
                    return "slices " + c.graph.name(xs[i]) + ", " + c.graph.name(xs[j]) + " at distance " +
                           std::to_string(d[xs[j]]);
        }
    return {};
}

}  // namespace

OracleReport unique_copy(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("unique_copy", instance, [&](OracleReport& rep) {
        for (auto [v, w] : close_pairs(g, r)) {
            const ExplorerNeighbourhood e = explorer_neighbourhood(g, v, w, r);
            const std::array<Ball, 2> balls{ball(g, v, Radius2::half_of(r)), ball(g, w, Radius2::half_of(r))};
            std::vector<char> in_core(g.num_vertices(), 0);
            for (int x : e.core.members) in_core[x] = 1;
            // A neighbour x of the core that lies in both balls keeps one copy only if both balls
            // keep all its edges to the core. With r even, an edge between two vertices at distance
            // exactly r/2 from a base vertex is dropped by that ball, and x may then get two copies.
            auto premise = [&](int x) {
                for (const Ball& b : balls) {
                    if (!b.contains(x)) continue;
                    for (int pos : g.incident(x))
                        if (in_core[g.other_end(pos, x)] && !std::binary_search(b.kept_edges.begin(), b.kept_edges.end(), pos))
                            return false;
                }
                return true;
            };
            std::vector<char> check(g.num_vertices(), 0);
            for (int x : e.core.members) {
                check[x] = 1;
                for (int pos : g.incident(x)) check[g.other_end(pos, x)] = 1;
            }
            for (int x = 0; x < g.num_vertices(); ++x)
                if (check[x] && (in_core[x] || premise(x)) && e.copies_of(x).size() != 1)
                    rep.fail("Expl" + pair_str(g, v, w) + ": " + g.name(x) + " has " +
                             std::to_string(e.copies_of(x).size()) + " copies");
        }
    });
}

OracleReport unique_copy_extended(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("unique_copy_extended", instance, [&](OracleReport& rep) {
        std::map<std::pair<int, int>, ExplorerNeighbourhood> cache;
        for (const Cycle& c : enumerate_short_cycles(g, r.bound_for(g)).cycles)
            for (std::size_t i = 0; i < c.vertices.size(); ++i)
                for (std::size_t j = i + 1; j < c.vertices.size(); ++j) {
                    const auto key = std::minmax(c.vertices[i], c.vertices[j]);
                    auto it = cache.find(key);
                    if (it == cache.end())
                        it = cache.emplace(key, explorer_neighbourhood(g, key.first, key.second, r)).first;
                    for (int x : c.vertices)
                        if (it->second.copies_of(x).size() != 1)
                            rep.fail("Expl" + pair_str(g, key.first, key.second) + ": cycle vertex " + g.name(x) +
                                     " has " + std::to_string(it->second.copies_of(x).size()) + " copies");
                }
    });
}

OracleReport cycle_gen(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("cycle_gen", instance, [&](OracleReport& rep) {
        for (auto [v, w] : close_pairs(g, r)) {
            const ExplorerNeighbourhood e = explorer_neighbourhood(g, v, w, r);
            gf2::Basis basis(e.graph.num_edges());
            for (unsigned side : {ExplorerNeighbourhood::kSideV, ExplorerNeighbourhood::kSideW})
                for (gf2::BitVector& c : side_cycles(e, side)) basis.insert(std::move(c));
            const long want = cycle_space_dim(e.graph);
            if (static_cast<long>(basis.rank()) != want)
                rep.fail("Expl" + pair_str(g, v, w) + ": balls span rank " + std::to_string(basis.rank()) + " of " +
                         std::to_string(want));
        }
    });
}

OracleReport local_is_very_local(const MultiGraph& g, Scale r, const std::string& instance) {
    require(is_locally_2_connected(g, r), ErrorKind::precondition, "local_is_very_local needs an r-locally 2-connected graph");
    return run("local_is_very_local", instance, [&](OracleReport& rep) {
        for (const LocalSeparator& s : enumerate_local_2_separators(g, r)) {
            const ExplorerNeighbourhood& e = *s.expl;
            const std::vector<Cycle> cycles = enumerate_short_cycles(e.graph, r.bound_for(e.graph)).cycles;
            for (int k = 0; k < s.num_components(); ++k) {
                const bool found = std::any_of(cycles.begin(), cycles.end(), [&](const Cycle& c) {
                    const auto it = std::find(c.vertices.begin(), c.vertices.end(), e.copy_v);
                    if (it == c.vertices.end() || c.vertices.size() < 2) return false;
                    const std::size_t i = it - c.vertices.begin(), n = c.vertices.size();
                    const int into = (s.parts.component_of[c.vertices[(i + 1) % n]] == k) +
                                     (s.parts.component_of[c.vertices[(i + n - 1) % n]] == k);
                    return into == 1;
                });
                if (!found)
                    rep.fail(pair_str(g, s.a, s.b) + ": no short cycle leaves " + g.name(s.a) + " once into component " +
                             std::to_string(k));
            }
        }
    });
}

OracleReport cross_sym(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("cross_sym", instance, [&](OracleReport& rep) {
        const SeparatorAnalysis an = analyse_separators(g, r);
        const int n = static_cast<int>(an.separators.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const LocalSeparator& a = an.separators[i];
                const LocalSeparator& b = an.separators[j];
                if (an.reports[i][j].crosses != an.reports[j][i].crosses)
                    rep.fail(pair_str(g, a.a, a.b) + " vs " + pair_str(g, b.a, b.b) + ": crossing is not symmetric");
                if (an.reports[i][j].crosses && b.num_components() != 2)
                    rep.fail(pair_str(g, b.a, b.b) + " is crossed but has " + std::to_string(b.num_components()) +
                             " components");
            }
    });
}

OracleReport alt_exist(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("alt_exist", instance, [&](OracleReport& rep) {
        const SeparatorAnalysis an = analyse_separators(g, r);
        const std::vector<Cycle> cycles = enumerate_short_cycles(g, r.bound_for(g)).cycles;
        const int n = static_cast<int>(an.separators.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || !an.reports[i][j].crosses) continue;
                const int a1 = an.separators[i].a, a2 = an.separators[i].b;
                const int b1 = an.separators[j].a, b2 = an.separators[j].b;
                const std::string what = pair_str(g, a1, a2) + " x " + pair_str(g, b1, b2);
                bool any = false;
                for (const Cycle& c : cycles) {
                    const bool alt = alternates(c, a1, a2, b1, b2);
                    any = any || alt;
                    if (c.contains(a1) && c.contains(a2) && (c.contains(b1) || c.contains(b2)) && !alt)
                        rep.fail(what + ": a short cycle through both a and one b does not alternate");
                }
                if (!any) rep.fail(what + ": no alternating short cycle");
            }
    });
}

OracleReport cut_far(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("cut_far", instance, [&](OracleReport& rep) {
        // Torso weights need a detour around every local component, which local 2-connectivity gives.
        const bool pairs = is_locally_2_connected(g, r);
        for (const LocalSeparator& s : pairs ? enumerate_local_2_separators(g, r) : std::vector<LocalSeparator>{}) {
            if (!cuttable(g, s)) continue;
            const std::string bad = far_violation(cut_2separator(g, s.a, s.b, r), r);
            if (!bad.empty()) rep.fail("cut " + pair_str(g, s.a, s.b) + ": " + bad);
        }
        if (!r.admits(1)) return;
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (has_loop_at(g, v) || !is_local_cutvertex(g, v, r).is_cutvertex) continue;
            const std::string bad = far_violation(cut_vertex(g, v, r), r);
            if (!bad.empty()) rep.fail("cut " + g.name(v) + ": " + bad);
        }
    });
}

OracleReport loc2con_pres(const MultiGraph& g, Scale r, const std::string& instance) {
    require(is_locally_2_connected(g, r), ErrorKind::precondition, "loc2con_pres needs an r-locally 2-connected graph");
    return run("loc2con_pres", instance, [&](OracleReport& rep) {
        for (const LocalSeparator& s : enumerate_local_2_separators(g, r)) {
            if (!cuttable(g, s)) continue;
            const CutResult c = cut_2separator(g, s.a, s.b, r);
            if (!is_locally_2_connected(subdivide(c.graph).graph, r))
                rep.fail("cut " + pair_str(g, s.a, s.b) + " is not r-locally 2-connected");
        }
    });
}

OracleReport inverse_sum_cut(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("inverse_sum_cut", instance, [&](OracleReport& rep) {
        for (const LocalSeparator& s : enumerate_local_2_separators(g, r)) {
            if (!cuttable(g, s)) continue;
            const CutResult c = cut_2separator(g, s.a, s.b, r);
            const MultiGraph back = undo_cut(c.graph, c.torso_edges, {g.name(s.a), g.name(s.b)}, r, SumCheck::structural);
            if (!same_labelled_graph(back, g)) rep.fail("undoing the cut at " + pair_str(g, s.a, s.b) + " changes the graph");
        }
    });
}

OracleReport projection(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("projection", instance, [&](OracleReport& rep) {
        for (const LocalSeparator& s : enumerate_local_2_separators(g, r)) {
            if (!cuttable(g, s)) continue;
            const CutResult c = cut_2separator(g, s.a, s.b, r);
            const Subdivision sub = subdivide(c.graph);
            std::vector<int> real;
            for (int x = 0; x < sub.graph.num_vertices(); ++x)
                if (sub.provenance[x].kind != Origin::Kind::interior) real.push_back(x);
            auto root = [&](int x) { return c.provenance[c.graph.index(sub.graph.name(x))].root; };
            for (std::size_t i = 0; i < real.size(); ++i)
                for (std::size_t j = i + 1; j < real.size(); ++j) {
                    const std::string rx = root(real[i]), ry = root(real[j]);
                    if (rx == ry || !is_local_2_separator(sub.graph, real[i], real[j], r)) continue;
                    if (!is_local_2_separator(g, g.index(rx), g.index(ry), r))
                        rep.fail("cut " + pair_str(g, s.a, s.b) + ": " + pair_str(sub.graph, real[i], real[j]) +
                                 " separates but its roots do not");
                }
        }
    });
}

OracleReport lifting(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("lifting", instance, [&](OracleReport& rep) {
        const SeparatorAnalysis an = analyse_separators(g, r);
        const int n = static_cast<int>(an.separators.size());
        for (int i = 0; i < n; ++i) {
            const LocalSeparator& s = an.separators[i];
            if (!cuttable(g, s)) continue;
            const CutResult c = cut_2separator(g, s.a, s.b, r);
            const MultiGraph sub = subdivide(c.graph).graph;
            for (int j = 0; j < n; ++j) {
                if (j == i || an.reports[i][j].crosses) continue;
                const LocalSeparator& t = an.separators[j];
                const auto [l1, l2] = lift(c, g.name(t.a), g.name(t.b), r);
                if (!is_local_2_separator(sub, sub.index(l1), sub.index(l2), r))
                    rep.fail("cut " + pair_str(g, s.a, s.b) + ": lift {" + l1 + "," + l2 + "} of " + pair_str(g, t.a, t.b) +
                             " does not separate");
            }
        }
    });
}

OracleReport lift_non_crossing(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("lift_non_crossing", instance, [&](OracleReport& rep) {
        const SeparatorAnalysis an = analyse_separators(g, r);
        const int n = static_cast<int>(an.separators.size());
        for (int i = 0; i < n; ++i) {
            const LocalSeparator& s = an.separators[i];
            if (!cuttable(g, s)) continue;
            const CutResult c = cut_2separator(g, s.a, s.b, r);
            const MultiGraph sub = subdivide(c.graph).graph;
            std::map<int, LocalSeparator> lifted;
            for (int j = 0; j < n; ++j) {
                if (j == i || an.reports[i][j].crosses) continue;
                const auto [l1, l2] = lift(c, g.name(an.separators[j].a), g.name(an.separators[j].b), r);
                auto sep = local_2_separator(sub, sub.index(l1), sub.index(l2), r);
                if (!sep) {
                    rep.fail("cut " + pair_str(g, s.a, s.b) + ": lift {" + l1 + "," + l2 + "} does not separate");
                    continue;
                }
                lifted.emplace(j, std::move(*sep));
            }
            for (const auto& [j, lj] : lifted)
                for (const auto& [k, lk] : lifted) {
                    if (j == k) continue;
                    if (crosses(sub, lj, lk).crosses != an.reports[j][k].crosses)
                        rep.fail("cut " + pair_str(g, s.a, s.b) + ": crossing of " +
                                 pair_str(g, an.separators[j].a, an.separators[j].b) + " and " +
                                 pair_str(g, an.separators[k].a, an.separators[k].b) + " changes");
                }
        }
    });
}

OracleReport commute(const MultiGraph& g, Scale r, int trials, std::mt19937_64& rng, const std::string& instance) {
    return run("commute", instance, [&](OracleReport& rep) {
        const SeparatorAnalysis an = analyse_separators(g, r);
        std::vector<NamePair> seps;
        for (int i : an.noncrossed)
            if (cuttable(g, an.separators[i])) seps.emplace_back(g.name(an.separators[i].a), g.name(an.separators[i].b));
        const OracleReport pairs = oracle::oracle_commute(g, seps, r, trials, rng, instance);
        if (!pairs.pass) rep.fail(*pairs.counterexample);
        if (has_loop(g) || !r.admits(1)) return;
        const OracleReport vertices = oracle::oracle_vertex_commute(g, r, trials, rng, instance);
        if (!vertices.pass) rep.fail(*vertices.counterexample);
    });
}

OracleReport no_cut_vertex(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("no_cut_vertex", instance, [&](OracleReport& rep) {
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (has_loop_at(g, v)) continue;
            const CutResult c = cut_vertex(g, v, r);
            const auto slices = slices_by_parent(c);
            const auto it = slices.find(g.name(v));
            if (it == slices.end()) continue;
            for (int x : it->second)
                if (is_local_cutvertex(c.graph, x, r).is_cutvertex)
                    rep.fail("slice " + c.graph.name(x) + " of " + g.name(v) + " is an r-local cutvertex");
        }
    });
}

OracleReport cut_all1(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("cut_all1", instance, [&](OracleReport& rep) {
        const CutResult c = cut_all_vertices(g, r);
        const MultiGraph& h = c.graph;
        for (int x = 0; x < h.num_vertices(); ++x)
            if (is_local_cutvertex(h, x, r).is_cutvertex) rep.fail(h.name(x) + " is an r-local cutvertex after cutting all");
        for (const std::vector<int>& comp : components(h)) {
            std::vector<int> edges;
            for (int p = 0; p < h.num_edges(); ++p)
                if (std::binary_search(comp.begin(), comp.end(), h.edge(p).u)) edges.push_back(p);
            const MultiGraph part = subgraph(h, comp, edges);
            const bool single_edge = part.num_vertices() == 2 && part.num_edges() == 1;
            const bool single_vertex = part.num_vertices() == 1 && part.num_edges() == 0;
            if (!r.infinite && r.value < 3) continue;
            if (!single_edge && !single_vertex && !is_locally_2_connected(part, r))
                rep.fail("component at " + h.name(comp.front()) + " is neither an edge nor r-locally 2-connected");
        }
    });
}

OracleReport block_cut(const MultiGraph& g, Scale r, const std::string& instance) {
    return run("block_cut", instance, [&](OracleReport& rep) {
        const Metrics m = metrics(blockcut_decomposition(g, r));
        if (m.adhesion > 1) rep.fail("adhesion " + std::to_string(m.adhesion));
        const bool local = m.locality.infinite || (!r.infinite && m.locality.value >= r.value);
        if (!local) rep.fail("locality " + m.locality.str() + " below " + r.str());
    });
}

}  // namespace locsep::lemmas
