#include "locsep/surgery.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace locsep {

std::string slice_name(const std::string& vertex, int component) { return vertex + "#" + std::to_string(component); }

namespace {

const std::string& root_of(const Provenance* base, const MultiGraph& g, int x) {
    return base != nullptr ? (*base)[x].root : g.name(x);
}

Origin kept_origin(const Provenance* base, const MultiGraph& g, int x) {
    Origin o;
    o.kind = Origin::Kind::original;
    o.parent = g.name(x);
    o.root = root_of(base, g, x);
    return o;
}

Origin slice_origin(const Provenance* base, const MultiGraph& g, int x, int component) {
    Origin o;
    o.kind = Origin::Kind::slice;
    o.parent = g.name(x);
    o.root = root_of(base, g, x);
    o.component = component;
    return o;
}

void require_unit(const MultiGraph& g, const char* what) {
    require(g.unit_lengths(), ErrorKind::precondition, std::string(what) + " needs a unit-length graph");
}

bool has_loop(const MultiGraph& g, int v) {
    for (int pos : g.incident(v))
        if (g.edge(pos).is_loop()) return true;
    return false;
}

/// Orders components by their sorted vertex names, the slice fingerprint.
void sort_by_fingerprint(const MultiGraph& g, std::vector<std::vector<int>>& comps) {
    auto key = [&](const std::vector<int>& c) {
        std::vector<std::string> names;
        for (int x : c) names.push_back(g.name(x));
        std::sort(names.begin(), names.end());
        return names;
    };
    std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

/// Slices of the same vertex must be at distance >= r+1 (unreachable when r is infinite).
void check_cut_far(const MultiGraph& weighted, const std::vector<std::vector<std::string>>& groups, Scale r) {
    for (const auto& group : groups) {
        for (std::size_t i = 0; i < group.size(); ++i) {
            const std::vector<long> d = distances_from(weighted, weighted.index(group[i]));
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                const long dij = d[weighted.index(group[j])];
                const bool far = r.infinite ? dij == kUnreachable : dij >= r.value + 1;
                require(far, ErrorKind::invariant,
                        "slices " + group[i] + " and " + group[j] + " are only " + std::to_string(dij) + " apart");
            }
        }
    }
}

struct VertexCutPlan {
    // per cut vertex: component index of each vertex in its punctured ball, or -1
    std::map<int, std::vector<int>> comp_of;
    std::map<int, int> num_comps;
};

void plan_vertex(const MultiGraph& g, int v, Scale r, VertexCutPlan& plan) {
    CutvertexVerdict verdict = is_local_cutvertex(g, v, r);
    if (!verdict.is_cutvertex) return;
    require(!has_loop(g, v), ErrorKind::precondition, "cannot cut vertex " + g.name(v) + ": it carries a loop");
    sort_by_fingerprint(g, verdict.components);
    std::vector<int> comp(g.num_vertices(), -1);
    for (std::size_t k = 0; k < verdict.components.size(); ++k)
        for (int x : verdict.components[k]) comp[x] = static_cast<int>(k);
    plan.comp_of[v] = std::move(comp);
    plan.num_comps[v] = static_cast<int>(verdict.components.size());
}

CutResult apply_vertex_plan(const MultiGraph& g, const VertexCutPlan& plan, const Provenance* base) {
    CutResult out;
    std::vector<std::vector<int>> slice_ids(g.num_vertices());
    std::vector<int> keep(g.num_vertices(), -1);
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (plan.comp_of.count(x)) continue;
        keep[x] = out.graph.add_vertex(g.name(x));
        out.provenance.push_back(kept_origin(base, g, x));
    }
    std::vector<std::vector<std::string>> groups;
    for (const auto& [v, n] : plan.num_comps) {
        groups.emplace_back();
        for (int k = 0; k < n; ++k) {
            slice_ids[v].push_back(out.graph.add_vertex(slice_name(g.name(v), k)));
            out.provenance.push_back(slice_origin(base, g, v, k));
            groups.back().push_back(slice_name(g.name(v), k));
        }
        out.cut.push_back(g.name(v));
        out.num_local_components = std::max(out.num_local_components, n);
    }
    auto end_for = [&](int x, int other) {
        if (keep[x] >= 0) return keep[x];
        const int k = plan.comp_of.at(x)[other];
        require(k >= 0, ErrorKind::invariant, "edge at " + g.name(x) + " leaves its ball");
        return slice_ids[x][k];
    };
    for (const Edge& e : g.edges()) out.graph.add_edge(end_for(e.u, e.v), end_for(e.v, e.u), e.len, e.tag, e.id);
    return out;
}

void require_vertex_scale(Scale r) {
    require(r.infinite || r.value >= 2, ErrorKind::precondition, "vertex cutting needs r >= 2");
}

}  // namespace

CutResult cut_vertex(const MultiGraph& g, int v, Scale r, const Provenance* base) {
    require_unit(g, "cut_vertex");
    require_vertex_scale(r);
    require(!has_loop(g, v), ErrorKind::precondition, "cannot cut vertex " + g.name(v) + ": it carries a loop");
    VertexCutPlan plan;
    plan_vertex(g, v, r, plan);
    CutResult out = apply_vertex_plan(g, plan, base);
    if (out.cut.empty()) out.num_local_components = 1;
    return out;
}

CutResult cut_all_vertices(const MultiGraph& g, Scale r, const Provenance* base) {
    require_unit(g, "cut_all_vertices");
    require_vertex_scale(r);
    VertexCutPlan plan;
    for (int v = 0; v < g.num_vertices(); ++v) plan_vertex(g, v, r, plan);
    return apply_vertex_plan(g, plan, base);
}

CutResult cut_2separator(const MultiGraph& g, int v0, int v1, Scale r, const Provenance* base) {
    require_unit(g, "cut_2separator");
    require(!has_loop(g, v0) && !has_loop(g, v1), ErrorKind::precondition,
            "cannot cut " + g.name(v0) + "," + g.name(v1) + ": a separator vertex carries a loop");
    const std::optional<LocalSeparator> sep = local_2_separator(g, v0, v1, r);
    require(sep.has_value(), ErrorKind::precondition,
            g.name(v0) + "," + g.name(v1) + " is not an r-local 2-separator (r=" + r.str() + ")");
    const ExplorerNeighbourhood& e = *sep->expl;
    const PuncturedExpl& parts = sep->parts;
    const int nx = static_cast<int>(parts.components.size());
    const std::array<int, 2> base_v{v0, v1};

    CutResult out;
    out.cut = {g.name(v0), g.name(v1)};
    out.num_local_components = nx;
    std::vector<int> keep(g.num_vertices(), -1);
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (x == v0 || x == v1) continue;
        keep[x] = out.graph.add_vertex(g.name(x));
        out.provenance.push_back(kept_origin(base, g, x));
    }
    std::array<std::vector<int>, 2> slices;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < nx; ++k) {
            slices[i].push_back(out.graph.add_vertex(slice_name(g.name(base_v[i]), k)));
            out.provenance.push_back(slice_origin(base, g, base_v[i], k));
        }
    }

    // Each edge between v0 and v1 spawns its own digon component.
    int digons = 0;
    auto add_digon_vertices = [&]() {
        const int k = nx + digons++;
        for (int i = 0; i < 2; ++i) {
            slices[i].push_back(out.graph.add_vertex(slice_name(g.name(base_v[i]), k)));
            out.provenance.push_back(slice_origin(base, g, base_v[i], k));
        }
        out.artificial_components.push_back(k);
        return k;
    };
    auto side_of = [&](int x) { return x == v0 ? 0 : 1; };
    auto slice_for = [&](int x, int other) {
        const int i = side_of(x);
        const int c = e.side_copy[i][other];
        require(c >= 0, ErrorKind::invariant, "neighbour " + g.name(other) + " is missing from the explorer-neighbourhood");
        const int k = parts.component_of[c];
        require(k >= 0, ErrorKind::invariant, "neighbour copy of " + g.name(other) + " lies on the separator");
        return slices[i][k];
    };
    for (const Edge& ed : g.edges()) {
        const bool at_u = ed.u == v0 || ed.u == v1;
        const bool at_v = ed.v == v0 || ed.v == v1;
        if (at_u && at_v) {
            const int k = add_digon_vertices();
            const int a = slices[side_of(ed.u)][k];
            const int b = slices[side_of(ed.v)][k];
            out.graph.add_edge(a, b, ed.len, ed.tag, ed.id);
            continue;
        }
        const int a = at_u ? slice_for(ed.u, ed.v) : keep[ed.u];
        const int b = at_v ? slice_for(ed.v, ed.u) : keep[ed.v];
        out.graph.add_edge(a, b, ed.len, ed.tag, ed.id);
    }

    // Torso weights: shortest copy_v-copy_w path in Expl avoiding the component.
    const MultiGraph& xg = e.graph;
    auto detour = [&](int avoid) {
        std::vector<char> allowed(xg.num_edges(), 1);
        if (avoid >= 0) {
            for (int pos = 0; pos < xg.num_edges(); ++pos) {
                const Edge& xe = xg.edge(pos);
                if (parts.component_of[xe.u] == avoid || parts.component_of[xe.v] == avoid) allowed[pos] = 0;
            }
        }
        return distances_from(xg, std::vector<int>{e.copy_v}, allowed)[e.copy_w];
    };
    std::vector<long> weights;
    for (int k = 0; k < nx; ++k) {
        const long w = detour(k);
        require(w != kUnreachable, ErrorKind::precondition,
                "no torso path for component " + std::to_string(k) + " of " + g.name(v0) + "," + g.name(v1) +
                    " (is the graph r-locally 2-connected?)");
        weights.push_back(w);
        const int id = out.graph.edge(out.graph.add_edge(slices[0][k], slices[1][k], w, EdgeTag::torso)).id;
        out.torso_edges.push_back({id, out.graph.name(slices[0][k]), out.graph.name(slices[1][k]), k, w, false});
    }
    for (int k : out.artificial_components) {
        const long w = detour(-1);
        const int id = out.graph.edge(out.graph.add_edge(slices[0][k], slices[1][k], w, EdgeTag::torso)).id;
        out.torso_edges.push_back({id, out.graph.name(slices[0][k]), out.graph.name(slices[1][k]), k, w, true});
    }

    std::map<long, int> tally;
    for (long w : weights) ++tally[w];
    bool all_but_one = tally.size() <= 1;
    for (const auto& [w, n] : tally) all_but_one = all_but_one || n >= nx - 1;
    require(all_but_one, ErrorKind::invariant, "torso weights of " + g.name(v0) + "," + g.name(v1) + " differ in more than one place");

    std::vector<std::vector<std::string>> groups(2);
    for (int i = 0; i < 2; ++i)
        for (int s : slices[i]) groups[i].push_back(out.graph.name(s));
    check_cut_far(out.graph, groups, r);
    return out;
}

CutResult cut_weighted(const MultiGraph& g, int v0, int v1, Scale r, const Provenance* base) {
    if (g.unit_lengths()) return cut_2separator(g, v0, v1, r, base);
    const Subdivision sub = subdivide(g);
    // First and last subdivision edge ids per long edge; subdivide emits them in edge order.
    std::vector<std::pair<int, int>> ends(g.num_edges(), {-1, -1});
    int k = 0;
    for (int pos = 0; pos < g.num_edges(); ++pos) {
        const long len = g.edge(pos).len;
        if (len > 1) ends[pos] = {sub.graph.edge(k).id, sub.graph.edge(k + static_cast<int>(len) - 1).id};
        k += static_cast<int>(len);
    }
    const CutResult c = cut_2separator(sub.graph, v0, v1, r);

    CutResult out;
    out.cut = c.cut;
    out.num_local_components = c.num_local_components;
    out.artificial_components = c.artificial_components;
    out.torso_edges = c.torso_edges;
    std::vector<int> new_index(c.graph.num_vertices(), -1);
    for (int x = 0; x < c.graph.num_vertices(); ++x) {
        const Origin& o = c.provenance[x];
        const int in_sub = sub.graph.index(o.parent);
        if (sub.provenance[in_sub].kind == Origin::Kind::interior) continue;
        new_index[x] = out.graph.add_vertex(c.graph.name(x));
        const int in_g = g.index(o.parent);
        out.provenance.push_back(o.kind == Origin::Kind::slice ? slice_origin(base, g, in_g, o.component)
                                                               : kept_origin(base, g, in_g));
    }
    auto mapped = [&](int x) {
        require(new_index[x] >= 0, ErrorKind::invariant, "subdivided edge ends at an interior point");
        return new_index[x];
    };
    for (int pos = 0; pos < g.num_edges(); ++pos) {
        const Edge& ed = g.edge(pos);
        if (ed.len == 1) {
            const Edge& ce = c.graph.edge(*c.graph.edge_position(ed.id));
            out.graph.add_edge(mapped(ce.u), mapped(ce.v), 1, ed.tag, ed.id);
            continue;
        }
        const Edge& first = c.graph.edge(*c.graph.edge_position(ends[pos].first));
        const Edge& last = c.graph.edge(*c.graph.edge_position(ends[pos].second));
        out.graph.add_edge(mapped(first.u), mapped(last.v), ed.len, ed.tag, ed.id);
    }
    for (const TorsoEdge& t : c.torso_edges) {
        const Edge& ce = c.graph.edge(*c.graph.edge_position(t.edge_id));
        out.graph.add_edge(mapped(ce.u), mapped(ce.v), ce.len, ce.tag, ce.id);
    }
    return out;
}

std::pair<std::string, std::string> lift(const CutResult& cut, const std::string& b1, const std::string& b2, Scale r,
                                         ExpansionBudget* budget) {
    const std::set<std::string> pair{b1, b2};
    require(pair != std::set<std::string>(cut.cut.begin(), cut.cut.end()), ErrorKind::precondition,
            "cannot lift the separator that was cut");
    std::array<std::vector<std::string>, 2> cand;
    for (int x = 0; x < cut.graph.num_vertices(); ++x) {
        const std::string& parent = cut.provenance[x].parent;
        if (parent == b1) cand[0].push_back(cut.graph.name(x));
        if (parent == b2) cand[1].push_back(cut.graph.name(x));
    }
    const MultiGraph u = subdivide(cut.graph).graph;
    const long bound = r.bound_for(u);
    std::vector<std::pair<std::string, std::string>> hits;
    for (const auto& c1 : cand[0]) {
        for (const auto& c2 : cand[1]) {
            const int y = u.index(c2);
            if (find_cycle(u, bound, u.index(c1), [&](const Cycle& c) { return c.contains(y); }, budget))
                hits.emplace_back(c1, c2);
        }
    }
    require(!hits.empty(), ErrorKind::precondition, "no lift of " + b1 + "," + b2 + ": no short cycle through slices");
    require(hits.size() == 1, ErrorKind::invariant, "lift of " + b1 + "," + b2 + " is not unique");
    return hits.front();
}

namespace {

std::pair<std::string, std::string> ordered(const std::pair<std::string, std::string>& p) {
    return p.first <= p.second ? p : std::make_pair(p.second, p.first);
}

Provenance compose(const Provenance& before, const MultiGraph& before_graph, const CutResult& cut) {
    Provenance out;
    for (const Origin& o : cut.provenance) {
        Origin c = before[before_graph.index(o.parent)];
        if (o.kind == Origin::Kind::slice) {
            c.kind = Origin::Kind::slice;
            c.component = o.component;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace

CutResult cut_step(CutAllResult& state, const std::pair<std::string, std::string>& pair, Scale r) {
    const int a = state.graph.index(pair.first);
    const int b = state.graph.index(pair.second);
    CutResult cut = cut_weighted(state.graph, a, b, r, &state.provenance);
    std::pair<std::string, std::string> roots{state.provenance[a].root, state.provenance[b].root};
    if (roots.first.empty()) roots.first = pair.first;
    if (roots.second.empty()) roots.second = pair.second;
    state.steps.push_back({roots, pair, cut.torso_edges, cut.artificial_components, cut.num_local_components});
    state.provenance = compose(state.provenance, state.graph, cut);
    state.graph = cut.graph;
    return cut;
}

CutAllResult cut_all(const MultiGraph& g, const std::vector<std::pair<std::string, std::string>>& seps, Scale r,
                     const CutAllOptions& options) {
    std::vector<std::pair<std::string, std::string>> order;
    for (const auto& p : seps) {
        require(p.first != p.second, ErrorKind::input, "separator needs two distinct vertices");
        g.index(p.first);
        g.index(p.second);
        const auto q = ordered(p);
        require(std::find(order.begin(), order.end(), q) == order.end(), ErrorKind::input,
                "separator " + q.first + "," + q.second + " listed twice");
        order.push_back(q);
    }
    if (options.sort) std::sort(order.begin(), order.end());

    const MultiGraph unit = subdivide(g).graph;
    if (options.verify_noncrossing) {
        std::vector<LocalSeparator> objs;
        for (const auto& p : order) {
            auto s = local_2_separator(unit, unit.index(p.first), unit.index(p.second), r);
            require(s.has_value(), ErrorKind::precondition, p.first + "," + p.second + " is not an r-local 2-separator");
            objs.push_back(std::move(*s));
        }
        for (std::size_t i = 0; i < objs.size(); ++i)
            for (std::size_t j = 0; j < objs.size(); ++j)
                if (i != j && crosses(unit, objs[i], objs[j], options.budget).crosses)
                    fail(ErrorKind::precondition, "separators " + order[i].first + "," + order[i].second + " and " +
                                                      order[j].first + "," + order[j].second + " cross");
    }

    CutAllResult out;
    out.graph = g;
    out.provenance = identity_provenance(g);
    std::vector<std::pair<std::string, std::string>> current = order;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const CutResult cut = cut_step(out, current[i], r);
        for (std::size_t j = i + 1; j < order.size(); ++j)
            current[j] = lift(cut, current[j].first, current[j].second, r, options.budget);
    }
    return out;
}

CutAllResult replay_cuts(const MultiGraph& g, const std::vector<CutStep>& steps, Scale r) {
    CutAllResult out;
    out.graph = g;
    out.provenance = identity_provenance(g);
    for (const CutStep& s : steps) {
        cut_step(out, s.lifted, r);
        require(out.steps.back().separator == s.separator, ErrorKind::invariant,
                "replayed cut " + s.lifted.first + "," + s.lifted.second + " has different roots");
    }
    return out;
}

SumValidation validate_sum(const SumSpec& spec) {
    const std::size_t n = spec.glue.size();
    SumValidation v;
    std::vector<int> starts(n), terms(n), positions(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& gl = spec.glue[i];
        const MultiGraph& h = spec.hosts[gl.host];
        const auto pos = h.edge_position(gl.edge_id);
        require(pos.has_value(), ErrorKind::input, "gluing edge " + std::to_string(gl.edge_id) + " is not in its host");
        positions[i] = *pos;
        const Edge& e = h.edge(*pos);
        starts[i] = gl.reversed ? e.v : e.u;
        terms[i] = gl.reversed ? e.u : e.v;
        std::vector<char> allowed(h.num_edges(), 1);
        allowed[*pos] = 0;
        v.gamma.push_back(distances_from(h, std::vector<int>{starts[i]}, allowed)[terms[i]]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        long delta = kUnreachable;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) delta = std::min(delta, v.gamma[j]);
        const long len = spec.hosts[spec.glue[i].host].edge(positions[i]).len;
        if (len != delta) v.length_mismatches.push_back({static_cast<int>(i), len, delta});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (spec.glue[i].host != spec.glue[j].host) continue;
            const MultiGraph& h = spec.hosts[spec.glue[i].host];
            for (const auto* ends : {&starts, &terms}) {
                const long d = distance(h, (*ends)[i], (*ends)[j]);
                const bool far = spec.r.infinite ? d == kUnreachable : d >= spec.r.value + 1;
                v.local = v.local && far;
            }
        }
    }
    return v;
}

MultiGraph local_2_sum(const SumSpec& spec, SumCheck check) {
    const std::size_t n = spec.glue.size();
    require(n >= 2, ErrorKind::precondition, "a local 2-sum needs at least two gluing edges");
    std::set<std::pair<int, int>> distinct;
    for (const auto& gl : spec.glue) {
        require(gl.host >= 0 && gl.host < static_cast<int>(spec.hosts.size()), ErrorKind::input, "gluing edge names an unknown host");
        require(distinct.emplace(gl.host, gl.edge_id).second, ErrorKind::precondition,
                "gluing edge " + std::to_string(gl.edge_id) + " listed twice");
    }
    const SumValidation val = validate_sum(spec);
    if (check == SumCheck::strict) {
        require(val.length_mismatches.empty(), ErrorKind::precondition,
                "gluing edge length differs from delta (first mismatch: glue " +
                    (val.length_mismatches.empty() ? std::string() : std::to_string(val.length_mismatches[0].glue)) + ")");
        require(val.local, ErrorKind::precondition, "local 2-sum is not r-local");
    }

    std::vector<int> used;
    for (const auto& gl : spec.glue) used.push_back(gl.host);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    const bool single = used.size() == 1;

    MultiGraph uni;
    std::map<std::pair<int, int>, int> vmap;  // (host, vertex) -> vertex of the union
    std::map<std::pair<int, int>, int> emap;  // (host, edge position) -> edge position of the union
    for (int h : used) {
        const MultiGraph& host = spec.hosts[h];
        const std::string prefix = single ? "" : "h" + std::to_string(h) + ":";
        for (int x = 0; x < host.num_vertices(); ++x) vmap[{h, x}] = uni.add_vertex(prefix + host.name(x));
        for (int pos = 0; pos < host.num_edges(); ++pos) {
            const Edge& e = host.edge(pos);
            emap[{h, pos}] = uni.add_edge(vmap[{h, e.u}], vmap[{h, e.v}], e.len, e.tag, single ? e.id : -1);
        }
    }

    std::vector<char> is_start(uni.num_vertices(), 0), is_term(uni.num_vertices(), 0), glued(uni.num_edges(), 0);
    for (const auto& gl : spec.glue) {
        const MultiGraph& host = spec.hosts[gl.host];
        const int pos = *host.edge_position(gl.edge_id);
        const Edge& e = host.edge(pos);
        is_start[vmap[{gl.host, gl.reversed ? e.v : e.u}]] = 1;
        is_term[vmap[{gl.host, gl.reversed ? e.u : e.v}]] = 1;
        glued[emap[{gl.host, pos}]] = 1;
    }
    auto merged_name = [&](const std::vector<char>& flag, const std::optional<std::string>& want) {
        std::string best;
        for (int x = 0; x < uni.num_vertices(); ++x)
            if (flag[x] && (best.empty() || uni.name(x) < best)) best = uni.name(x);
        return want.value_or(best);
    };
    const std::string sname = merged_name(is_start, spec.start_name);
    const std::string tname = merged_name(is_term, spec.terminal_name);

    MultiGraph out;
    std::vector<int> to(uni.num_vertices(), -1);
    int s_id = -1, t_id = -1;
    for (int x = 0; x < uni.num_vertices(); ++x) {
        require(!(is_start[x] && is_term[x]), ErrorKind::precondition, "vertex " + uni.name(x) + " is both a start and a terminal vertex");
        if (is_start[x]) {
            if (s_id < 0) s_id = out.add_vertex(sname);
            to[x] = s_id;
        } else if (is_term[x]) {
            if (t_id < 0) t_id = out.add_vertex(tname);
            to[x] = t_id;
        } else {
            to[x] = out.add_vertex(uni.name(x));
        }
    }
    for (int pos = 0; pos < uni.num_edges(); ++pos) {
        if (glued[pos]) continue;
        const Edge& e = uni.edge(pos);
        out.add_edge(to[e.u], to[e.v], e.len, e.tag, e.id);
    }
    return out;
}

MultiGraph undo_cut(const MultiGraph& result, const std::vector<TorsoEdge>& torso,
                    const std::pair<std::string, std::string>& pair, Scale r, SumCheck check, SumValidation* validation) {
    SumSpec spec;
    spec.hosts = {result};
    spec.r = r;
    spec.start_name = pair.first;
    spec.terminal_name = pair.second;
    for (const TorsoEdge& t : torso) {
        const auto pos = result.edge_position(t.edge_id);
        require(pos.has_value(), ErrorKind::input, "torso edge " + std::to_string(t.edge_id) + " is missing");
        spec.glue.push_back({0, t.edge_id, result.name(result.edge(*pos).u) != t.start});
    }
    if (validation != nullptr) *validation = validate_sum(spec);
    return local_2_sum(spec, check);
}

Identification identify_along(const MultiGraph& g, const MultiGraph& pattern, const std::vector<Embedding>& family) {
    for (const Embedding& emb : family) {
        require(static_cast<int>(emb.vertices.size()) == pattern.num_vertices() &&
                    static_cast<int>(emb.edges.size()) == pattern.num_edges(),
                ErrorKind::input, "embedding does not match the pattern size");
        std::set<int> seen(emb.vertices.begin(), emb.vertices.end());
        require(static_cast<int>(seen.size()) == pattern.num_vertices(), ErrorKind::input, "embedding is not injective on vertices");
        std::set<int> seen_e(emb.edges.begin(), emb.edges.end());
        require(seen_e.size() == emb.edges.size(), ErrorKind::input, "embedding is not injective on edges");
        for (int p = 0; p < pattern.num_edges(); ++p) {
            const Edge& pe = pattern.edge(p);
            const Edge& ge = g.edge(emb.edges[p]);
            const int a = emb.vertices[pe.u], b = emb.vertices[pe.v];
            require((ge.u == a && ge.v == b) || (ge.u == b && ge.v == a), ErrorKind::input,
                    "embedding maps a pattern edge onto a non-matching edge");
        }
    }
    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 1; i < family.size(); ++i)
        for (int x = 0; x < pattern.num_vertices(); ++x) parent[find(family[i].vertices[x])] = find(family[0].vertices[x]);

    std::map<int, std::string> class_name;
    for (int x = 0; x < g.num_vertices(); ++x) {
        auto [it, fresh] = class_name.emplace(find(x), g.name(x));
        if (!fresh && g.name(x) < it->second) it->second = g.name(x);
    }
    Identification out;
    out.class_of.assign(g.num_vertices(), -1);
    std::map<int, int> class_index;
    for (int x = 0; x < g.num_vertices(); ++x) {
        const int root = find(x);
        auto it = class_index.find(root);
        if (it == class_index.end()) it = class_index.emplace(root, out.graph.add_vertex(class_name[root])).first;
        out.class_of[x] = it->second;
    }
    std::vector<char> drop(g.num_edges(), 0);
    for (std::size_t i = 1; i < family.size(); ++i)
        for (int pos : family[i].edges) drop[pos] = 1;
    for (int pos = 0; pos < g.num_edges(); ++pos) {
        if (drop[pos]) continue;
        const Edge& e = g.edge(pos);
        out.graph.add_edge(out.class_of[e.u], out.class_of[e.v], e.len, e.tag, e.id);
    }
    return out;
}

}  // namespace locsep
