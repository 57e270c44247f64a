#include "locsep/separators.hpp"

#include <algorithm>

namespace locsep {

CutvertexVerdict is_local_cutvertex(const MultiGraph& g, int v, Scale r) {
    const Ball b = ball(g, v, Radius2::half_of(r));
    std::vector<char> allowed(g.num_edges(), 0);
    for (int pos : b.kept_edges) allowed[pos] = 1;
    CutvertexVerdict out;
    std::vector<char> seen(g.num_vertices(), 0);
    seen[v] = 1;
    for (int s : b.members) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int pos : g.incident(x)) {
                if (!allowed[pos]) continue;
                const int y = g.other_end(pos, x);
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }
    out.detached_edges = b.detached;
    out.is_cutvertex = out.components.size() + out.detached_edges.size() >= 2;
    return out;
}

std::optional<LocalSeparator> local_2_separator(const MultiGraph& g, int v, int w, Scale r) {
    if (v == w) return std::nullopt;
    const long d = distance(g, v, w);
    if (d == kUnreachable || (!r.infinite && 2 * d > r.value)) return std::nullopt;
    auto e = std::make_shared<ExplorerNeighbourhood>(explorer_neighbourhood(g, v, w, r));
    PuncturedExpl parts = punctured_expl(g, *e);
    if (parts.components.size() < 2) return std::nullopt;
    LocalSeparator s;
    s.kind = LocalSeparator::Kind::pair;
    s.a = v;
    s.b = w;
    s.r = r;
    s.expl = std::move(e);
    s.parts = std::move(parts);
    return s;
}

bool is_local_2_separator(const MultiGraph& g, int v, int w, Scale r) {
    return local_2_separator(g, v, w, r).has_value();
}

std::vector<LocalSeparator> enumerate_local_2_separators(const MultiGraph& g, Scale r) {
    std::vector<int> order(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return g.name(x) < g.name(y); });
    std::vector<LocalSeparator> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::vector<long> dist = distances_from(g, order[i]);
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const long d = dist[order[j]];
            if (d == kUnreachable || (!r.infinite && 2 * d > r.value)) continue;
            if (auto s = local_2_separator(g, order[i], order[j], r)) out.push_back(std::move(*s));
        }
    }
    return out;
}

bool is_short_cycle(const MultiGraph& g, Scale r) {
    if (g.num_vertices() == 0 || !is_connected(g)) return false;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != 2) return false;
    return r.admits(g.total_length());
}

bool is_locally_2_connected(const MultiGraph& g, Scale r) {
    if (g.num_vertices() == 0) return true;
    if (!r.infinite && r.value < 3) return false;
    for (const auto& comp : components(g)) {
        std::vector<char> in(g.num_vertices(), 0);
        for (int x : comp) in[x] = 1;
        std::vector<int> edges;
        for (int pos = 0; pos < g.num_edges(); ++pos)
            if (in[g.edge(pos).u]) edges.push_back(pos);
        const MultiGraph h = subgraph(g, comp, edges);
        if (!r.admits(girth(h))) return false;
        if (girth(h) == kUnreachable) return false;
        for (int v = 0; v < h.num_vertices(); ++v)
            if (is_local_cutvertex(h, v, r).is_cutvertex) return false;
    }
    return true;
}

bool is_locally_3_connected(const MultiGraph& g, Scale r) {
    if (!is_locally_2_connected(g, r)) return false;
    for (const auto& comp : components(g)) {
        if (comp.size() < 4) return false;
        std::vector<char> in(g.num_vertices(), 0);
        for (int x : comp) in[x] = 1;
        std::vector<int> edges;
        for (int pos = 0; pos < g.num_edges(); ++pos)
            if (in[g.edge(pos).u]) edges.push_back(pos);
        if (!enumerate_local_2_separators(subgraph(g, comp, edges), r).empty()) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> essential_2_separators(const MultiGraph& weighted, Scale r) {
    const Subdivision sub = subdivide(weighted);
    auto real = [&](int x) { return sub.provenance[x].kind != Origin::Kind::interior; };
    std::vector<std::pair<int, int>> out;
    for (const LocalSeparator& s : enumerate_local_2_separators(sub.graph, r)) {
        if (!real(s.a) || !real(s.b)) continue;
        int reaching = 0;
        for (const auto& comp : s.parts.components)
            if (std::any_of(comp.begin(), comp.end(), [&](int c) { return real(s.expl->copies[c].vertex); })) ++reaching;
        if (reaching >= 2) out.emplace_back(weighted.index(sub.graph.name(s.a)), weighted.index(sub.graph.name(s.b)));
    }
    return out;
}

namespace {

bool alternates(const std::vector<int>& roles) {
    // roles: 0 for A-vertices, 1 for B-vertices, in cyclic order; exactly four entries.
    if (roles.size() != 4) return false;
    for (std::size_t i = 0; i < 4; ++i)
        if (roles[i] == roles[(i + 1) % 4]) return false;
    return true;
}

}  // namespace

CrossingReport crosses(const MultiGraph& /*g*/, const LocalSeparator& a, const LocalSeparator& b, ExpansionBudget* budget) {
    require(a.kind == LocalSeparator::Kind::pair && b.kind == LocalSeparator::Kind::pair, ErrorKind::precondition,
            "crossing is defined between 2-separators");
    CrossingReport rep;
    if (b.has(a.a) || b.has(a.b)) return rep;
    const ExplorerNeighbourhood& e = *b.expl;
    const std::vector<int> c1 = e.copies_of(a.a);
    const std::vector<int> c2 = e.copies_of(a.b);
    const long bound = b.r.bound_for(e.graph);
    for (int x : c1) {
        for (int y : c2) {
            if (b.parts.component_of[x] == b.parts.component_of[y]) continue;
            rep.pre_crosses = true;
            auto hit = find_cycle(e.graph, bound, x, [&](const Cycle& c) {
                return c.contains(y) && (c.contains(e.copy_v) || c.contains(e.copy_w));
            }, budget);
            if (!hit) continue;
            rep.crosses = true;
            std::vector<int> roles;
            for (int z : hit->vertices) {
                rep.witness_host.push_back(e.copies[z].vertex);
                if (z == x || z == y) roles.push_back(0);
                if (z == e.copy_v || z == e.copy_w) roles.push_back(1);
            }
            rep.alternates = alternates(roles);
            rep.witness = std::move(hit);
            return rep;
        }
    }
    return rep;
}

bool SeparatorAnalysis::crossed_by_any(int j) const {
    for (std::size_t i = 0; i < reports.size(); ++i)
        if (static_cast<int>(i) != j && reports[i][j].crosses) return true;
    return false;
}

SeparatorAnalysis analyse_separators(const MultiGraph& g, Scale r, ExpansionBudget* budget) {
    SeparatorAnalysis an;
    an.separators = enumerate_local_2_separators(g, r);
    const std::size_t n = an.separators.size();
    an.reports.assign(n, std::vector<CrossingReport>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) an.reports[i][j] = crosses(g, an.separators[i], an.separators[j], budget);
    for (std::size_t j = 0; j < n; ++j)
        if (!an.crossed_by_any(static_cast<int>(j))) an.noncrossed.push_back(static_cast<int>(j));
    return an;
}

std::vector<LocalSeparator> noncrossed_set(const MultiGraph& g, Scale r, ExpansionBudget* budget) {
    SeparatorAnalysis an = analyse_separators(g, r, budget);
    std::vector<LocalSeparator> out;
    for (int j : an.noncrossed) out.push_back(an.separators[j]);
    return out;
}

}  // namespace locsep
