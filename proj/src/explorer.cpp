#include "locsep/explorer.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace locsep {

Core core_vertices(const MultiGraph& g, int v, int w) {
    const std::vector<long> dv = distances_from(g, v);
    const std::vector<long> dw = distances_from(g, w);
    require(dv[w] != kUnreachable, ErrorKind::precondition,
            "vertices " + g.name(v) + " and " + g.name(w) + " lie in different components");
    Core c;
    c.v = v;
    c.w = w;
    c.distance = dv[w];
    for (int x = 0; x < g.num_vertices(); ++x)
        if (dv[x] != kUnreachable && dw[x] != kUnreachable && dv[x] + dw[x] == c.distance) c.members.push_back(x);
    return c;
}

std::vector<int> ExplorerNeighbourhood::copies_of(int vertex) const {
    std::vector<int> out;
    for (int s = 0; s < 2; ++s) {
        const int c = side_copy[s][vertex];
        if (c >= 0 && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ExplorerNeighbourhood::ball_image(int side) const {
    std::vector<int> out;
    for (int c : side_copy[side])
        if (c >= 0) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct SideLabels {
    Ball ball;
    std::vector<long> core_dist;
    std::vector<std::vector<int>> dag;  // per member: edges on shortest core paths ending there
};

SideLabels label_side(const MultiGraph& g, int center, Scale r, const Core& core) {
    SideLabels s;
    s.ball = ball(g, center, Radius2::half_of(r));
    std::vector<char> allowed(g.num_edges(), 0);
    for (int pos : s.ball.kept_edges) allowed[pos] = 1;
    s.core_dist = distances_from(g, core.members, allowed);
    // into[u] holds the kept edges entering u along a shortest core path.
    std::vector<std::vector<int>> into(g.num_vertices());
    for (int pos : s.ball.kept_edges) {
        const Edge& e = g.edge(pos);
        if (e.is_loop()) continue;
        const long du = s.core_dist[e.u];
        const long dv = s.core_dist[e.v];
        if (du != kUnreachable && du + e.len == dv) into[e.v].push_back(pos);
        if (dv != kUnreachable && dv + e.len == du) into[e.u].push_back(pos);
    }
    s.dag.assign(g.num_vertices(), {});
    for (int u : s.ball.members) {
        std::vector<char> seen(g.num_vertices(), 0);
        std::vector<int> stack{u};
        seen[u] = 1;
        std::vector<int>& out = s.dag[u];
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int pos : into[x]) {
                out.push_back(pos);
                const int y = g.other_end(pos, x);
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return s;
}

}  // namespace

ExplorerNeighbourhood explorer_neighbourhood(const MultiGraph& g, int v, int w, Scale r) {
    require(v != w, ErrorKind::precondition, "explorer-neighbourhood needs two distinct vertices");
    ExplorerNeighbourhood e;
    e.v = v;
    e.w = w;
    e.r = r;
    e.core = core_vertices(g, v, w);
    require(r.infinite || 2 * e.core.distance <= r.value, ErrorKind::precondition,
            "pair " + g.name(v) + "," + g.name(w) + " is farther apart than r/2");

    const std::array<SideLabels, 2> side{label_side(g, v, r, e.core), label_side(g, w, r, e.core)};
    for (int s = 0; s < 2; ++s) e.side_copy[s].assign(g.num_vertices(), -1);

    for (int x = 0; x < g.num_vertices(); ++x) {
        const bool in0 = side[0].ball.contains(x);
        const bool in1 = side[1].ball.contains(x);
        auto make = [&](int s, unsigned sides) {
            ExplorerNeighbourhood::Copy c;
            c.vertex = x;
            c.sides = sides;
            c.core_distance = side[s].core_dist[x];
            c.dag_edges = side[s].dag[x];
            e.copies.push_back(std::move(c));
            return static_cast<int>(e.copies.size()) - 1;
        };
        if (in0 && in1 && side[0].core_dist[x] == side[1].core_dist[x] && side[0].dag[x] == side[1].dag[x]) {
            const int id = make(0, ExplorerNeighbourhood::kSideV | ExplorerNeighbourhood::kSideW);
            e.side_copy[0][x] = e.side_copy[1][x] = id;
            continue;
        }
        if (in0) e.side_copy[0][x] = make(0, ExplorerNeighbourhood::kSideV);
        if (in1) e.side_copy[1][x] = make(1, ExplorerNeighbourhood::kSideW);
    }

    std::map<std::tuple<int, int, int>, std::size_t> seen;
    for (int s = 0; s < 2; ++s) {
        for (int pos : side[s].ball.kept_edges) {
            const Edge& ed = g.edge(pos);
            const int a = e.side_copy[s][ed.u];
            const int b = e.side_copy[s][ed.v];
            const auto [it, fresh] = seen.emplace(std::make_tuple(pos, std::min(a, b), std::max(a, b)), e.edges.size());
            if (fresh) e.edges.push_back({pos, a, b, 0});
            e.edges[it->second].sides |= s == 0 ? ExplorerNeighbourhood::kSideV : ExplorerNeighbourhood::kSideW;
        }
    }
    std::sort(e.edges.begin(), e.edges.end(), [](const auto& x, const auto& y) {
        return std::tie(x.edge, x.a, x.b) < std::tie(y.edge, y.a, y.b);
    });

    e.copy_v = e.side_copy[0][v];
    e.copy_w = e.side_copy[1][w];
    require(e.copy_v == e.side_copy[1][v] && e.copy_w == e.side_copy[0][w], ErrorKind::invariant,
            "base vertices of an explorer-neighbourhood must have unique copies");

    for (const auto& c : e.copies) {
        std::string name = g.name(c.vertex);
        if (c.sides != (ExplorerNeighbourhood::kSideV | ExplorerNeighbourhood::kSideW) && e.copies_of(c.vertex).size() > 1)
            name += c.sides == ExplorerNeighbourhood::kSideV ? "'v" : "'w";
        e.graph.add_vertex(name);
    }
    for (const auto& ce : e.edges) {
        const Edge& ed = g.edge(ce.edge);
        e.graph.add_edge(ce.a, ce.b, ed.len, ed.tag);
    }
    return e;
}

PuncturedExpl punctured_expl(const MultiGraph& g, const ExplorerNeighbourhood& e) {
    const int n = static_cast<int>(e.copies.size());
    PuncturedExpl p;
    p.component_of.assign(n, -1);
    std::vector<std::vector<int>> comps;
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
        if (s == e.copy_v || s == e.copy_w || comp[s] >= 0) continue;
        const int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            comps[id].push_back(x);
            for (int pos : e.graph.incident(x)) {
                const int y = e.graph.other_end(pos, x);
                if (y == e.copy_v || y == e.copy_w || comp[y] >= 0) continue;
                comp[y] = id;
                stack.push_back(y);
            }
        }
        std::sort(comps[id].begin(), comps[id].end());
    }
    auto key = [&](const std::vector<int>& c) {
        std::vector<std::string> names;
        for (int x : c) names.push_back(g.name(e.copies[x].vertex));
        std::sort(names.begin(), names.end());
        return std::make_pair(names, c.front());
    };
    std::vector<std::pair<std::pair<std::vector<std::string>, int>, int>> order;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) order.emplace_back(key(comps[i]), i);
    std::sort(order.begin(), order.end());
    for (const auto& [k, i] : order) {
        const int id = static_cast<int>(p.components.size());
        for (int x : comps[i]) p.component_of[x] = id;
        p.components.push_back(std::move(comps[i]));
    }
    return p;
}

}  // namespace locsep
