#include "locsep/cycles.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace locsep {

long ExpansionBudget::default_limit() {
    if (const char* env = std::getenv("LOCSEP_EXPANSION_BUDGET")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 10'000'000;
}

void ExpansionBudget::exceeded() const {
    fail(ErrorKind::cap_exceeded, "expansion budget of " + std::to_string(limit_) + " exceeded");
}

bool Cycle::contains(int v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

namespace {

struct Search {
    const MultiGraph& g;
    long bound;
    ExpansionBudget* budget;
    std::vector<char> on_path;
    std::vector<int> path_v;
    std::vector<int> path_e;

    explicit Search(const MultiGraph& graph, long b, ExpansionBudget* bud)
        : g(graph), bound(b), budget(bud), on_path(graph.num_vertices(), 0) {}

    void spend() {
        if (budget != nullptr) budget->spend();
    }

    Cycle close(int closing_edge, long length) const {
        Cycle c;
        c.vertices = path_v;
        c.edges = path_e;
        c.edges.push_back(closing_edge);
        c.length = length;
        return c;
    }
};

std::vector<long> restricted_distances(const MultiGraph& g, int s) {
    std::vector<char> allowed(g.num_edges(), 0);
    for (int pos = 0; pos < g.num_edges(); ++pos) {
        const Edge& e = g.edge(pos);
        allowed[pos] = e.u >= s && e.v >= s;
    }
    return distances_from(g, std::vector<int>{s}, allowed);
}

}  // namespace

CycleSet enumerate_short_cycles(const MultiGraph& g, long bound, ExpansionBudget* budget) {
    CycleSet out;
    out.bound = bound;
    for (int pos = 0; pos < g.num_edges(); ++pos) {
        const Edge& e = g.edge(pos);
        if (e.is_loop() && e.len <= bound) out.cycles.push_back(Cycle{{e.u}, {pos}, e.len});
    }
    Search st(g, bound, budget);
    for (int s = 0; s < g.num_vertices(); ++s) {
        const std::vector<long> dist = restricted_distances(g, s);
        std::vector<Cycle> found;
        // Paths start at s and use vertices above s only, so s is the smallest vertex of each cycle.
        std::function<void(int, long)> dfs = [&](int x, long len) {
            st.spend();
            for (int pos : g.incident(x)) {
                const Edge& e = g.edge(pos);
                if (e.is_loop()) continue;
                const int y = g.other_end(pos, x);
                const long nl = len + e.len;
                if (nl > bound) continue;
                if (y == s) {
                    const std::size_t k = st.path_v.size();
                    if (k < 2) continue;
                    const bool canonical = k >= 3 ? st.path_v[1] < st.path_v[k - 1] : st.path_e[0] < pos;
                    if (canonical) found.push_back(st.close(pos, nl));
                    continue;
                }
                if (y < s || st.on_path[y]) continue;
                if (nl + dist[y] > bound) continue;
                st.on_path[y] = 1;
                st.path_v.push_back(y);
                st.path_e.push_back(pos);
                dfs(y, nl);
                st.path_v.pop_back();
                st.path_e.pop_back();
                st.on_path[y] = 0;
            }
        };
        st.on_path[s] = 1;
        st.path_v = {s};
        st.path_e.clear();
        dfs(s, 0);
        st.on_path[s] = 0;
        for (auto& c : found) out.cycles.push_back(std::move(c));
    }
    return out;
}

std::optional<Cycle> find_cycle(const MultiGraph& g, long bound, int through,
                                const std::function<bool(const Cycle&)>& accept, ExpansionBudget* budget) {
    for (int pos : g.incident(through)) {
        const Edge& e = g.edge(pos);
        if (e.is_loop() && e.len <= bound) {
            Cycle c{{through}, {pos}, e.len};
            if (accept(c)) return c;
        }
    }
    const std::vector<long> dist = distances_from(g, through);
    Search st(g, bound, budget);
    std::optional<Cycle> hit;
    std::function<bool(int, long)> dfs = [&](int x, long len) -> bool {
        st.spend();
        for (int pos : g.incident(x)) {
            const Edge& e = g.edge(pos);
            if (e.is_loop()) continue;
            const int y = g.other_end(pos, x);
            const long nl = len + e.len;
            if (nl > bound) continue;
            if (y == through) {
                const std::size_t k = st.path_v.size();
                if (k < 2 || (k == 2 && st.path_e[0] == pos)) continue;
                Cycle c = st.close(pos, nl);
                if (accept(c)) {
                    hit = std::move(c);
                    return true;
                }
                continue;
            }
            if (st.on_path[y] || nl + dist[y] > bound) continue;
            st.on_path[y] = 1;
            st.path_v.push_back(y);
            st.path_e.push_back(pos);
            if (dfs(y, nl)) return true;
            st.path_v.pop_back();
            st.path_e.pop_back();
            st.on_path[y] = 0;
        }
        return false;
    };
    st.on_path[through] = 1;
    st.path_v = {through};
    dfs(through, 0);
    return hit;
}

long girth(const MultiGraph& g) {
    long best = kUnreachable;
    std::vector<char> allowed(g.num_edges(), 1);
    for (int pos = 0; pos < g.num_edges(); ++pos) {
        const Edge& e = g.edge(pos);
        if (e.is_loop()) {
            best = std::min(best, e.len);
            continue;
        }
        allowed[pos] = 0;
        const long d = distances_from(g, std::vector<int>{e.u}, allowed)[e.v];
        allowed[pos] = 1;
        if (d != kUnreachable) best = std::min(best, d + e.len);
    }
    return best;
}

long cycle_space_dim(const MultiGraph& g) {
    return static_cast<long>(g.num_edges()) - g.num_vertices() + num_components(g);
}

gf2::BitVector edge_vector(const MultiGraph& g, const std::vector<int>& edge_positions) {
    gf2::BitVector v(static_cast<std::size_t>(g.num_edges()));
    for (int pos : edge_positions) v.flip(static_cast<std::size_t>(pos));
    return v;
}

long short_cycle_rank(const MultiGraph& g, long bound, ExpansionBudget* budget) {
    // Every cycle is admitted, and cycles span the cycle space.
    if (bound >= g.total_length()) return cycle_space_dim(g);
    const CycleSet cs = enumerate_short_cycles(g, bound, budget);
    gf2::Basis basis(static_cast<std::size_t>(g.num_edges()));
    for (const Cycle& c : cs.cycles) basis.insert(edge_vector(g, c.edges));
    return static_cast<long>(basis.rank());
}

Triplex triplex(const MultiGraph& g, Scale r, ExpansionBudget* budget) {
    return Triplex{cycle_space_dim(g), short_cycle_rank(g, r.bound_for(g), budget), g.num_vertices()};
}

bool check_generation(const MultiGraph& ball_as_graph, Scale r, ExpansionBudget* budget) {
    return short_cycle_rank(ball_as_graph, r.bound_for(ball_as_graph), budget) == cycle_space_dim(ball_as_graph);
}

bool check_generation(const MultiGraph& g, const Ball& b, Scale r, ExpansionBudget* budget) {
    return check_generation(ball_graph(g, b), r, budget);
}

}  // namespace locsep
