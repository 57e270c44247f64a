#include "locsep/fixtures.hpp"

#include <algorithm>
#include <set>

namespace locsep::fixtures {

namespace {

std::string vname(int i) { return "v" + std::to_string(i); }

void edge(MultiGraph& g, const std::string& a, const std::string& b) {
    const int x = g.ensure_vertex(a);
    const int y = g.ensure_vertex(b);
    g.add_edge(x, y);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<long> bfs(const MultiGraph& g, int s) {
    std::vector<long> d(g.num_vertices(), -1);
    std::vector<int> q{s};
    d[s] = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int pos : g.incident(q[i])) {
            const int y = g.other_end(pos, q[i]);
            if (d[y] < 0) {
                d[y] = d[q[i]] + 1;
                q.push_back(y);
            }
        }
    return d;
}

}  // namespace

MultiGraph prism6() {
    MultiGraph g;
    for (int i = 0; i < 6; ++i) {
        const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        const std::string a1 = "a" + std::to_string((i + 1) % 6), b1 = "b" + std::to_string((i + 1) % 6);
        edge(g, a, b);
        edge(g, a, a1);
        edge(g, b, b1);
        edge(g, a, b1);
        edge(g, b, a1);
    }
    return g;
}

MultiGraph cycle(int n) {
    MultiGraph g;
    for (int i = 0; i < n; ++i) edge(g, vname(i), vname((i + 1) % n));
    return g;
}

MultiGraph path(int n) {
    MultiGraph g;
    for (int i = 0; i + 1 < n; ++i) edge(g, "p" + std::to_string(i), "p" + std::to_string(i + 1));
    return g;
}

MultiGraph complete(int n) {
    MultiGraph g;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edge(g, vname(i), vname(j));
    return g;
}

MultiGraph bowtie() {
    MultiGraph g;
    edge(g, "a", "b");
    edge(g, "b", "c");
    edge(g, "c", "a");
    edge(g, "c", "d");
    edge(g, "d", "e");
    edge(g, "e", "c");
    return g;
}

MultiGraph theta(int paths, int len) {
    MultiGraph g;
    g.add_vertex("s");
    g.add_vertex("t");
    for (int p = 0; p < paths; ++p) {
        std::string prev = "s";
        for (int i = 1; i < len; ++i) {
            const std::string x = "x" + std::to_string(p) + "_" + std::to_string(i);
            edge(g, prev, x);
            prev = x;
        }
        edge(g, prev, "t");
    }
    return g;
}

MultiGraph diamond() {
    MultiGraph g;
    edge(g, "a", "b");
    edge(g, "a", "c");
    edge(g, "b", "c");
    edge(g, "b", "d");
    edge(g, "c", "d");
    return g;
}

MultiGraph triple_glued_ring() {
    auto name = [](int i) { return i % 10 == 0 ? std::string("c") : vname(i); };
    MultiGraph g;
    for (int i = 0; i < 30; ++i) {
        edge(g, name(i), name((i + 1) % 30));
        edge(g, name(i), name((i + 2) % 30));
    }
    return g;
}

std::vector<Named> all() {
    return {
        {"PRISM6", prism6(), Scale::of(3)},      {"C6", cycle(6), Scale::of(6)},
        {"C8", cycle(8), Scale::of(8)},          {"K4", complete(4), Scale::of(3)},
        {"TRIANGLE", complete(3), Scale::of(3)}, {"THETA", theta(), Scale::of(4)},
        {"DIAMOND", diamond(), Scale::of(3)},    {"BOWTIE", bowtie(), Scale::of(3)},
        {"K5", complete(5), Scale::of(3)},
    };
}

MultiGraph random_ear_graph(Rng& rng, int max_vertices, Scale r) {
    const int cap = r.infinite ? max_vertices : static_cast<int>(std::min<long>(r.value, max_vertices));
    MultiGraph g;
    const int c = uniform(rng, 3, std::max(3, cap));
    for (int i = 0; i < c; ++i) edge(g, vname(i), vname((i + 1) % c));
    const int target = uniform(rng, c, max_vertices);
    int attempts = 0;
    while (g.num_vertices() < target && attempts++ < 200) {
        const int u = uniform(rng, 0, g.num_vertices() - 1);
        const std::vector<long> d = bfs(g, u);
        std::vector<int> far;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (v != u) far.push_back(v);
        const int v = far[uniform(rng, 0, static_cast<int>(far.size()) - 1)];
        const long room = (r.infinite ? 2L * max_vertices : r.value) - d[v];
        const long left = target - g.num_vertices() + 1;
        if (room < 2) continue;
        const int len = uniform(rng, 2, static_cast<int>(std::min(room, left)));
        std::string prev = g.name(u);
        for (int i = 1; i < len; ++i) {
            const std::string x = vname(g.num_vertices());
            edge(g, prev, x);
            prev = x;
        }
        edge(g, prev, g.name(v));
    }
    // A few chords; parallel chords make digons.
    const int chords = uniform(rng, 0, 2);
    for (int i = 0; i < chords; ++i) {
        const int u = uniform(rng, 0, g.num_vertices() - 1);
        const std::vector<long> d = bfs(g, u);
        std::vector<int> near;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (v != u && (r.infinite || d[v] + 1 <= r.value)) near.push_back(v);
        if (!near.empty()) g.add_edge(u, near[uniform(rng, 0, static_cast<int>(near.size()) - 1)]);
    }
    return g;
}

MultiGraph random_2_connected(Rng& rng, int max_vertices) {
    MultiGraph g;
    const int c = uniform(rng, 3, std::max(3, max_vertices / 2));
    for (int i = 0; i < c; ++i) edge(g, vname(i), vname((i + 1) % c));
    std::set<std::pair<int, int>> present;
    for (const Edge& e : g.edges()) present.insert(std::minmax(e.u, e.v));
    const int target = uniform(rng, c, max_vertices);
    int attempts = 0;
    while (attempts++ < 400) {
        const int u = uniform(rng, 0, g.num_vertices() - 1);
        const int v = uniform(rng, 0, g.num_vertices() - 1);
        if (u == v) continue;
        const int room = target - g.num_vertices();
        const int len = uniform(rng, 1, std::max(1, std::min(room + 1, 4)));
        if (len == 1) {
            if (present.count(std::minmax(u, v))) continue;
            present.insert(std::minmax(u, v));
            g.add_edge(u, v);
        } else {
            if (room < len - 1) continue;
            int prev = u;
            for (int i = 1; i < len; ++i) {
                const int x = g.add_vertex(vname(g.num_vertices()));
                g.add_edge(prev, x);
                present.insert(std::minmax(prev, x));
                prev = x;
            }
            g.add_edge(prev, v);
            present.insert(std::minmax(prev, v));
        }
        if (g.num_vertices() >= target && uniform(rng, 0, 3) == 0) break;
    }
    return g;
}

MultiGraph random_multigraph(Rng& rng, int max_vertices) {
    MultiGraph g;
    const int n = uniform(rng, 1, max_vertices);
    g.add_vertex(vname(0));
    for (int i = 1; i < n; ++i) {
        g.add_vertex(vname(i));
        g.add_edge(uniform(rng, 0, i - 1), i);
    }
    const int extra = uniform(rng, 0, n + 3);
    for (int i = 0; i < extra; ++i) {
        const int u = uniform(rng, 0, n - 1);
        const int kind = uniform(rng, 0, 5);
        if (kind == 0) {
            g.add_edge(u, u);
        } else if (kind == 1 && g.num_edges() > 0) {
            const Edge e = g.edge(uniform(rng, 0, g.num_edges() - 1));
            g.add_edge(e.u, e.v);
        } else {
            g.add_edge(u, uniform(rng, 0, n - 1));
        }
    }
    return g;
}

MultiGraph shuffle_names(Rng& rng, const MultiGraph& g) {
    std::vector<int> perm(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    MultiGraph h;
    for (int i = 0; i < g.num_vertices(); ++i) h.add_vertex(g.name(perm[i]));
    for (const Edge& e : g.edges()) h.add_edge(h.index(g.name(e.u)), h.index(g.name(e.v)), e.len, e.tag, e.id);
    return h;
}

}  // namespace locsep::fixtures
