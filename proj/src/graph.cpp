#include "locsep/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace locsep {

const char* to_string(EdgeTag tag) {
    switch (tag) {
        case EdgeTag::original: return "original";
        case EdgeTag::torso: return "torso";
        case EdgeTag::subdivision: return "subdivision";
    }
    return "original";
}

int MultiGraph::add_vertex(const std::string& name) {
    require(!name.empty(), ErrorKind::input, "empty vertex name");
    auto [it, inserted] = index_.emplace(name, num_vertices());
    require(inserted, ErrorKind::input, "duplicate vertex '" + name + "'");
    names_.push_back(name);
    incident_.emplace_back();
    return it->second;
}

int MultiGraph::ensure_vertex(const std::string& name) {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    return add_vertex(name);
}

int MultiGraph::add_edge(int u, int v, long len, EdgeTag tag, int id) {
    require(u >= 0 && u < num_vertices() && v >= 0 && v < num_vertices(), ErrorKind::input,
            "edge endpoint is not a vertex");
    require(len >= 1, ErrorKind::input, "edge length must be positive");
    if (id < 0) id = next_id_;
    auto [it, inserted] = id_to_pos_.emplace(id, num_edges());
    require(inserted, ErrorKind::input, "duplicate edge id " + std::to_string(id));
    next_id_ = std::max(next_id_, id + 1);
    const int pos = num_edges();
    edges_.push_back(Edge{id, u, v, len, tag});
    incident_[u].push_back(pos);
    if (u != v) incident_[v].push_back(pos);
    return pos;
}

std::optional<int> MultiGraph::find(const std::string& name) const {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    return std::nullopt;
}

int MultiGraph::index(const std::string& name) const {
    auto it = index_.find(name);
    require(it != index_.end(), ErrorKind::input, "unknown vertex '" + name + "'");
    return it->second;
}

int MultiGraph::other_end(int pos, int v) const {
    const Edge& e = edges_[pos];
    return e.u == v ? e.v : e.u;
}

std::optional<int> MultiGraph::edge_position(int id) const {
    if (auto it = id_to_pos_.find(id); it != id_to_pos_.end()) return it->second;
    return std::nullopt;
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (int pos : incident_[v]) d += edges_[pos].is_loop() ? 2 : 1;
    return d;
}

bool MultiGraph::unit_lengths() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.len == 1; });
}

long MultiGraph::total_length() const {
    long t = 0;
    for (const Edge& e : edges_) t += e.len;
    return t;
}

long Scale::bound_for(const MultiGraph& g) const { return infinite ? g.total_length() : value; }

std::string Scale::str() const { return infinite ? "inf" : std::to_string(value); }

Provenance identity_provenance(const MultiGraph& g) {
    Provenance p(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        p[v].kind = Origin::Kind::original;
        p[v].parent = p[v].root = g.name(v);
    }
    return p;
}

std::vector<long> distances_from(const MultiGraph& g, const std::vector<int>& sources,
                                 const std::vector<char>& allowed) {
    std::vector<long> dist(g.num_vertices(), kUnreachable);
    using Item = std::pair<long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (int s : sources) {
        dist[s] = 0;
        pq.emplace(0, s);
    }
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (d != dist[x]) continue;
        for (int pos : g.incident(x)) {
            if (!allowed.empty() && !allowed[pos]) continue;
            const Edge& e = g.edge(pos);
            if (e.is_loop()) continue;
            const int y = g.other_end(pos, x);
            if (d + e.len < dist[y]) {
                dist[y] = d + e.len;
                pq.emplace(dist[y], y);
            }
        }
    }
    return dist;
}

std::vector<long> distances_from(const MultiGraph& g, int source) {
    return distances_from(g, std::vector<int>{source}, {});
}

long distance(const MultiGraph& g, int u, int v) { return distances_from(g, u)[v]; }

long distance(const MultiGraph& g, const std::string& u, const std::string& v) {
    return distance(g, g.index(u), g.index(v));
}

Ball ball(const MultiGraph& g, int v, Radius2 radius2) {
    require(v >= 0 && v < g.num_vertices(), ErrorKind::input, "ball center is not a vertex");
    Ball b;
    b.center = v;
    b.radius2 = radius2;
    b.dist = distances_from(g, v);
    const long cap = radius2.max_distance();
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (b.dist[x] > cap) b.dist[x] = kUnreachable;
        if (b.dist[x] != kUnreachable) b.members.push_back(x);
    }
    for (int pos = 0; pos < g.num_edges(); ++pos) {
        const Edge& e = g.edge(pos);
        const bool ends_in = b.contains(e.u) && b.contains(e.v);
        const bool kept = ends_in && (radius2.infinite || b.dist[e.u] + b.dist[e.v] + e.len <= radius2.value);
        if (kept) {
            b.kept_edges.push_back(pos);
        } else if (!e.is_loop() && (e.u == v || e.v == v)) {
            b.detached.push_back(pos);
        }
    }
    return b;
}

MultiGraph subgraph(const MultiGraph& g, const std::vector<int>& vertices,
                    const std::vector<int>& edge_positions) {
    MultiGraph h;
    std::vector<int> map(g.num_vertices(), -1);
    for (int x : vertices) map[x] = h.add_vertex(g.name(x));
    for (int pos : edge_positions) {
        const Edge& e = g.edge(pos);
        require(map[e.u] >= 0 && map[e.v] >= 0, ErrorKind::precondition, "subgraph edge leaves vertex set");
        h.add_edge(map[e.u], map[e.v], e.len, e.tag, e.id);
    }
    return h;
}

MultiGraph ball_graph(const MultiGraph& g, const Ball& b) { return subgraph(g, b.members, b.kept_edges); }

MultiGraph remove_vertices(const MultiGraph& g, const std::vector<int>& vertices) {
    std::vector<char> gone(g.num_vertices(), 0);
    for (int x : vertices) gone[x] = 1;
    std::vector<int> keep_v, keep_e;
    for (int x = 0; x < g.num_vertices(); ++x)
        if (!gone[x]) keep_v.push_back(x);
    for (int pos = 0; pos < g.num_edges(); ++pos)
        if (!gone[g.edge(pos).u] && !gone[g.edge(pos).v]) keep_e.push_back(pos);
    return subgraph(g, keep_v, keep_e);
}

MultiGraph punctured_ball(const MultiGraph& g, int v, Radius2 radius2) {
    const Ball b = ball(g, v, radius2);
    MultiGraph bg = ball_graph(g, b);
    return remove_vertices(bg, {bg.index(g.name(v))});
}

std::vector<std::vector<int>> components(const MultiGraph& g) {
    const int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            out[c].push_back(x);
            for (int pos : g.incident(x)) {
                const int y = g.other_end(pos, x);
                if (comp[y] < 0) {
                    comp[y] = c;
                    stack.push_back(y);
                }
            }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    auto key = [&](const std::vector<int>& c) {
        return *std::min_element(c.begin(), c.end(), [&](int a, int b) { return g.name(a) < g.name(b); });
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return g.name(key(a)) < g.name(key(b)); });
    return out;
}

int num_components(const MultiGraph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const MultiGraph& g) { return num_components(g) <= 1; }

Subdivision subdivide(const MultiGraph& g) {
    Subdivision s;
    for (int v = 0; v < g.num_vertices(); ++v) s.graph.add_vertex(g.name(v));
    s.provenance = identity_provenance(g);
    int fresh = g.next_edge_id();
    for (const Edge& e : g.edges()) {
        if (e.len == 1) {
            s.graph.add_edge(e.u, e.v, 1, e.tag, e.id);
            continue;
        }
        int prev = e.u;
        for (long t = 1; t < e.len; ++t) {
            const std::string name = "~" + std::to_string(e.id) + "." + std::to_string(t);
            require(!g.find(name), ErrorKind::input, "vertex name clashes with subdivision point " + name);
            const int x = s.graph.add_vertex(name);
            Origin o;
            o.kind = Origin::Kind::interior;
            o.edge_id = e.id;
            o.offset = t;
            s.provenance.push_back(o);
            s.graph.add_edge(prev, x, 1, EdgeTag::subdivision, fresh++);
            prev = x;
        }
        s.graph.add_edge(prev, e.v, 1, EdgeTag::subdivision, fresh++);
    }
    return s;
}

MultiGraph parse_edge_list(std::istream& in) {
    MultiGraph g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string u, w, extra;
        long len = 1;
        ls >> u >> w;
        const std::string where = "line " + std::to_string(lineno);
        require(!w.empty(), ErrorKind::input, where + ": expected 'u w [len]'");
        if (ls >> extra) {
            std::size_t used = 0;
            try {
                len = std::stol(extra, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            require(used == extra.size() && len >= 1, ErrorKind::input, where + ": bad length '" + extra + "'");
            require(!(ls >> extra), ErrorKind::input, where + ": trailing tokens");
        }
        const int a = g.ensure_vertex(u);
        const int b = g.ensure_vertex(w);
        g.add_edge(a, b, len);
    }
    return g;
}

MultiGraph parse_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

MultiGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::input, "cannot read '" + path + "'");
    return parse_edge_list(in);
}

std::string to_edge_list(const MultiGraph& g) {
    std::ostringstream out;
    for (const Edge& e : g.edges()) {
        out << g.name(e.u) << ' ' << g.name(e.v);
        if (e.len != 1) out << ' ' << e.len;
        out << '\n';
    }
    return out.str();
}

bool same_labelled_graph(const MultiGraph& a, const MultiGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    for (int v = 0; v < a.num_vertices(); ++v)
        if (!b.find(a.name(v))) return false;
    for (const Edge& e : a.edges()) {
        auto pos = b.edge_position(e.id);
        if (!pos) return false;
        const Edge& f = b.edge(*pos);
        if (f.len != e.len) return false;
        const auto ea = std::minmax(a.name(e.u), a.name(e.v));
        const auto fb = std::minmax(b.name(f.u), b.name(f.v));
        if (ea != fb) return false;
    }
    return true;
}

}  // namespace locsep
