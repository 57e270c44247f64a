#include "locsep/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "locsep/decomposition.hpp"

namespace locsep::oracle {

namespace {

constexpr long kFar = std::numeric_limits<long>::max() / 4;
constexpr std::size_t kMaxPaths = 200000;

std::vector<long> bfs(const MultiGraph& g, int s, const std::vector<char>& edge_ok = {}) {
    std::vector<long> d(g.num_vertices(), kFar);
    std::vector<int> q{s};
    d[s] = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const int x = q[i];
        for (int pos : g.incident(x)) {
            if (!edge_ok.empty() && !edge_ok[pos]) continue;
            const int y = g.other_end(pos, x);
            if (d[y] == kFar) {
                d[y] = d[x] + 1;
                q.push_back(y);
            }
        }
    }
    return d;
}

bool within(long twice, Scale r) { return r.infinite || twice <= r.value; }

/// Ball of radius r/2: a vertex is in when its distance is at most r/2, an edge when every
/// half-step sample point along it is.
struct OBall {
    std::vector<long> dist;
    std::vector<char> member;
    std::vector<char> kept;
};

OBall oball(const MultiGraph& g, int c, Scale r) {
    OBall b;
    b.dist = bfs(g, c);
    b.member.assign(g.num_vertices(), 0);
    b.kept.assign(g.num_edges(), 0);
    for (int x = 0; x < g.num_vertices(); ++x) b.member[x] = b.dist[x] != kFar && within(2 * b.dist[x], r);
    for (int pos = 0; pos < g.num_edges(); ++pos) {
        const Edge& e = g.edge(pos);
        if (!b.member[e.u] || !b.member[e.v]) continue;
        bool all = true;
        for (long t2 = 1; t2 < 2 * e.len; ++t2)
            all = all && within(std::min(2 * b.dist[e.u] + t2, 2 * b.dist[e.v] + 2 * e.len - t2), r);
        b.kept[pos] = all;
    }
    return b;
}

/// Components of the vertices flagged `alive` using the edges flagged `usable` between them.
int count_components(const MultiGraph& g, const std::vector<char>& alive, const std::vector<char>& usable) {
    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int pos = 0; pos < g.num_edges(); ++pos) {
        const Edge& e = g.edge(pos);
        if (usable[pos] && alive[e.u] && alive[e.v]) parent[find(e.u)] = find(e.v);
    }
    std::set<int> roots;
    for (int x = 0; x < g.num_vertices(); ++x)
        if (alive[x]) roots.insert(find(x));
    return static_cast<int>(roots.size());
}

using Path = std::vector<int>;
using Label = std::vector<Path>;

/// Every shortest path from the core to each ball member, inside the ball.
std::vector<Label> core_labels(const MultiGraph& g, const OBall& b, const std::vector<char>& core) {
    std::vector<long> d(g.num_vertices(), kFar);
    std::vector<int> q;
    for (int x = 0; x < g.num_vertices(); ++x)
        if (core[x] && b.member[x]) {
            d[x] = 0;
            q.push_back(x);
        }
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int pos : g.incident(q[i])) {
            if (!b.kept[pos]) continue;
            const int y = g.other_end(pos, q[i]);
            if (d[y] == kFar) {
                d[y] = d[q[i]] + 1;
                q.push_back(y);
            }
        }
    std::vector<Label> label(g.num_vertices());
    std::size_t total = 0;
    for (int x : q) {  // BFS order: predecessors come first
        if (d[x] == 0) {
            label[x] = {Path{}};
            continue;
        }
        for (int pos : g.incident(x)) {
            if (!b.kept[pos] || g.edge(pos).is_loop()) continue;
            const int p = g.other_end(pos, x);
            if (d[p] != d[x] - 1) continue;
            for (const Path& sp : label[p]) {
                Path ext = sp;
                ext.push_back(pos);
                label[x].push_back(std::move(ext));
            }
        }
        std::sort(label[x].begin(), label[x].end());
        total += label[x].size();
        require(total <= kMaxPaths, ErrorKind::cap_exceeded, "oracle path enumeration exceeds its cap");
    }
    return label;
}

std::vector<char> all_edges(const MultiGraph& g) { return std::vector<char>(g.num_edges(), 1); }

long oracle_girth_of_component(const MultiGraph& g, const std::vector<char>& in_comp) {
    long best = kFar;
    std::vector<char> ok = all_edges(g);
    for (int pos = 0; pos < g.num_edges(); ++pos) {
        const Edge& e = g.edge(pos);
        if (!in_comp[e.u]) continue;
        if (e.is_loop()) {
            best = std::min(best, 1L);
            continue;
        }
        ok[pos] = 0;
        const long d = bfs(g, e.u, ok)[e.v];
        ok[pos] = 1;
        if (d != kFar) best = std::min(best, d + 1);
    }
    return best;
}

std::vector<std::vector<int>> oracle_components(const MultiGraph& g) {
    std::vector<int> comp(g.num_vertices(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (comp[s] >= 0) continue;
        const std::vector<long> d = bfs(g, s);
        out.emplace_back();
        for (int x = 0; x < g.num_vertices(); ++x)
            if (d[x] != kFar) {
                comp[x] = static_cast<int>(out.size()) - 1;
                out.back().push_back(x);
            }
    }
    return out;
}

}  // namespace

void OracleReport::fail(const std::string& what) {
    if (pass) counterexample = what;
    pass = false;
}

std::string OracleReport::json_line() const {
    nlohmann::ordered_json j{{"check", check}, {"instance", instance}, {"verdict", pass ? "pass" : "fail"}};
    if (counterexample) j["counterexample"] = *counterexample;
    return j.dump();
}

MultiGraph subdivided(const MultiGraph& g) {
    MultiGraph s;
    for (int x = 0; x < g.num_vertices(); ++x) s.add_vertex(g.name(x));
    for (const Edge& e : g.edges()) {
        int prev = e.u;
        for (long t = 1; t < e.len; ++t) {
            const int x = s.add_vertex("~" + std::to_string(e.id) + "." + std::to_string(t));
            s.add_edge(prev, x, 1, e.tag);
            prev = x;
        }
        s.add_edge(prev, e.v, 1, e.tag);
    }
    return s;
}

void check_caps(const MultiGraph& g, Scale r) {
    require(g.unit_lengths(), ErrorKind::precondition, "oracle needs unit lengths");
    require(g.num_vertices() <= kMaxVertices, ErrorKind::cap_exceeded,
            "oracle graph has " + std::to_string(g.num_vertices()) + " vertices, cap is " + std::to_string(kMaxVertices));
    require(r.infinite || r.value <= kMaxScale, ErrorKind::cap_exceeded, "oracle scale cap is " + std::to_string(kMaxScale));
}

bool oracle_cutvertex(const MultiGraph& g, int v, Scale r) {
    check_caps(g, r);
    const OBall b = oball(g, v, r);
    std::vector<char> alive = b.member;
    alive[v] = 0;
    return count_components(g, alive, b.kept) >= 2;
}

std::vector<std::vector<int>> oracle_separator_parts(const MultiGraph& g, int v, int w, Scale r) {
    check_caps(g, r);
    require(v != w, ErrorKind::precondition, "oracle separator needs two vertices");
    const std::vector<long> dv = bfs(g, v);
    const long d = dv[w];
    if (d == kFar || !within(2 * d, r)) return {};
    const std::vector<long> dw = bfs(g, w);
    std::vector<char> core(g.num_vertices(), 0);
    for (int x = 0; x < g.num_vertices(); ++x) core[x] = dv[x] != kFar && dv[x] + dw[x] == d;

    const OBall bv = oball(g, v, r);
    const OBall bw = oball(g, w, r);
    const std::vector<Label> lv = core_labels(g, bv, core);
    const std::vector<Label> lw = core_labels(g, bw, core);
    // copy ids per side; a w-side member shares the v-side copy only when the labels agree
    std::vector<int> cv(g.num_vertices(), -1), cw(g.num_vertices(), -1);
    int copies = 0;
    for (int x = 0; x < g.num_vertices(); ++x)
        if (bv.member[x]) cv[x] = copies++;
    for (int x = 0; x < g.num_vertices(); ++x)
        if (bw.member[x]) cw[x] = bv.member[x] && lv[x] == lw[x] ? cv[x] : copies++;
    std::set<std::tuple<int, int, int>> edges;
    for (int pos = 0; pos < g.num_edges(); ++pos) {
        const Edge& e = g.edge(pos);
        if (bv.kept[pos]) edges.insert({std::min(cv[e.u], cv[e.v]), std::max(cv[e.u], cv[e.v]), pos});
        if (bw.kept[pos]) edges.insert({std::min(cw[e.u], cw[e.v]), std::max(cw[e.u], cw[e.v]), pos});
    }
    const int gone_v = cv[v], gone_w = cw[w];
    std::vector<int> parent(copies);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [a, b, pos] : edges) {
        (void)pos;
        if (a == gone_v || a == gone_w || b == gone_v || b == gone_w) continue;
        parent[find(a)] = find(b);
    }
    std::vector<int> host(copies);
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (cv[x] >= 0) host[cv[x]] = x;
        if (cw[x] >= 0) host[cw[x]] = x;
    }
    std::map<int, std::vector<int>> parts;
    for (int c = 0; c < copies; ++c)
        if (c != gone_v && c != gone_w) parts[find(c)].push_back(host[c]);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : parts) out.push_back(std::move(members));
    return out;
}

int oracle_separator_components(const MultiGraph& g, int v, int w, Scale r) {
    return static_cast<int>(oracle_separator_parts(g, v, w, r).size());
}



bool oracle_separator(const MultiGraph& g, int v, int w, Scale r) { return oracle_separator_components(g, v, w, r) >= 2; }

bool oracle_locally_2_connected(const MultiGraph& g, Scale r) {
    check_caps(g, r);
    if (g.num_vertices() == 0) return true;
    if (!r.infinite && r.value < 3) return false;
    for (const auto& comp : oracle_components(g)) {
        std::vector<char> in(g.num_vertices(), 0);
        for (int x : comp) in[x] = 1;
        const long girth = oracle_girth_of_component(g, in);
        if (girth == kFar || !r.admits(girth)) return false;
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (oracle_cutvertex(g, v, r)) return false;
    return true;
}

bool oracle_locally_3_connected(const MultiGraph& g, Scale r) {
    if (!oracle_locally_2_connected(g, r)) return false;
    for (const auto& comp : oracle_components(g))
        if (comp.size() < 4) return false;
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int w = v + 1; w < g.num_vertices(); ++w)
            if (oracle_separator(g, v, w, r)) return false;
    return true;
}

bool oracle_basic(const MultiGraph& weighted, Scale r) {
    const bool connected = weighted.num_vertices() > 0 && oracle_components(weighted).size() == 1;
    bool cycle = connected;
    for (int x = 0; x < weighted.num_vertices() && cycle; ++x) {
        int deg = 0;
        for (int pos : weighted.incident(x)) deg += weighted.edge(pos).is_loop() ? 2 : 1;
        cycle = deg == 2;
    }
    if (cycle && r.admits(weighted.total_length())) return true;
    if (!connected || weighted.num_vertices() < 4) return false;
    const MultiGraph sub = subdivided(weighted);
    if (!oracle_locally_2_connected(sub, r)) return false;
    const int real = weighted.num_vertices();  // subdivided() keeps the original vertices first
    for (int v = 0; v < real; ++v)
        for (int w = v + 1; w < real; ++w) {
            int reaching = 0;
            for (const auto& part : oracle_separator_parts(sub, v, w, r))
                if (std::any_of(part.begin(), part.end(), [&](int x) { return x < real; })) ++reaching;
            if (reaching >= 2) return false;
        }
    return true;
}

bool classical_cutvertex(const MultiGraph& g, int v) {
    std::vector<char> ok = all_edges(g);
    for (int pos : g.incident(v)) ok[pos] = 0;
    std::set<int> nbrs;
    for (int pos : g.incident(v))
        if (!g.edge(pos).is_loop()) nbrs.insert(g.other_end(pos, v));
    if (nbrs.empty()) return false;
    const std::vector<long> d = bfs(g, *nbrs.begin(), ok);
    for (int y : nbrs)
        if (d[y] == kFar) return true;
    return false;
}

bool classical_2_separator(const MultiGraph& g, int v, int w) {
    if (v == w) return false;
    const std::vector<long> dv = bfs(g, v);
    if (dv[w] == kFar) return false;
    std::vector<char> ok = all_edges(g);
    for (int pos : g.incident(v)) ok[pos] = 0;
    for (int pos : g.incident(w)) ok[pos] = 0;
    std::vector<int> rest;
    for (int x = 0; x < g.num_vertices(); ++x)
        if (x != v && x != w && dv[x] != kFar) rest.push_back(x);
    if (rest.empty()) return false;
    const std::vector<long> d = bfs(g, rest.front(), ok);
    for (int x : rest)
        if (d[x] == kFar) return true;
    return false;
}

OracleReport oracle_classical(const MultiGraph& g, const std::string& instance) {
    OracleReport rep{"classical", instance};
    const Scale inf = Scale::inf();
    for (int v = 0; v < g.num_vertices(); ++v) {
        const bool classical = classical_cutvertex(g, v);
        if (is_local_cutvertex(g, v, inf).is_cutvertex != classical || oracle_cutvertex(g, v, inf) != classical)
            rep.fail("cutvertex disagreement at " + g.name(v));
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int w = v + 1; w < g.num_vertices(); ++w) {
            const bool classical = classical_2_separator(g, v, w);
            if (is_local_2_separator(g, v, w, inf) != classical || oracle_separator(g, v, w, inf) != classical)
                rep.fail("2-separator disagreement at " + g.name(v) + "," + g.name(w));
        }
    const CanonicalResult c = canonical_decomposition(g, inf);
    for (std::size_t b = 0; b < c.decomposition.bags.size(); ++b) {
        const MultiGraph t = torso(c.decomposition, static_cast<int>(b));
        bool cycle = oracle_components(t).size() == 1;
        for (int x = 0; x < t.num_vertices() && cycle; ++x) cycle = t.degree(x) == 2;
        bool three_connected = t.num_vertices() >= 4;
        for (int v = 0; v < t.num_vertices() && three_connected; ++v) {
            three_connected = !classical_cutvertex(t, v);
            for (int w = v + 1; w < t.num_vertices() && three_connected; ++w) three_connected = !classical_2_separator(t, v, w);
        }
        if (!cycle && !three_connected) rep.fail("torso of bag " + std::to_string(b) + " is neither a cycle nor 3-connected");
    }
    return rep;
}

bool provenance_isomorphic(const MultiGraph& a, const Provenance& pa, const MultiGraph& b, const Provenance& pb) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::multiset<std::string> ra, rb;
    for (const auto& o : pa) ra.insert(o.root);
    for (const auto& o : pb) rb.insert(o.root);
    if (ra != rb) return false;
    std::vector<int> f(a.num_vertices(), -1), used(b.num_vertices(), 0);
    auto assign = [&](int x, int y) {
        if (pa[x].root != pb[y].root) return false;
        if (f[x] == y) return true;
        if (f[x] >= 0 || used[y]) return false;
        f[x] = y;
        used[y] = 1;
        return true;
    };
    // Original edges keep their ids, which forces the endpoints.
    for (const Edge& e : a.edges()) {
        if (e.tag == EdgeTag::torso) continue;
        const auto pos = b.edge_position(e.id);
        if (!pos) return false;
        const Edge& o = b.edge(*pos);
        if (o.len != e.len || o.tag != e.tag) return false;
        const bool straight = pa[e.u].root == pb[o.u].root && pa[e.v].root == pb[o.v].root;
        const bool crossed = pa[e.u].root == pb[o.v].root && pa[e.v].root == pb[o.u].root;
        if (straight && crossed && e.u != e.v) continue;  // decided by another edge or the search
        if (straight ? !(assign(e.u, o.u) && assign(e.v, o.v)) : !(crossed && assign(e.u, o.v) && assign(e.v, o.u)))
            return false;
    }
    auto torso_multiset = [](const MultiGraph& g, const std::function<int(int)>& map) {
        std::multiset<std::tuple<int, int, long>> out;
        for (const Edge& e : g.edges())
            if (e.tag == EdgeTag::torso) out.insert({std::min(map(e.u), map(e.v)), std::max(map(e.u), map(e.v)), e.len});
        return out;
    };
    const auto target = torso_multiset(b, [](int x) { return x; });
    std::vector<int> open;
    for (int x = 0; x < a.num_vertices(); ++x)
        if (f[x] < 0) open.push_back(x);
    auto consistent = [&]() {
        for (const Edge& e : a.edges()) {
            if (e.tag == EdgeTag::torso) continue;
            const Edge& o = b.edge(*b.edge_position(e.id));
            if (std::minmax(f[e.u], f[e.v]) != std::minmax(o.u, o.v)) return false;
        }
        return torso_multiset(a, [&](int x) { return f[x]; }) == target;
    };
    std::function<bool(std::size_t)> search = [&](std::size_t i) {
        if (i == open.size()) return consistent();
        const int x = open[i];
        for (int y = 0; y < b.num_vertices(); ++y) {
            if (used[y] || pb[y].root != pa[x].root) continue;
            f[x] = y;
            used[y] = 1;
            if (search(i + 1)) return true;
            used[y] = 0;
            f[x] = -1;
        }
        return false;
    };
    return search(0);
}

OracleReport oracle_commute(const MultiGraph& g, const std::vector<std::pair<std::string, std::string>>& seps, Scale r,
                            int trials, std::mt19937_64& rng, const std::string& instance) {
    OracleReport rep{"commute", instance};
    const CutAllResult base = cut_all(g, seps, r);
    CutAllOptions opts;
    opts.sort = false;
    opts.verify_noncrossing = false;
    for (int t = 0; t < trials; ++t) {
        auto order = seps;
        std::shuffle(order.begin(), order.end(), rng);
        for (auto& p : order)
            if (std::uniform_int_distribution<int>(0, 1)(rng)) std::swap(p.first, p.second);
        const CutAllResult other = cut_all(g, order, r, opts);
        if (!provenance_isomorphic(base.graph, base.provenance, other.graph, other.provenance))
            rep.fail("order " + std::to_string(t) + " gives a different graph");
    }
    return rep;
}

OracleReport oracle_vertex_commute(const MultiGraph& g, Scale r, int trials, std::mt19937_64& rng,
                                   const std::string& instance) {
    OracleReport rep{"vertex_commute", instance};
    const CutResult all = cut_all_vertices(g, r);
    for (int t = 0; t < trials; ++t) {
        std::vector<std::string> order = g.names();
        std::shuffle(order.begin(), order.end(), rng);
        MultiGraph h = g;
        Provenance p = identity_provenance(g);
        for (const auto& v : order) {
            CutResult c = cut_vertex(h, h.index(v), r, &p);
            h = std::move(c.graph);
            p = std::move(c.provenance);
        }
        if (!provenance_isomorphic(all.graph, all.provenance, h, p))
            rep.fail("sequential order " + std::to_string(t) + " differs from the simultaneous cut");
    }
    return rep;
}

bool double_ball_separator(const MultiGraph& g, int v, int w, Scale r) {
    require(g.unit_lengths(), ErrorKind::precondition, "double-balls need unit lengths");
    if (v == w) return false;
    const OBall bv = oball(g, v, r);
    if (bv.dist[w] == kFar || !within(2 * bv.dist[w], r)) return false;
    const OBall bw = oball(g, w, r);
    std::vector<char> alive(g.num_vertices()), usable(g.num_edges());
    for (int x = 0; x < g.num_vertices(); ++x) alive[x] = (bv.member[x] || bw.member[x]) && x != v && x != w;
    for (int pos = 0; pos < g.num_edges(); ++pos) usable[pos] = bv.kept[pos] || bw.kept[pos];
    return count_components(g, alive, usable) >= 2;
}

ProjectionTally projection_tally(const MultiGraph& g, const CutAllResult& cut, Scale r) {
    ProjectionTally t;
    const MultiGraph sub = subdivided(cut.graph);
    const int real = cut.graph.num_vertices();  // subdivided() keeps the original vertices first
    for (int x = 0; x < real; ++x) {
        for (int y = x + 1; y < real; ++y) {
            const std::string& rx = cut.provenance[x].root;
            const std::string& ry = cut.provenance[y].root;
            if (rx == ry) continue;
            ++t.pairs;
            const int gx = g.index(rx), gy = g.index(ry);
            if (double_ball_separator(sub, x, y, r) && !double_ball_separator(g, gx, gy, r)) {
                ++t.double_ball_failures;
                t.double_ball_witnesses.emplace_back(sub.name(x), sub.name(y));
            }
            if (is_local_2_separator(sub, x, y, r) && !is_local_2_separator(g, gx, gy, r)) ++t.expl_failures;
        }
    }
    return t;
}

namespace {

/// Cycle v0..v{n-1} plus a triangulated ladder of `len` squares. Its first rung is glued to the
/// cycle edge v0 v1 and its last rung to v{q} v{q+1}, so that no end of the strip is a cutvertex.
MultiGraph crossing_strip_graph(int n, int q, int len) {
    MultiGraph g;
    auto add = [&](const std::string& a, const std::string& b) {
        const int x = g.ensure_vertex(a);
        const int y = g.ensure_vertex(b);
        g.add_edge(x, y);
    };
    auto v = [](int i) { return "v" + std::to_string(i); };
    auto s = [](int i) { return "s" + std::to_string(i); };
    auto t = [](int i) { return "t" + std::to_string(i); };
    for (int i = 0; i < n; ++i) add(v(i), v((i + 1) % n));
    for (int i = 0; i <= len; ++i) {
        add(s(i), t(i));
        if (i < len) {
            add(s(i), s(i + 1));
            add(t(i), t(i + 1));
            add(s(i), t(i + 1));
        }
    }
    add(v(1), s(0));
    add(v(1), t(0));
    add(v(0), t(0));
    add(v(q + 1), s(len));
    add(v(q + 1), t(len));
    add(v(q), t(len));
    return g;
}

}  // namespace

CrossingStripFixture build_crossing_strip_fixture() {
    auto v = [](int i) { return "v" + std::to_string(i); };
    // a1 = v0, b1 = vq, a2 = v{n/2}, b2 = v{n/2+q}; the strip runs from v1 (between a1 and b1)
    // to v{q+1}, so it reaches a1 sooner than b1 and b2 do.
    for (long rv = 4; rv <= 12; ++rv) {
        const Scale r = Scale::of(rv);
        for (int n = 4; n <= rv; n += 2) {
            for (int q = 2; q + 2 <= n / 2; ++q) {
                const int b2 = n / 2 + q;
                for (int len = 1; len <= 2 * rv + 2; ++len) {
                    const MultiGraph g = crossing_strip_graph(n, q, len);
                    const int a1 = g.index(v(0)), a2 = g.index(v(n / 2));
                    const int i1 = g.index(v(q)), i2 = g.index(v(b2));
                    if (!double_ball_separator(g, a1, a2, r) || !double_ball_separator(g, i1, i2, r)) continue;
                    if (double_ball_separator(g, a1, i1, r)) continue;
                    if (!is_local_2_separator(g, i1, i2, r) || !is_locally_2_connected(g, r)) continue;
                    const CutAllResult cut = cut_all(g, {{v(q), v(b2)}}, r);
                    const MultiGraph sub = subdivided(cut.graph);
                    const int a1c = sub.index(v(0));
                    bool corner = false;
                    for (int z = 0; z < cut.graph.num_vertices() && !corner; ++z)
                        corner = cut.provenance[z].root == v(q) && double_ball_separator(sub, a1c, z, r);
                    if (corner) return CrossingStripFixture{g, r, v(0), v(n / 2), v(q), v(b2), n, len};
                }
            }
        }
    }
    fail(ErrorKind::precondition, "no strip length yields the double-ball regression for r <= 12");
}

OracleReport oracle_double_ball_regression(const MultiGraph& g, const std::vector<std::pair<std::string, std::string>>& pairs,
                                           Scale r, bool expect_regression, const std::string& instance) {
    OracleReport rep{"double_ball_regression", instance};
    const ProjectionTally t = projection_tally(g, cut_all(g, pairs, r), r);
    if (t.expl_failures > 0) rep.fail(std::to_string(t.expl_failures) + " local 2-separators do not project");
    if ((t.double_ball_failures > 0) != expect_regression)
        rep.fail(expect_regression ? "every double-ball separator projects"
                                   : std::to_string(t.double_ball_failures) + " double-ball separators do not project");
    return rep;
}

}  // namespace locsep::oracle
