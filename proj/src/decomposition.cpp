#include "locsep/decomposition.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace locsep {

std::vector<int> GraphDecomposition::incidences_of_bag(int bag) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < incidences.size(); ++i)
        if (incidences[i].bag == bag) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> GraphDecomposition::incidences_of_separator(int sep) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < incidences.size(); ++i)
        if (incidences[i].sep == sep) out.push_back(static_cast<int>(i));
    return out;
}

void validate(const GraphDecomposition& d) {
    const int nb = static_cast<int>(d.bags.size());
    const int ns = static_cast<int>(d.separators.size());
    for (const auto& bag : d.bags)
        require(static_cast<int>(bag.roots.size()) == bag.graph.num_vertices(), ErrorKind::invariant,
                "bag roots do not match its vertices");
    // per (separator, bag): bag vertices already used by an image
    std::map<std::pair<int, int>, std::set<int>> used;
    for (const auto& inc : d.incidences) {
        require(inc.sep >= 0 && inc.sep < ns && inc.bag >= 0 && inc.bag < nb, ErrorKind::invariant,
                "decomposition edge does not join a separator and a bag");
        const auto& sep = d.separators[inc.sep];
        const auto& bag = d.bags[inc.bag];
        require(inc.iota.size() == sep.vertices.size(), ErrorKind::invariant, "embedding map has the wrong size");
        std::set<int> image;
        for (std::size_t i = 0; i < inc.iota.size(); ++i) {
            const int x = inc.iota[i];
            require(x >= 0 && x < bag.graph.num_vertices(), ErrorKind::invariant, "embedding map leaves the bag");
            require(bag.roots[x] == sep.vertices[i], ErrorKind::invariant,
                    "embedding map sends " + sep.vertices[i] + " to a copy of " + bag.roots[x]);
            image.insert(x);
        }
        require(image.size() == inc.iota.size(), ErrorKind::invariant, "embedding map is not injective");
        auto& taken = used[{inc.sep, inc.bag}];
        for (int x : image)
            require(taken.insert(x).second, ErrorKind::invariant,
                    "images of one separator overlap in bag " + std::to_string(inc.bag));
    }
}

namespace {

bool is_simple(const MultiGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges())
        if (e.is_loop() || !seen.insert(std::minmax(e.u, e.v)).second) return false;
    return true;
}

bool joined(const MultiGraph& g, const std::string& a, const std::string& b) {
    const int x = g.index(a);
    const int y = g.index(b);
    for (int pos : g.incident(x))
        if (g.other_end(pos, x) == y && x != y) return true;
    return false;
}

struct BagSplit {
    std::vector<int> bag_of;    // per vertex of the cut graph
    std::vector<int> local_of;  // index inside its bag
};

/// Bags are the components of `h`; a bag keeps the non-torso edges, torso edges return through
/// the embedding maps.
BagSplit split_into_bags(const MultiGraph& h, const Provenance& prov, GraphDecomposition& d) {
    BagSplit s;
    s.bag_of.assign(h.num_vertices(), -1);
    s.local_of.assign(h.num_vertices(), -1);
    for (const auto& comp : components(h)) {
        const int b = static_cast<int>(d.bags.size());
        std::vector<int> edges;
        for (int x : comp) {
            s.bag_of[x] = b;
            for (int pos : h.incident(x))
                if (h.edge(pos).u == x && h.edge(pos).tag != EdgeTag::torso) edges.push_back(pos);
        }
        std::sort(edges.begin(), edges.end());
        GraphDecomposition::Bag bag;
        bag.graph = subgraph(h, comp, edges);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            s.local_of[comp[i]] = static_cast<int>(i);
            require(!prov[comp[i]].root.empty(), ErrorKind::invariant, "bag vertex " + h.name(comp[i]) + " has no root");
            bag.roots.push_back(prov[comp[i]].root);
        }
        d.bags.push_back(std::move(bag));
    }
    return s;
}

void require_reproduces(const GraphDecomposition& d, const MultiGraph& g) {
    require(same_labelled_graph(underlying_graph(d), g), ErrorKind::invariant,
            "underlying graph of the decomposition differs from the input");
}

}  // namespace

GraphDecomposition build_decomposition(const MultiGraph& g, const CutAllResult& cut, Scale r) {
    GraphDecomposition d;
    d.r = r;
    const MultiGraph& h = cut.graph;
    const BagSplit split = split_into_bags(h, cut.provenance, d);
    for (const CutStep& step : cut.steps) {
        const int s = static_cast<int>(d.separators.size());
        const auto& [a, b] = step.separator;
        d.separators.push_back({{a, b}, joined(g, a, b)});
        for (const TorsoEdge& t : step.torso_edges) {
            const auto pos = h.edge_position(t.edge_id);
            require(pos.has_value(), ErrorKind::invariant, "torso edge " + std::to_string(t.edge_id) + " vanished");
            const Edge& e = h.edge(*pos);
            require(split.bag_of[e.u] == split.bag_of[e.v], ErrorKind::invariant,
                    "torso edge " + std::to_string(t.edge_id) + " joins two bags");
            const int bag = split.bag_of[e.u];
            const bool u_first = cut.provenance[e.u].root == a;
            const int xa = u_first ? e.u : e.v;
            const int xb = u_first ? e.v : e.u;
            require(cut.provenance[xa].root == a && cut.provenance[xb].root == b, ErrorKind::invariant,
                    "torso edge " + std::to_string(t.edge_id) + " does not end at its separator");
            d.incidences.push_back({s, bag, {split.local_of[xa], split.local_of[xb]}, e.len});
            if (t.artificial) d.bags[bag].artificial = true;
        }
    }
    validate(d);
    require_reproduces(d, g);
    return d;
}

MultiGraph torso(const GraphDecomposition& d, int bag) {
    require(bag >= 0 && bag < static_cast<int>(d.bags.size()), ErrorKind::input, "no bag " + std::to_string(bag));
    MultiGraph t = d.bags[bag].graph;
    for (int i : d.incidences_of_bag(bag)) {
        const auto& inc = d.incidences[i];
        if (inc.iota.size() == 2) t.add_edge(inc.iota[0], inc.iota[1], inc.torso_weight, EdgeTag::torso);
    }
    return t;
}

namespace {

struct Underlying {
    MultiGraph graph;
    std::vector<int> bag_of_edge;                 // per edge position of `graph`
    std::vector<std::pair<int, int>> local_ends;  // bag-local endpoints (u, v) per edge position
};

Underlying build_underlying(const GraphDecomposition& d) {
    MultiGraph u;
    std::vector<int> offset;
    for (std::size_t b = 0; b < d.bags.size(); ++b) {
        offset.push_back(u.num_vertices());
        const MultiGraph& bg = d.bags[b].graph;
        for (int x = 0; x < bg.num_vertices(); ++x) u.add_vertex(std::to_string(b) + ":" + bg.name(x));
        for (const Edge& e : bg.edges()) u.add_edge(offset[b] + e.u, offset[b] + e.v, e.len, e.tag, e.id);
    }
    // Current index of every vertex of the disjoint union while separators are identified one by one.
    std::vector<int> at(u.num_vertices());
    for (int x = 0; x < u.num_vertices(); ++x) at[x] = x;
    MultiGraph cur = u;
    for (std::size_t s = 0; s < d.separators.size(); ++s) {
        MultiGraph pattern;
        for (std::size_t i = 0; i < d.separators[s].vertices.size(); ++i) pattern.add_vertex(std::to_string(i));
        std::vector<Embedding> family;
        for (int i : d.incidences_of_separator(static_cast<int>(s))) {
            const auto& inc = d.incidences[i];
            Embedding emb;
            for (int x : inc.iota) emb.vertices.push_back(at[offset[inc.bag] + x]);
            family.push_back(std::move(emb));
        }
        if (family.size() < 2) continue;
        Identification id = identify_along(cur, pattern, family);
        for (int& x : at) x = id.class_of[x];
        cur = std::move(id.graph);
    }
    // Rename classes to their roots; a class must carry one root and a root one class.
    std::vector<std::string> root_of(cur.num_vertices());
    std::map<std::string, int> class_of_root;
    for (std::size_t b = 0; b < d.bags.size(); ++b) {
        for (std::size_t x = 0; x < d.bags[b].roots.size(); ++x) {
            const std::string& root = d.bags[b].roots[x];
            const int c = at[offset[b] + static_cast<int>(x)];
            require(root_of[c].empty() || root_of[c] == root, ErrorKind::invariant,
                    "identification merges " + root_of[c] + " with " + root);
            root_of[c] = root;
            auto [it, fresh] = class_of_root.emplace(root, c);
            require(fresh || it->second == c, ErrorKind::invariant, "copies of " + root + " are not identified");
        }
    }
    Underlying out;
    std::vector<int> idx(cur.num_vertices());
    for (int c = 0; c < cur.num_vertices(); ++c) idx[c] = out.graph.add_vertex(root_of[c]);
    for (std::size_t b = 0; b < d.bags.size(); ++b) {
        for (const Edge& e : d.bags[b].graph.edges()) {
            out.graph.add_edge(idx[at[offset[b] + e.u]], idx[at[offset[b] + e.v]], e.len, e.tag, e.id);
            out.bag_of_edge.push_back(static_cast<int>(b));
            out.local_ends.emplace_back(e.u, e.v);
        }
    }
    return out;
}

/// Label of an edge at one of its ends, from the point of view of one separator s: the
/// decomposition edge whose image holds that end's copy. A copy outside every image of s is
/// followed through the identifications made by the other separators; it takes the label of the
/// single image of s it reaches, or else a label shared by the copies it is identified with.
struct Labeller {
    const GraphDecomposition& d;
    const Underlying& u;
    std::vector<std::map<std::pair<int, int>, long>> labels;  // per separator: (bag, bag vertex) -> label
    std::vector<std::set<std::string>> members;

    Labeller(const GraphDecomposition& dec, const Underlying& und) : d(dec), u(und) {
        for (const auto& s : d.separators) members.emplace_back(s.vertices.begin(), s.vertices.end());
        // every copy of a separator vertex, as (bag, bag vertex)
        std::map<std::pair<int, int>, int> node;
        std::vector<std::pair<int, int>> nodes;
        for (std::size_t b = 0; b < d.bags.size(); ++b)
            for (std::size_t x = 0; x < d.bags[b].roots.size(); ++x) {
                node[{static_cast<int>(b), static_cast<int>(x)}] = static_cast<int>(nodes.size());
                nodes.emplace_back(static_cast<int>(b), static_cast<int>(x));
            }
        labels.resize(d.separators.size());
        for (std::size_t s = 0; s < d.separators.size(); ++s) {
            std::vector<int> parent(nodes.size());
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (std::size_t t = 0; t < d.separators.size(); ++t) {
                if (t == s) continue;
                std::vector<int> first(d.separators[t].vertices.size(), -1);
                for (int i : d.incidences_of_separator(static_cast<int>(t))) {
                    const auto& inc = d.incidences[i];
                    for (std::size_t k = 0; k < inc.iota.size(); ++k) {
                        const int n = node.at({inc.bag, inc.iota[k]});
                        if (first[k] < 0) first[k] = n;
                        parent[find(n)] = find(first[k]);
                    }
                }
            }
            // incidences of s reached by each class
            std::map<int, std::set<int>> reached;
            std::map<std::pair<int, int>, int> direct;
            for (int i : d.incidences_of_separator(static_cast<int>(s))) {
                const auto& inc = d.incidences[i];
                for (int x : inc.iota) {
                    direct[{inc.bag, x}] = i;
                    reached[find(node.at({inc.bag, x}))].insert(i);
                }
            }
            for (std::size_t n = 0; n < nodes.size(); ++n) {
                const auto& [bag, x] = nodes[n];
                if (!members[s].count(d.bags[bag].roots[x])) continue;
                long label;
                if (auto it = direct.find(nodes[n]); it != direct.end()) {
                    label = it->second;
                } else if (auto r = reached.find(find(static_cast<int>(n))); r != reached.end() && r->second.size() == 1) {
                    label = *r->second.begin();
                } else {
                    label = -1 - find(static_cast<int>(n));
                }
                labels[s][nodes[n]] = label;
            }
        }
    }

    long label(int sep, int edge_pos, int at) const {
        const Edge& e = u.graph.edge(edge_pos);
        const int bag = u.bag_of_edge[edge_pos];
        const int copy = e.u == at ? u.local_ends[edge_pos].first : u.local_ends[edge_pos].second;
        return labels[sep].at({bag, copy});
    }

    std::vector<int> counts(const Cycle& c) const {
        std::vector<int> out(d.separators.size(), 0);
        const std::size_t k = c.vertices.size();
        for (std::size_t i = 0; i < k; ++i) {
            const int x = c.vertices[i];
            const int before = c.edges[(i + k - 1) % k];
            const int after = c.edges[i];
            if (u.graph.edge(before).is_loop() || u.graph.edge(after).is_loop()) continue;
            for (std::size_t s = 0; s < members.size(); ++s) {
                if (!members[s].count(u.graph.name(x))) continue;
                if (label(static_cast<int>(s), before, x) != label(static_cast<int>(s), after, x)) ++out[s];
            }
        }
        return out;
    }

    bool odd(const Cycle& c) const {
        for (int n : counts(c))
            if (n % 2 == 1) return true;
        return false;
    }
};

}  // namespace

MultiGraph underlying_graph(const GraphDecomposition& d) { return build_underlying(d).graph; }

std::vector<int> traversal_counts(const GraphDecomposition& d, const MultiGraph& underlying, const Cycle& c) {
    const Underlying u = build_underlying(d);
    require(same_labelled_graph(u.graph, underlying), ErrorKind::input, "cycle is not in the underlying graph");
    // Translate the cycle into edge positions of the rebuilt graph.
    Cycle mapped;
    mapped.length = c.length;
    for (int x : c.vertices) mapped.vertices.push_back(u.graph.index(underlying.name(x)));
    for (int pos : c.edges) mapped.edges.push_back(*u.graph.edge_position(underlying.edge(pos).id));
    return Labeller(d, u).counts(mapped);
}

std::string Locality::str() const {
    if (infinite) return "inf";
    return (lower_bound ? ">=" : "") + std::to_string(value);
}

Metrics metrics(const GraphDecomposition& d, long cycle_bound, ExpansionBudget* budget) {
    Metrics m;
    for (const auto& bag : d.bags) m.width = std::max(m.width, bag.graph.num_vertices() - 1);
    for (const auto& s : d.separators) m.adhesion = std::max(m.adhesion, static_cast<int>(s.vertices.size()));
    if (d.separators.empty()) {
        m.locality.infinite = true;
        return m;
    }
    const Underlying u = build_underlying(d);
    const Labeller lab(d, u);
    const long total = u.graph.total_length();
    ExpansionBudget local;
    ExpansionBudget* b = budget != nullptr ? budget : &local;

    auto shortest_odd = [&](long bound) {
        long best = kUnreachable;
        for (const Cycle& c : enumerate_short_cycles(u.graph, bound, b).cycles)
            if (c.length < best && lab.odd(c)) best = c.length;
        return best;
    };
    if (cycle_bound >= 0) {
        const long best = shortest_odd(cycle_bound);
        if (best != kUnreachable) {
            m.locality.value = best - 1;
        } else if (cycle_bound >= total) {
            m.locality.infinite = true;
        } else {
            m.locality.value = cycle_bound;
            m.locality.lower_bound = true;
        }
        return m;
    }
    long bound = std::min(total, d.r.infinite ? 3 : d.r.value + 2);
    long done = -1;  // largest bound searched completely
    try {
        for (;;) {
            const long best = shortest_odd(bound);
            if (best != kUnreachable) {
                m.locality.value = best - 1;
                return m;
            }
            done = bound;
            if (bound >= total) {
                m.locality.infinite = true;
                return m;
            }
            bound = std::min(total, 2 * bound);
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::cap_exceeded || done < 0) throw;
    }
    m.locality.value = done;
    m.locality.lower_bound = true;
    return m;
}

bool is_basic_piece(const MultiGraph& weighted, Scale r) {
    if (is_short_cycle(weighted, r)) return true;
    if (weighted.num_vertices() < 4 || !is_connected(weighted)) return false;
    return is_locally_2_connected(subdivide(weighted).graph, r) && essential_2_separators(weighted, r).empty();
}

namespace {

std::vector<std::pair<std::string, std::string>> separator_names(const MultiGraph& g,
                                                                 const std::vector<LocalSeparator>& seps) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : seps) out.emplace_back(g.name(s.a), g.name(s.b));
    return out;
}

}  // namespace

CanonicalResult canonical_decomposition(const MultiGraph& g, Scale r, ExpansionBudget* budget) {
    require(g.unit_lengths(), ErrorKind::precondition, "canonical decomposition needs unit lengths (subdivide first)");
    require(is_simple(g), ErrorKind::precondition, "canonical decomposition needs a graph without loops or parallel edges");
    require(g.num_vertices() > 0 && is_connected(g), ErrorKind::precondition, "canonical decomposition needs a connected graph");
    require(is_locally_2_connected(g, r), ErrorKind::precondition, "graph is not r-locally 2-connected (r=" + r.str() + ")");
    CanonicalResult out;
    out.analysis = analyse_separators(g, r, budget);
    std::vector<LocalSeparator> nset;
    for (int j : out.analysis.noncrossed) nset.push_back(out.analysis.separators[j]);
    CutAllOptions opts;
    opts.verify_noncrossing = false;  // noncrossed by construction
    opts.budget = budget;
    out.cut = cut_all(g, separator_names(g, nset), r, opts);
    out.certificate.steps = out.cut.steps;
    out.decomposition = build_decomposition(g, out.cut, r);
    for (std::size_t b = 0; b < out.decomposition.bags.size(); ++b)
        require(is_basic_piece(torso(out.decomposition, static_cast<int>(b)), r), ErrorKind::invariant,
                "torso of bag " + std::to_string(b) + " is neither r-locally 3-connected nor a short cycle");
    return out;
}

GraphDecomposition replay_decomposition(const MultiGraph& g, const CutCertificate& cert, Scale r) {
    return build_decomposition(g, replay_cuts(g, cert.steps, r), r);
}

namespace {

MultiGraph component_graph(const MultiGraph& g, const std::vector<int>& comp) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int x : comp) in[x] = 1;
    std::vector<int> edges;
    for (int pos = 0; pos < g.num_edges(); ++pos)
        if (in[g.edge(pos).u]) edges.push_back(pos);
    return subgraph(g, comp, edges);
}

}  // namespace

GreedyResult greedy_decomposition(const MultiGraph& g, Scale r, GreedyPolicy policy, ExpansionBudget* budget) {
    require(g.num_vertices() > 0, ErrorKind::precondition, "greedy decomposition needs a nonempty graph");
    require(is_simple(g), ErrorKind::precondition, "greedy decomposition needs a graph without loops or parallel edges");
    require(is_locally_2_connected(subdivide(g).graph, r), ErrorKind::precondition,
            "graph is not r-locally 2-connected (r=" + r.str() + ")");
    std::mt19937_64 rng(policy.seed);
    CutAllResult state;
    state.graph = g;
    state.provenance = identity_provenance(g);
    GreedyResult out;
    // Each cut lowers a triplex, so the loop is finite; the cap only guards against a broken invariant.
    const long cap = 4L * (g.total_length() + g.num_vertices()) + 16;
    for (long round = 0;; ++round) {
        require(round <= cap, ErrorKind::invariant, "greedy decomposition does not terminate");
        std::optional<MultiGraph> piece;
        for (const auto& comp : components(state.graph)) {
            MultiGraph c = component_graph(state.graph, comp);
            if (!is_basic_piece(c, r)) {
                piece = std::move(c);
                break;
            }
        }
        if (!piece) break;

        std::vector<std::pair<std::string, std::string>> candidates;
        for (const auto& [a, b] : essential_2_separators(*piece, r)) candidates.emplace_back(piece->name(a), piece->name(b));
        // Only a bond (fewer than four vertices, not a cycle) lacks one, and cuts of a simple graph
        // never produce bonds.
        require(!candidates.empty(), ErrorKind::invariant, "piece is not basic but has no essential 2-separator");
        std::size_t pick = 0;
        if (policy.kind == GreedyPolicy::Kind::random)
            pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);

        GreedyLedger led;
        led.parent = triplex(*piece, r, budget);
        led.e = piece->num_edges();
        led.v = piece->num_vertices();
        led.k = 1;
        led.gamma = led.parent.gamma;
        const std::set<std::string> parent_names(piece->names().begin(), piece->names().end());
        const CutResult cut = cut_step(state, candidates[pick], r);
        for (const auto& comp : components(state.graph)) {
            if (!parent_names.count(cut.provenance[comp.front()].parent)) continue;
            const MultiGraph child = component_graph(state.graph, comp);
            led.children.push_back(triplex(child, r, budget));
            led.e2 += child.num_edges();
            led.v2 += child.num_vertices();
            led.gamma2 += led.children.back().gamma;
            ++led.k2;
        }
        led.ell = static_cast<long>(cut.torso_edges.size());
        led.counts_balance = led.e2 == led.e + led.ell && led.v2 == led.v + 2 * (led.ell - 1);
        led.rank_balance = led.gamma2 == led.gamma - (led.ell - 2) + (led.k2 - led.k);
        led.decreasing = std::all_of(led.children.begin(), led.children.end(),
                                     [&](const Triplex& t) { return t < led.parent; });
        out.ledger.push_back(led);
        const std::string where = " after cutting " + candidates[pick].first + "," + candidates[pick].second;
        require(led.counts_balance && led.rank_balance, ErrorKind::invariant, "edge, vertex or cycle-rank counts do not balance" + where);
        require(led.decreasing, ErrorKind::invariant, "triplex did not decrease" + where);
    }
    out.graph = state.graph;
    out.provenance = state.provenance;
    out.certificate.steps = state.steps;
    for (const auto& comp : components(out.graph)) out.pieces.push_back(component_graph(out.graph, comp));
    return out;
}

GraphDecomposition blockcut_decomposition(const MultiGraph& g, Scale r) {
    require(g.num_vertices() > 0 && is_connected(g), ErrorKind::precondition, "block-cut decomposition needs a connected graph");
    // Below 3 no graph is r-locally 2-connected, so bags such as digons would have no class.
    require(r.infinite || r.value >= 3, ErrorKind::precondition, "block-cut decomposition needs r >= 3");
    const CutResult h = cut_all_vertices(g, r);
    GraphDecomposition d;
    d.r = r;
    const BagSplit split = split_into_bags(h.graph, h.provenance, d);
    std::vector<std::string> cut = h.cut;
    std::sort(cut.begin(), cut.end());
    std::map<std::string, int> sep_of;
    for (const auto& v : cut) {
        sep_of[v] = static_cast<int>(d.separators.size());
        d.separators.push_back({{v}, false});
    }
    for (int x = 0; x < h.graph.num_vertices(); ++x) {
        const Origin& o = h.provenance[x];
        if (o.kind != Origin::Kind::slice) continue;
        d.incidences.push_back({sep_of.at(o.root), split.bag_of[x], {split.local_of[x]}, 0});
    }
    std::stable_sort(d.incidences.begin(), d.incidences.end(),
                     [](const auto& a, const auto& b) { return a.sep < b.sep; });
    for (std::size_t b = 0; b < d.bags.size(); ++b) {
        const MultiGraph& bg = d.bags[b].graph;
        const bool single_edge = bg.num_vertices() == 2 && bg.num_edges() == 1;
        const bool trivial = g.num_vertices() == 1 && bg.num_edges() == 0;  // K1 has no block of either kind
        require(single_edge || trivial || is_locally_2_connected(bg, r), ErrorKind::invariant,
                "bag " + std::to_string(b) + " is neither r-locally 2-connected nor a single edge");
    }
    validate(d);
    require_reproduces(d, g);
    return d;
}

std::string graph_hash(const MultiGraph& g) {
    const std::string text = to_edge_list(g);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    require(EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) == 1, ErrorKind::invariant,
            "SHA-256 failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return out.str();
}

std::string to_dot(const GraphDecomposition& d) {
    std::ostringstream out;
    out << "graph decomposition {\n";
    for (std::size_t b = 0; b < d.bags.size(); ++b) {
        std::set<std::string> roots(d.bags[b].roots.begin(), d.bags[b].roots.end());
        out << "  b" << b << " [shape=box, label=\"";
        bool first = true;
        for (const auto& x : roots) out << (first ? "" : " ") << x, first = false;
        out << "\"];\n";
    }
    for (std::size_t s = 0; s < d.separators.size(); ++s) {
        out << "  s" << s << " [shape=diamond, label=\"";
        for (std::size_t i = 0; i < d.separators[s].vertices.size(); ++i)
            out << (i ? " " : "") << d.separators[s].vertices[i];
        out << "\"];\n";
    }
    for (const auto& inc : d.incidences) {
        out << "  s" << inc.sep << " -- b" << inc.bag;
        if (inc.torso_weight > 0) out << " [label=\"" << inc.torso_weight << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace locsep
