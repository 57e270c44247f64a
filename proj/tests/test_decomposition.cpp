#include <map>

#include "locsep/decomposition.hpp"
#include "locsep/lemmas.hpp"
#include "locsep/separators.hpp"
#include "support.hpp"

using namespace test;
namespace fx = locsep::fixtures;

namespace {

using Pair = std::set<std::string>;

bool is_k4(const MultiGraph& t) {
    if (t.num_vertices() != 4 || t.num_edges() != 6) return false;
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : t.edges())
        if (e.is_loop() || !seen.insert(std::minmax(e.u, e.v)).second) return false;
    return true;
}

bool is_digon(const MultiGraph& t) { return t.num_vertices() == 2 && t.num_edges() == 2 && t.total_length() == 2; }

// Invariants of a weighted graph that isomorphism keeps.
std::string signature(const MultiGraph& g) {
    std::vector<int> deg;
    for (int v = 0; v < g.num_vertices(); ++v) deg.push_back(g.degree(v));
    std::vector<long> lens;
    for (const Edge& e : g.edges()) lens.push_back(e.len);
    std::sort(deg.begin(), deg.end());
    std::sort(lens.begin(), lens.end());
    std::string out = std::to_string(g.num_vertices()) + "/";
    for (int d : deg) out += std::to_string(d) + ",";
    out += "/";
    for (long l : lens) out += std::to_string(l) + ",";
    return out;
}

std::vector<fx::Named> corpus(std::uint64_t seed, std::size_t size) {
    fx::Rng rng(seed);
    std::vector<fx::Named> out;
    for (const auto& f : fx::all())
        if (is_locally_2_connected(f.graph, f.r) && f.name != "TRIANGLE_DOUBLED") out.push_back(f);
    while (out.size() < size) {
        const Scale r = Scale::of(3 + static_cast<long>(out.size()) % 4);
        MultiGraph g = fx::random_ear_graph(rng, 12, r);
        std::set<std::pair<int, int>> seen;
        bool simple = true;
        for (const Edge& e : g.edges()) simple = simple && !e.is_loop() && seen.insert(std::minmax(e.u, e.v)).second;
        if (simple && is_locally_2_connected(g, r)) out.push_back({"ear" + std::to_string(out.size()), std::move(g), r});
    }
    return out;
}

}  // namespace

TEST_CASE("the prism decomposes into six K4 and six digons") {
    const MultiGraph p = fx::prism6();
    const CanonicalResult res = canonical_decomposition(p, Scale::of(3));
    const GraphDecomposition& d = res.decomposition;
    CHECK(d.bags.size() == 12);
    CHECK(d.separators.size() == 6);
    for (int s = 0; s < 6; ++s) CHECK(d.incidences_of_separator(s).size() == 3);
    int k4 = 0, digons = 0;
    for (int b = 0; b < 12; ++b) {
        const MultiGraph t = torso(d, b);
        k4 += is_k4(t);
        digons += is_digon(t);
    }
    CHECK(k4 == 6);
    CHECK(digons == 6);
    const Metrics m = metrics(d);
    CHECK(m.width == 3);
    CHECK(m.adhesion == 2);
    CHECK_FALSE(m.locality.infinite);
    CHECK(m.locality.value == 5);
    CHECK(same_labelled_graph(underlying_graph(d), p));
}

TEST_CASE("graphs without separators are a single bag") {
    const MultiGraph k4 = fx::complete(4);
    const GraphDecomposition d = canonical_decomposition(k4, Scale::of(3)).decomposition;
    REQUIRE(d.bags.size() == 1);
    CHECK(d.separators.empty());
    CHECK(same_labelled_graph(torso(d, 0), k4));
    CHECK(same_labelled_graph(underlying_graph(d), k4));
    const Metrics m = metrics(d);
    CHECK(m.adhesion == 0);
    CHECK(m.locality.infinite);
    CHECK(is_locally_3_connected(torso(d, 0), Scale::of(3)));

    const GraphDecomposition c6 = canonical_decomposition(fx::cycle(6), Scale::of(6)).decomposition;
    REQUIRE(c6.bags.size() == 1);
    CHECK(is_short_cycle(torso(c6, 0), Scale::of(6)));
}

TEST_CASE("greedy on fixtures") {
    const MultiGraph p = fx::prism6();
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const GreedyResult res = greedy_decomposition(p, Scale::of(3), {GreedyPolicy::Kind::random, seed});
        int k4 = 0, digons = 0;
        for (const MultiGraph& piece : res.pieces) {
            k4 += is_k4(piece);
            digons += is_digon(piece);
        }
        CHECK(k4 == 6);
        CHECK(digons == 6);
    }
    CHECK(greedy_decomposition(fx::complete(4), Scale::of(3)).certificate.steps.empty());
    CHECK(greedy_decomposition(fx::cycle(6), Scale::of(6)).certificate.steps.empty());
}

TEST_CASE("block-cut decompositions") {
    const MultiGraph bowtie = fx::bowtie();
    const GraphDecomposition d = blockcut_decomposition(bowtie, Scale::of(3));
    CHECK(d.bags.size() == 2);
    for (const auto& b : d.bags) CHECK(b.graph.num_edges() == 3);
    REQUIRE(d.separators.size() == 1);
    CHECK(d.separators[0].vertices == std::vector<std::string>{"c"});
    CHECK(d.incidences.size() == 2);
    CHECK(same_labelled_graph(underlying_graph(d), bowtie));
    CHECK(metrics(d).locality.infinite);

    const GraphDecomposition p5 = blockcut_decomposition(fx::path(5), Scale::inf());
    CHECK(p5.bags.size() == 4);
    CHECK(p5.separators.size() == 3);
    for (const auto& b : p5.bags) CHECK(b.graph.num_edges() == 1);
}

TEST_CASE("a vertex glued three ways is one separator of degree three") {
    const MultiGraph g = fx::triple_glued_ring();
    const GraphDecomposition d = blockcut_decomposition(g, Scale::of(4));
    REQUIRE(d.separators.size() == 1);
    CHECK(d.separators[0].vertices == std::vector<std::string>{"c"});
    CHECK(d.incidences.size() == 3);
    REQUIRE(d.bags.size() == 1);
    // The bag holds three copies of c, so it is no subgraph of g.
    CHECK(d.bags[0].graph.num_vertices() == g.num_vertices() + 2);
    CHECK(same_labelled_graph(underlying_graph(d), g));
    CHECK(lemmas::block_cut(g, Scale::of(4), "ring").pass);
}

TEST_CASE("preconditions of the pipelines") {
    const MultiGraph doubled = graph("a b\nb c\nc a\na b\n");
    CHECK(error_kind([&] { canonical_decomposition(doubled, Scale::of(3)); }) == ErrorKind::precondition);
    CHECK(error_kind([&] { greedy_decomposition(doubled, Scale::of(3)); }) == ErrorKind::precondition);
    CHECK(error_kind([] { canonical_decomposition(fx::bowtie(), Scale::of(3)); }) == ErrorKind::precondition);
    CHECK(error_kind([] { canonical_decomposition(fx::cycle(7), Scale::of(6)); }) == ErrorKind::precondition);
    CHECK(error_kind([] { blockcut_decomposition(fx::bowtie(), Scale::of(2)); }) == ErrorKind::precondition);
}

TEST_CASE("basic pieces") {
    CHECK(is_basic_piece(fx::complete(4), Scale::of(3)));
    CHECK(is_basic_piece(fx::cycle(5), Scale::of(5)));
    CHECK(is_basic_piece(graph("a b\na b 1\n"), Scale::of(3)));
    CHECK_FALSE(is_basic_piece(fx::cycle(6), Scale::of(5)));
    CHECK_FALSE(is_basic_piece(fx::prism6(), Scale::of(3)));
    // A triangle with one long edge is a cycle of length 5.
    CHECK(is_basic_piece(graph("a b 3\nb c\nc a\n"), Scale::of(5)));
}

TEST_CASE("JSON round trip, replay and determinism") {
    const MultiGraph p = fx::prism6();
    const CanonicalResult res = canonical_decomposition(p, Scale::of(3));
    const Metrics m = metrics(res.decomposition);
    const std::string text = to_json(p, res.decomposition, Pipeline::canonical, res.certificate, m);
    const ParsedDecomposition back = parse_decomposition_json(text);
    CHECK(back.graph_hash == graph_hash(p));
    CHECK(to_json(p, back.decomposition, back.kind, back.certificate, back.metrics) == text);
    const GraphDecomposition replayed = replay_decomposition(p, back.certificate, Scale::of(3));
    CHECK(to_json(p, replayed, Pipeline::canonical, res.certificate, m) == text);

    const CanonicalResult again = canonical_decomposition(p, Scale::of(3));
    CHECK(to_json(p, again.decomposition, Pipeline::canonical, again.certificate, metrics(again.decomposition)) == text);

    const std::string dot = to_dot(res.decomposition);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("shape=diamond") != std::string::npos);

    CHECK(error_kind([] { parse_decomposition_json("{"); }) == ErrorKind::input);
}

TEST_CASE("property: canonical decompositions on a random corpus") {
    for (const auto& [name, g, r] : corpus(61, 40)) {
        CAPTURE(name);
        const CanonicalResult res = canonical_decomposition(g, r);
        const GraphDecomposition& d = res.decomposition;
        CHECK(same_labelled_graph(underlying_graph(d), g));
        const Metrics m = metrics(d);
        CHECK(m.adhesion <= 2);
        CHECK((m.locality.infinite || m.locality.value >= r.value));
        for (int b = 0; b < static_cast<int>(d.bags.size()); ++b) CHECK(is_basic_piece(torso(d, b), r));
    }
}

TEST_CASE("property: greedy runs cut every noncrossed separator, terminate, and agree on 3-connected pieces") {
    for (const auto& [name, g, r] : corpus(62, 30)) {
        CAPTURE(name);
        const CanonicalResult canon = canonical_decomposition(g, r);
        std::multiset<std::string> canonical_l3c;
        for (int b = 0; b < static_cast<int>(canon.decomposition.bags.size()); ++b) {
            const MultiGraph t = torso(canon.decomposition, b);
            if (!is_short_cycle(t, r)) canonical_l3c.insert(signature(t));
        }
        std::vector<Pair> nset;
        for (int j : canon.analysis.noncrossed)
            nset.push_back({g.name(canon.analysis.separators[j].a), g.name(canon.analysis.separators[j].b)});

        for (std::uint64_t seed : {11u, 12u, 13u}) {
            const GreedyResult res = greedy_decomposition(g, r, {GreedyPolicy::Kind::random, seed});
            std::set<Pair> cut;
            for (const CutStep& s : res.certificate.steps) cut.insert({s.separator.first, s.separator.second});
            for (const Pair& x : nset) CHECK(cut.count(x) == 1);
            for (const GreedyLedger& l : res.ledger) {
                CHECK(l.decreasing);
                CHECK(l.counts_balance);
                CHECK(l.rank_balance);
            }
            std::multiset<std::string> greedy_l3c;
            for (const MultiGraph& piece : res.pieces) {
                CHECK(is_basic_piece(piece, r));
                if (!is_short_cycle(piece, r)) greedy_l3c.insert(signature(piece));
            }
            CHECK(greedy_l3c == canonical_l3c);
        }
    }
}

TEST_CASE("property: block-cut decompositions") {
    fx::Rng rng(63);
    for (int i = 0; i < 50; ++i) {
        const MultiGraph g = fx::random_multigraph(rng, 10);
        if (has_loop(g)) continue;
        const Scale r = i % 5 == 0 ? Scale::inf() : Scale::of(3 + i % 6);
        const std::string name = "mg" + std::to_string(i);
        CAPTURE(name);
        const auto rep = lemmas::block_cut(g, r, name);
        INFO(rep.json_line());
        CHECK(rep.pass);
        CHECK(same_labelled_graph(underlying_graph(blockcut_decomposition(g, r)), g));
    }
}
