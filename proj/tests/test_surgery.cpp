#include "locsep/lemmas.hpp"
#include "locsep/oracle.hpp"
#include "locsep/separators.hpp"
#include "locsep/surgery.hpp"
#include "support.hpp"

using namespace test;
namespace fx = locsep::fixtures;

namespace {

std::vector<MultiGraph> parts(const MultiGraph& g) {
    std::vector<MultiGraph> out;
    for (const auto& comp : components(g)) {
        std::vector<int> edges;
        for (int p = 0; p < g.num_edges(); ++p)
            if (std::binary_search(comp.begin(), comp.end(), g.edge(p).u)) edges.push_back(p);
        out.push_back(subgraph(g, comp, edges));
    }
    return out;
}

std::multiset<std::pair<int, int>> shapes(const MultiGraph& g) {
    std::multiset<std::pair<int, int>> out;
    for (const MultiGraph& p : parts(g)) out.insert({p.num_vertices(), p.num_edges()});
    return out;
}

std::vector<std::pair<std::string, std::string>> rung_names() {
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < 6; ++i) out.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
    return out;
}

std::vector<fx::Named> l2c_corpus(std::uint64_t seed, std::size_t size) {
    fx::Rng rng(seed);
    std::vector<fx::Named> corpus;
    for (const auto& f : fx::all())
        if (is_locally_2_connected(f.graph, f.r)) corpus.push_back(f);
    while (corpus.size() < size) {
        const Scale r = Scale::of(3 + static_cast<long>(corpus.size()) % 5);
        MultiGraph g = fx::random_ear_graph(rng, 12, r);
        if (is_locally_2_connected(g, r)) corpus.push_back({"ear" + std::to_string(corpus.size()), std::move(g), r});
    }
    return corpus;
}

}  // namespace

TEST_CASE("cutting a vertex") {
    const MultiGraph bowtie = fx::bowtie();
    const CutResult c = cut_vertex(bowtie, bowtie.index("c"), Scale::of(3));
    CHECK(shapes(c.graph) == std::multiset<std::pair<int, int>>{{3, 3}, {3, 3}});
    CHECK(c.graph.find(slice_name("c", 0)));
    CHECK(c.graph.find(slice_name("c", 1)));

    const CutResult c6 = cut_vertex(fx::cycle(6), 0, Scale::of(6));
    CHECK(shapes(c6.graph) == std::multiset<std::pair<int, int>>{{6, 6}});

    const MultiGraph p5 = fx::path(5);
    const CutResult p = cut_vertex(p5, p5.index("p2"), Scale::of(2));
    std::set<std::set<std::string>> comps;
    for (const auto& comp : components(p.graph)) comps.insert(names(p.graph, comp));
    CHECK(comps == std::set<std::set<std::string>>{{"p0", "p1", slice_name("p2", 0)}, {slice_name("p2", 1), "p3", "p4"}});
}

TEST_CASE("loops at a cut vertex are rejected") {
    MultiGraph g = fx::bowtie();
    g.add_edge(g.index("c"), g.index("c"));
    CHECK(error_kind([&] { cut_vertex(g, g.index("c"), Scale::of(3)); }) == ErrorKind::precondition);
}

TEST_CASE("cutting a rung of the prism") {
    const MultiGraph p = fx::prism6();
    const CutResult c = cut_2separator(p, p.index("a0"), p.index("b0"), Scale::of(3));
    // The open strip with both pairs of end slices, and the digon of the rung edge.
    CHECK(shapes(c.graph) == std::multiset<std::pair<int, int>>{{2, 2}, {14, 31}});
    CHECK(c.torso_edges.size() == 3);
    for (const TorsoEdge& t : c.torso_edges) CHECK(t.weight == 1);
    CHECK(c.artificial_components.size() == 1);
}

TEST_CASE("cutting C8 next to a long way round") {
    const MultiGraph c8 = fx::cycle(8);
    const CutResult c = cut_2separator(c8, 0, 1, Scale::of(6));
    CHECK(shapes(c.graph) == std::multiset<std::pair<int, int>>{{2, 2}, {10, 9}});
    for (const TorsoEdge& t : c.torso_edges) CHECK(t.weight == 1);
}

TEST_CASE("cutting C6 at opposite vertices") {
    const MultiGraph c6 = fx::cycle(6);
    const CutResult c = cut_2separator(c6, 0, 3, Scale::of(6));
    CHECK(shapes(c.graph) == std::multiset<std::pair<int, int>>{{4, 4}, {4, 4}});
    CHECK(c.artificial_components.empty());
    for (const TorsoEdge& t : c.torso_edges) CHECK(t.weight == 3);
}

TEST_CASE("lifts") {
    const MultiGraph p = fx::prism6();
    const CutResult c = cut_2separator(p, p.index("a0"), p.index("b0"), Scale::of(3));
    CHECK(lift(c, "a3", "b3", Scale::of(3)) == std::pair<std::string, std::string>{"a3", "b3"});
    CHECK(lift(c, "a1", "b1", Scale::of(3)) == std::pair<std::string, std::string>{"a1", "b1"});
    CHECK(error_kind([&] { lift(c, "a0", "b0", Scale::of(3)); }) == ErrorKind::precondition);

    // {v1,v4} crosses {v0,v3} in C6: after the cut they lie in different 4-cycles and have no lift.
    const MultiGraph c6 = fx::cycle(6);
    const CutResult d = cut_2separator(c6, 0, 3, Scale::of(6));
    CHECK(error_kind([&] { lift(d, "v1", "v4", Scale::of(6)); }) == ErrorKind::precondition);
}

TEST_CASE("cutting a set of separators") {
    const MultiGraph p = fx::prism6();
    const CutAllResult all = cut_all(p, rung_names(), Scale::of(3));
    CHECK(shapes(all.graph).size() == 12);
    int digons = 0, blocks = 0;
    for (const MultiGraph& part : parts(all.graph)) {
        digons += part.num_vertices() == 2;
        blocks += part.num_vertices() == 4;
    }
    CHECK(digons == 6);
    CHECK(blocks == 6);
    CHECK(all.steps.size() == 6);
    CHECK(same_labelled_graph(replay_cuts(p, all.steps, Scale::of(3)).graph, all.graph));

    CHECK(same_labelled_graph(cut_all(p, {}, Scale::of(3)).graph, p));

    const CutAllResult one = cut_all(fx::cycle(6), {{"v0", "v2"}}, Scale::of(6));
    CHECK(num_components(one.graph) == 2);
}

TEST_CASE("cut_all refuses crossing separators") {
    CHECK(error_kind([] { cut_all(fx::cycle(6), {{"v0", "v2"}, {"v1", "v3"}}, Scale::of(6)); }) ==
          ErrorKind::precondition);
}

TEST_CASE("local 2-sum of two triangles") {
    const MultiGraph tri = graph("a b 2\nb c\nc a\n");
    SumSpec spec;
    spec.hosts = {tri, tri};
    spec.glue = {{0, tri.edge(0).id, false}, {1, tri.edge(0).id, false}};
    spec.r = Scale::of(4);
    CHECK(validate_sum(spec).valid());
    const MultiGraph sum = local_2_sum(spec);
    CHECK(sum.num_vertices() == 4);
    CHECK(sum.num_edges() == 4);
    CHECK(sum.unit_lengths());
    CHECK(is_connected(sum));
    for (int v = 0; v < 4; ++v) CHECK(sum.degree(v) == 2);

    SumSpec lone;
    lone.hosts = {tri};
    lone.glue = {{0, tri.edge(0).id, false}};
    lone.r = Scale::of(4);
    CHECK(error_kind([&] { local_2_sum(lone); }) == ErrorKind::precondition);
}

TEST_CASE("identifying along patterns") {
    const MultiGraph g = graph("x1 y1\nx2 y2\nx3 y3\n");
    MultiGraph vertex;
    vertex.add_vertex("p");
    const Identification three =
        identify_along(g, vertex, {{{g.index("x1")}, {}}, {{g.index("x2")}, {}}, {{g.index("x3")}, {}}});
    CHECK(three.graph.num_vertices() == 4);
    CHECK(three.graph.num_edges() == 3);

    const MultiGraph two = graph("a b\nc d\na x\nd y\n");
    const MultiGraph edge = graph("p q\n");
    const Identification merged =
        identify_along(two, edge, {{{two.index("a"), two.index("b")}, {0}}, {{two.index("c"), two.index("d")}, {1}}});
    CHECK(merged.graph.num_vertices() == 4);
    CHECK(merged.graph.num_edges() == 3);  // the two clones of pq become one edge

    CHECK(same_labelled_graph(identify_along(g, vertex, {}).graph, g));
}

TEST_CASE("cut lemmas on a locally 2-connected corpus") {
    fx::Rng rng(51);
    for (const auto& [name, g, r] : l2c_corpus(52, 45)) {
        CAPTURE(name);
        for (const auto& rep : {lemmas::cut_far(g, r, name), lemmas::loc2con_pres(g, r, name),
                                lemmas::inverse_sum_cut(g, r, name), lemmas::projection(g, r, name),
                                lemmas::lifting(g, r, name), lemmas::lift_non_crossing(g, r, name),
                                lemmas::commute(g, r, 10, rng, name)}) {
            INFO(rep.json_line());
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("vertex cut lemmas on connected multigraphs") {
    fx::Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        const Scale r = Scale::of(2 + i % 6);
        MultiGraph g = fx::random_multigraph(rng, 9);
        if (has_loop(g)) continue;
        const std::string name = "mg" + std::to_string(i);
        CAPTURE(name);
        for (const auto& rep : {lemmas::no_cut_vertex(g, r, name), lemmas::cut_all1(g, r, name), lemmas::cut_far(g, r, name)}) {
            INFO(rep.json_line());
            CHECK(rep.pass);
        }
        const auto rep = oracle::oracle_vertex_commute(g, r, 10, rng, name);
        INFO(rep.json_line());
        CHECK(rep.pass);
    }
}
