#include "locsep/decomposition.hpp"
#include "locsep/oracle.hpp"
#include "locsep/separators.hpp"
#include "support.hpp"

using namespace test;
namespace fx = locsep::fixtures;

namespace {

std::vector<std::pair<std::string, std::string>> rung_names() {
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < 6; ++i) out.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
    return out;
}

}  // namespace

TEST_CASE("oracle separators on fixtures") {
    const MultiGraph c6 = fx::cycle(6);
    CHECK(oracle::oracle_separator(c6, 0, 2, Scale::of(6)));
    CHECK(oracle::oracle_separator(c6, 0, 3, Scale::of(6)));
    CHECK_FALSE(oracle::oracle_separator(c6, 0, 1, Scale::of(6)));
    CHECK(oracle::oracle_separator_components(c6, 0, 3, Scale::of(6)) == 2);

    const MultiGraph c8 = fx::cycle(8);
    CHECK(oracle::oracle_separator_components(c8, 0, 4, Scale::of(6)) == 0);

    const MultiGraph p = fx::prism6();
    CHECK(oracle::oracle_separator(p, p.index("a0"), p.index("b0"), Scale::of(3)));
    CHECK_FALSE(oracle::oracle_separator(p, p.index("a0"), p.index("a1"), Scale::of(3)));
    const MultiGraph k4 = fx::complete(4);
    for (int v = 0; v < 4; ++v)
        for (int w = v + 1; w < 4; ++w) CHECK_FALSE(oracle::oracle_separator(k4, v, w, Scale::of(3)));

    const MultiGraph bowtie = fx::bowtie();
    CHECK(oracle::oracle_cutvertex(bowtie, bowtie.index("c"), Scale::of(3)));
    CHECK(oracle::oracle_locally_2_connected(p, Scale::of(3)));
    CHECK(oracle::oracle_locally_3_connected(k4, Scale::of(3)));
    CHECK_FALSE(oracle::oracle_locally_3_connected(p, Scale::of(3)));
}

TEST_CASE("oracle basic pieces") {
    CHECK(oracle::oracle_basic(fx::complete(4), Scale::of(3)));
    CHECK(oracle::oracle_basic(fx::cycle(5), Scale::of(5)));
    CHECK_FALSE(oracle::oracle_basic(fx::cycle(6), Scale::of(5)));
    CHECK(oracle::oracle_basic(graph("a b 3\nb c\nc a\n"), Scale::of(5)));
    CHECK_FALSE(oracle::oracle_basic(fx::prism6(), Scale::of(3)));
}

TEST_CASE("property: is_basic_piece agrees with the oracle on weighted graphs") {
    fx::Rng rng(71);
    int compared = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const Scale r = Scale::of(3 + trial % 5);
        const MultiGraph g = with_random_lengths(rng, fx::random_2_connected(rng, 7), 2);
        if (oracle::subdivided(g).num_vertices() > oracle::kMaxVertices) continue;
        CAPTURE(to_edge_list(g));
        CHECK(is_basic_piece(g, r) == oracle::oracle_basic(g, r));
        ++compared;
    }
    CHECK(compared >= 60);
}

TEST_CASE("subdivision for the oracle") {
    const MultiGraph s = oracle::subdivided(graph("a b 3\nb c\n"));
    CHECK(s.num_vertices() == 5);
    CHECK(s.num_edges() == 4);
    CHECK(s.unit_lengths());
    CHECK(s.find("~0.1"));
    CHECK(s.find("~0.2"));
}

TEST_CASE("at r = infinity the oracle matches the classical theory") {
    for (const auto& [name, g] : std::vector<std::pair<std::string, MultiGraph>>{
             {"K4", fx::complete(4)}, {"C6", fx::cycle(6)}, {"THETA", fx::theta()}, {"PRISM6", fx::prism6()}}) {
        const auto rep = oracle::oracle_classical(g, name);
        INFO(rep.json_line());
        CHECK(rep.pass);
    }
    fx::Rng rng(72);
    for (int trial = 0; trial < 30; ++trial) {
        const auto rep = oracle::oracle_classical(fx::random_2_connected(rng, 10), "rand" + std::to_string(trial));
        INFO(rep.json_line());
        CHECK(rep.pass);
    }
}

TEST_CASE("cutting the prism rungs commutes") {
    const MultiGraph p = fx::prism6();
    std::mt19937_64 rng(73);
    CHECK(oracle::oracle_commute(p, rung_names(), Scale::of(3), 10, rng, "PRISM6").pass);
    CHECK(oracle::oracle_commute(p, {{"a0", "b0"}}, Scale::of(3), 3, rng, "PRISM6-one").pass);
    CHECK(error_kind([&] {
              oracle::oracle_commute(fx::cycle(6), {{"v0", "v2"}, {"v1", "v3"}}, Scale::of(6), 3, rng, "C6");
          }) == ErrorKind::precondition);

    const CutAllResult a = cut_all(p, rung_names(), Scale::of(3));
    const CutAllResult b = cut_all(p, {{"a0", "b0"}}, Scale::of(3));
    CHECK(oracle::provenance_isomorphic(a.graph, a.provenance, a.graph, a.provenance));
    CHECK_FALSE(oracle::provenance_isomorphic(a.graph, a.provenance, b.graph, b.provenance));
}

TEST_CASE("double-ball separators do not project, explorer separators do") {
    const oracle::CrossingStripFixture f = oracle::build_crossing_strip_fixture();
    // Frozen from the fixture search.
    CHECK(f.r == Scale::of(8));
    CHECK(f.cycle_length == 8);
    CHECK(f.graph.num_vertices() == 22);
    CHECK(oracle::double_ball_separator(f.graph, f.graph.index(f.a1), f.graph.index(f.a2), f.r));
    CHECK(oracle::double_ball_separator(f.graph, f.graph.index(f.b1), f.graph.index(f.b2), f.r));
    CHECK_FALSE(oracle::double_ball_separator(f.graph, f.graph.index(f.a1), f.graph.index(f.b1), f.r));
    const auto strip = oracle::oracle_double_ball_regression(f.graph, {{f.b1, f.b2}}, f.r, true, "crossing-strip");
    INFO(strip.json_line());
    CHECK(strip.pass);

    const auto prism = oracle::oracle_double_ball_regression(fx::prism6(), rung_names(), Scale::of(3), false, "PRISM6");
    INFO(prism.json_line());
    CHECK(prism.pass);
    const auto c6 = oracle::oracle_double_ball_regression(fx::cycle(6), {{"v0", "v3"}}, Scale::of(6), false, "C6");
    INFO(c6.json_line());
    CHECK(c6.pass);
}

TEST_CASE("oracle caps") {
    CHECK(error_kind([] { oracle::check_caps(fx::cycle(17), Scale::of(6)); }) == ErrorKind::cap_exceeded);
    CHECK(error_kind([] { oracle::check_caps(fx::cycle(6), Scale::of(9)); }) == ErrorKind::cap_exceeded);
    CHECK(error_kind([] { oracle::check_caps(graph("a b 2\n"), Scale::of(3)); }) == ErrorKind::precondition);
    CHECK(error_kind([] { oracle::oracle_separator(fx::cycle(17), 0, 2, Scale::of(6)); }) == ErrorKind::cap_exceeded);
    oracle::check_caps(fx::cycle(16), Scale::inf());
}

TEST_CASE("report lines") {
    oracle::OracleReport ok{"cut_far", "C6"};
    CHECK(ok.json_line() == R"({"check":"cut_far","instance":"C6","verdict":"pass"})");
    oracle::OracleReport bad{"cut_far", "C6"};
    bad.fail("v0 is close");
    CHECK_FALSE(bad.pass);
    CHECK(bad.json_line() == R"({"check":"cut_far","instance":"C6","verdict":"fail","counterexample":"v0 is close"})");
}
