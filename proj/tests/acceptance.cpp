// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "locsep/cycles.hpp"
#include "locsep/decomposition.hpp"
#include "locsep/fixtures.hpp"
#include "locsep/lemmas.hpp"
#include "locsep/oracle.hpp"
#include "locsep/separators.hpp"

using namespace locsep;
namespace fx = locsep::fixtures;
using oracle::OracleReport;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string first_failure;

    void fail(const std::string& what) {
        if (pass) first_failure = what;
        pass = false;
    }
    void note(const OracleReport& rep) {
        if (!rep.pass) fail(rep.json_line());
    }
};

bool is_simple(const MultiGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges())
        if (e.is_loop() || !seen.insert(std::minmax(e.u, e.v)).second) return false;
    return true;
}

bool has_loop(const MultiGraph& g) {
    return std::any_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); });
}

bool is_k4(const MultiGraph& t) { return t.num_vertices() == 4 && t.num_edges() == 6 && is_simple(t); }

// Fixtures and random ear graphs that are simple and r-locally 2-connected, r cycling over rs.
std::vector<fx::Named> simple_l2c_corpus(std::uint64_t seed, std::size_t randoms, int max_vertices,
                                         const std::vector<long>& rs, bool with_fixtures = true) {
    fx::Rng rng(seed);
    std::vector<fx::Named> out;
    if (with_fixtures)
        for (const auto& f : fx::all())
            if (is_simple(f.graph) && is_locally_2_connected(f.graph, f.r)) out.push_back(f);
    const std::size_t target = out.size() + randoms;
    while (out.size() < target) {
        const Scale r = Scale::of(rs[out.size() % rs.size()]);
        MultiGraph g = fx::random_ear_graph(rng, max_vertices, r);
        if (is_simple(g) && is_locally_2_connected(g, r)) out.push_back({"ear" + std::to_string(out.size()), std::move(g), r});
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> noncrossed_names(const MultiGraph& g, const SeparatorAnalysis& an) {
    std::vector<std::pair<std::string, std::string>> out;
    for (int j : an.noncrossed) out.emplace_back(g.name(an.separators[j].a), g.name(an.separators[j].b));
    return out;
}

Outcome prism_reproduction() {
    Outcome o;
    const MultiGraph p = fx::prism6();
    const CanonicalResult res = canonical_decomposition(p, Scale::of(3));
    const GraphDecomposition& d = res.decomposition;
    std::set<std::set<std::string>> seps, rungs;
    for (const auto& s : d.separators) seps.insert({s.vertices.begin(), s.vertices.end()});
    for (int i = 0; i < 6; ++i) rungs.insert({"a" + std::to_string(i), "b" + std::to_string(i)});
    if (seps != rungs) o.fail("separators are not the six rungs");
    int k4 = 0, digons = 0;
    for (int b = 0; b < static_cast<int>(d.bags.size()); ++b) {
        const MultiGraph t = torso(d, b);
        k4 += is_k4(t);
        digons += t.num_vertices() == 2 && t.num_edges() == 2 && t.total_length() == 2;
    }
    if (d.bags.size() != 12 || k4 != 6 || digons != 6) o.fail("torsos are not 6 K4 and 6 digons");
    const Metrics m = metrics(d);
    if (m.width != 3 || m.adhesion != 2 || m.locality.infinite || m.locality.value != 5)
        o.fail("metrics width " + std::to_string(m.width) + " adhesion " + std::to_string(m.adhesion) + " locality " +
               m.locality.str());
    if (!same_labelled_graph(underlying_graph(d), p)) o.fail("underlying graph differs from PRISM6");
    o.detail = std::to_string(k4) + " K4, " + std::to_string(digons) + " digons, width 3, adhesion 2, locality " +
               m.locality.str();
    return o;
}

Outcome canonical_structure() {
    Outcome o;
    long instances = 0, torsos = 0;
    for (const auto& [name, g, r] : simple_l2c_corpus(2, 200, 14, {3, 4, 5, 6})) {
        ++instances;
        const CanonicalResult res = canonical_decomposition(g, r);
        for (int b = 0; b < static_cast<int>(res.decomposition.bags.size()); ++b) {
            const MultiGraph t = torso(res.decomposition, b);
            ++torsos;
            // The oracle works on the subdivision; a torso beyond its cap counts as a failure.
            if (oracle::subdivided(t).num_vertices() > oracle::kMaxVertices) {
                o.fail(name + " bag " + std::to_string(b) + " is beyond the oracle cap");
                continue;
            }
            if (!oracle::oracle_basic(t, r)) o.fail(name + " bag " + std::to_string(b) + " is not basic by the oracle");
        }
    }
    o.detail = std::to_string(torsos) + " torsos of " + std::to_string(instances) + " instances oracle-verified";
    return o;
}

Outcome necessity() {
    Outcome o;
    long checked = 0;
    for (const auto& [name, g, r] : simple_l2c_corpus(3, 50, 14, {3, 4, 5, 6}, false)) {
        const CanonicalResult canon = canonical_decomposition(g, r);
        const auto nset = noncrossed_names(g, canon.analysis);
        for (std::uint64_t seed : {101u, 202u, 303u}) {
            const GreedyResult res = greedy_decomposition(g, r, {GreedyPolicy::Kind::random, seed});
            std::set<std::set<std::string>> cut;
            for (const CutStep& s : res.certificate.steps) cut.insert({s.separator.first, s.separator.second});
            for (const auto& [a, b] : nset) {
                ++checked;
                if (!cut.count({a, b})) o.fail(name + " seed " + std::to_string(seed) + " never cuts {" + a + "," + b + "}");
            }
        }
    }
    o.detail = std::to_string(checked) + " separator/certificate pairs over 50 instances x 3 policies";
    return o;
}

Outcome generation() {
    Outcome o;
    fx::Rng rng(4);
    std::vector<MultiGraph> graphs;
    for (const auto& f : fx::all()) graphs.push_back(f.graph);
    int with_multi = 0;
    for (int i = 0; i < 200; ++i) {
        graphs.push_back(fx::random_multigraph(rng, 10));
        with_multi += !is_simple(graphs.back());
    }
    long balls = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (long r = 3; r <= 8; ++r)
            for (int v = 0; v < graphs[i].num_vertices(); ++v) {
                ++balls;
                if (!check_generation(graphs[i], ball(graphs[i], v, Radius2::half_of(Scale::of(r))), Scale::of(r)))
                    o.fail("graph " + std::to_string(i) + " vertex " + graphs[i].name(v) + " r=" + std::to_string(r));
            }
    // Sharpness: the ball of radius r/2 in C_r holds a cycle that no shorter cycles generate.
    for (long r = 3; r <= 8; ++r) {
        const MultiGraph c = fx::cycle(static_cast<int>(r));
        const MultiGraph b = ball_graph(c, ball(c, 0, Radius2::half_of(Scale::of(r))));
        if (cycle_space_dim(b) != 1 || short_cycle_rank(b, r - 1) != 0) o.fail("C_" + std::to_string(r) + " is not sharp");
    }
    o.detail = std::to_string(balls) + " balls, " + std::to_string(with_multi) + " random graphs with loops or parallel edges; C_3..C_8 sharp";
    return o;
}

Outcome lemma_suite() {
    Outcome o;
    fx::Rng rng(5);
    std::mt19937_64 perm(55);
    long checks = 0;
    std::vector<fx::Named> any = fx::all();
    for (int i = 0; i < 80; ++i) {
        const Scale r = Scale::of(3 + i % 6);
        any.push_back({"ear" + std::to_string(i), fx::random_ear_graph(rng, 12, r), r});
    }
    for (int i = 0; i < 60; ++i) {
        const Scale r = Scale::of(3 + i % 6);
        any.push_back({"mg" + std::to_string(i), fx::random_multigraph(rng, 9), r});
    }
    auto record = [&](const OracleReport& rep) {
        ++checks;
        o.note(rep);
    };
    for (const auto& [name, g, r] : any) {
        record(lemmas::unique_copy(g, r, name));
        record(lemmas::unique_copy_extended(g, r, name));
        record(lemmas::cycle_gen(g, r, name));
        if (!has_loop(g)) {
            record(lemmas::no_cut_vertex(g, r, name));
            record(lemmas::cut_all1(g, r, name));
            record(lemmas::cut_far(g, r, name));
            if (is_connected(g)) record(lemmas::block_cut(g, r, name));
        }
        if (!is_locally_2_connected(g, r)) continue;
        record(lemmas::local_is_very_local(g, r, name));
        record(lemmas::cross_sym(g, r, name));
        record(lemmas::alt_exist(g, r, name));
        record(lemmas::loc2con_pres(g, r, name));
        record(lemmas::inverse_sum_cut(g, r, name));
        record(lemmas::projection(g, r, name));
        record(lemmas::lifting(g, r, name));
        record(lemmas::lift_non_crossing(g, r, name));
        record(lemmas::commute(g, r, 10, perm, name));
    }
    o.detail = std::to_string(checks) + " lemma checks on " + std::to_string(any.size()) + " instances";
    return o;
}

Outcome termination() {
    Outcome o;
    long steps = 0, runs = 0;
    for (const auto& [name, g, r] : simple_l2c_corpus(6, 80, 14, {3, 4, 5, 6})) {
        for (std::uint64_t seed : {0u, 7u, 8u}) {
            const GreedyPolicy policy = seed ? GreedyPolicy{GreedyPolicy::Kind::random, seed} : GreedyPolicy{};
            const GreedyResult res = greedy_decomposition(g, r, policy);
            ++runs;
            for (const GreedyLedger& l : res.ledger) {
                ++steps;
                if (!l.decreasing) o.fail(name + ": a child is not smaller in the triplex ordering");
                if (!l.counts_balance) o.fail(name + ": edge/vertex/component balance fails");
                if (!l.rank_balance) o.fail(name + ": cycle-space balance fails");
            }
        }
    }
    o.detail = std::to_string(steps) + " ledger entries over " + std::to_string(runs) + " greedy runs";
    return o;
}

Outcome classical() {
    Outcome o;
    fx::Rng rng(7);
    for (int i = 0; i < 100; ++i) o.note(oracle::oracle_classical(fx::random_2_connected(rng, 12), "rand" + std::to_string(i)));
    o.detail = "100 random 2-connected graphs";
    return o;
}

Outcome crossing_strip() {
    Outcome o;
    const oracle::CrossingStripFixture f = oracle::build_crossing_strip_fixture();
    o.note(oracle::oracle_double_ball_regression(f.graph, {{f.b1, f.b2}}, f.r, true, "crossing-strip"));
    o.note(oracle::oracle_double_ball_regression(fx::prism6(), {{"a0", "b0"}}, Scale::of(3), false, "PRISM6"));
    const CutAllResult cut = cut_all(f.graph, {{f.b1, f.b2}}, f.r);
    const oracle::ProjectionTally t = oracle::projection_tally(f.graph, cut, f.r);
    o.detail = std::to_string(f.graph.num_vertices()) + " vertices at r=" + f.r.str() + ": " +
               std::to_string(t.double_ball_failures) + " double-ball failures, " + std::to_string(t.expl_failures) +
               " explorer failures over " + std::to_string(t.pairs) + " pairs";
    return o;
}

Outcome determinism() {
    Outcome o;
    std::mt19937_64 perm(9);
    long runs = 0;
    for (const auto& [name, g, r] : simple_l2c_corpus(9, 30, 14, {3, 4, 5, 6})) {
        auto canonical = [&] {
            const CanonicalResult c = canonical_decomposition(g, r);
            return to_json(g, c.decomposition, Pipeline::canonical, c.certificate, metrics(c.decomposition));
        };
        auto greedy = [&] {
            const GreedyResult res = greedy_decomposition(g, r, {GreedyPolicy::Kind::random, 17});
            const GraphDecomposition d = replay_decomposition(g, res.certificate, r);
            return to_json(g, d, Pipeline::greedy, res.certificate, metrics(d));
        };
        auto blockcut = [&] {
            const GraphDecomposition d = blockcut_decomposition(g, r);
            return to_json(g, d, Pipeline::blockcut, {}, metrics(d));
        };
        for (const auto& run : std::vector<std::function<std::string()>>{canonical, greedy, blockcut}) {
            ++runs;
            if (run() != run()) o.fail(name + ": two runs differ");
        }
        o.note(oracle::oracle_commute(g, noncrossed_names(g, analyse_separators(g, r)), r, 10, perm, name));
        if (!has_loop(g)) o.note(oracle::oracle_vertex_commute(g, r, 10, perm, name));
    }
    o.detail = std::to_string(runs) + " repeated runs; 10 cut orders per instance";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"prism reproduction", prism_reproduction},
        {"canonical torsos are basic", canonical_structure},
        {"noncrossed separators are necessary", necessity},
        {"short cycles generate balls", generation},
        {"lemma suite", lemma_suite},
        {"greedy termination ledgers", termination},
        {"classical consistency at r = inf", classical},
        {"double-ball projection regression", crossing_strip},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("error: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail;
        if (!o.pass) line << " | first failure: " << o.first_failure;
        line.precision(2);
        line << std::fixed << " [" << secs << "s]";
        std::cout << line.str() << std::endl;
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
