// decompose: local 2-separator decompositions of edge-list graphs.
//
// Exit status: 0 success, 1 verification failure, 2 input error, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "locsep/cycles.hpp"
#include "locsep/decomposition.hpp"
#include "locsep/error.hpp"
#include "locsep/separators.hpp"

using namespace locsep;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerify = 1, kInput = 2, kCap = 3 };

struct RunConfig {
    std::string input;
    std::string r_text = "3";
    std::string mode = "canonical";
    std::optional<std::uint64_t> seed;
    std::optional<long> budget;
    std::string json_path;
    std::string dot_path;
    std::string decomposition_path;
};

Scale parse_r(const std::string& text) {
    if (text == "inf") return Scale::inf();
    std::size_t used = 0;
    long v = -1;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    require(used == text.size() && v >= 0, ErrorKind::input, "--r must be a non-negative integer or 'inf', got '" + text + "'");
    return Scale::of(v);
}

std::string read_text(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        require(static_cast<bool>(in), ErrorKind::input, "cannot read " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    require(static_cast<bool>(out), ErrorKind::input, "cannot write " + path);
    out << text;
}

// Weighted graphs are decomposed through their subdivision.
MultiGraph load_graph(const std::string& path) {
    std::istringstream in(read_text(path));
    MultiGraph g = parse_edge_list(in);
    if (!g.unit_lengths()) {
        std::cerr << "note: weighted input, decomposing its subdivision\n";
        g = subdivide(g).graph;
    }
    return g;
}

void emit(const RunConfig& cfg, const MultiGraph& g, const GraphDecomposition& d, Pipeline kind,
          const CutCertificate& cert, ExpansionBudget& budget) {
    const Metrics m = metrics(d, -1, &budget);
    write_text(cfg.json_path, to_json(g, d, kind, cert, m));
    if (!cfg.dot_path.empty()) write_text(cfg.dot_path, to_dot(d));
}

int run_separators(const RunConfig& cfg, const MultiGraph& g, Scale r, ExpansionBudget& budget) {
    json out;
    out["r"] = r.infinite ? json("inf") : json(r.value);
    json cut = json::array();
    for (int v = 0; v < g.num_vertices(); ++v)
        if (is_local_cutvertex(g, v, r).is_cutvertex) cut.push_back(g.name(v));
    out["cutvertices"] = cut;
    const SeparatorAnalysis an = analyse_separators(g, r, &budget);
    json seps = json::array();
    json matrix = json::array();
    for (std::size_t i = 0; i < an.separators.size(); ++i) {
        const LocalSeparator& s = an.separators[i];
        seps.push_back({{"id", i},
                        {"vertices", {g.name(s.a), g.name(s.b)}},
                        {"components", s.num_components()},
                        {"crossed", an.crossed_by_any(static_cast<int>(i))}});
        json row = json::array();
        for (std::size_t j = 0; j < an.separators.size(); ++j) row.push_back(i != j && an.reports[i][j].crosses ? 1 : 0);
        matrix.push_back(row);
    }
    out["separators"] = seps;
    out["crosses"] = matrix;  // crosses[i][j]: separator i crosses separator j
    out["noncrossed"] = an.noncrossed;
    write_text(cfg.json_path, out.dump(2) + "\n");
    return kOk;
}

int run_stats(const RunConfig& cfg, const MultiGraph& g, Scale r, ExpansionBudget& budget) {
    const Triplex t = triplex(g, r, &budget);
    json out;
    out["r"] = r.infinite ? json("inf") : json(r.value);
    out["vertices"] = g.num_vertices();
    out["edges"] = g.num_edges();
    out["components"] = num_components(g);
    out["gamma"] = t.gamma;
    out["gammabar"] = t.gammabar;
    out["triplex"] = {t.gamma, -t.gammabar, t.v};
    long cut = 0;
    for (int v = 0; v < g.num_vertices(); ++v) cut += is_local_cutvertex(g, v, r).is_cutvertex;
    out["local_cutvertices"] = cut;
    out["locally_2_connected"] = is_locally_2_connected(g, r);
    if (is_locally_2_connected(g, r)) {
        const SeparatorAnalysis an = analyse_separators(g, r, &budget);
        out["local_2_separators"] = an.separators.size();
        out["noncrossed"] = an.noncrossed.size();
        out["locally_3_connected"] = an.separators.empty();
    }
    write_text(cfg.json_path, out.dump(2) + "\n");
    return kOk;
}

int run_check(const RunConfig& cfg, const MultiGraph& g, ExpansionBudget& budget) {
    require(!cfg.decomposition_path.empty(), ErrorKind::input, "check mode needs --decomposition");
    const ParsedDecomposition p = parse_decomposition_json(read_text(cfg.decomposition_path));
    const GraphDecomposition& d = p.decomposition;
    const Scale r = d.r;
    int failures = 0;
    auto verdict = [&](const std::string& what, bool ok, const std::string& detail = {}) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << (detail.empty() ? "" : ": " + detail) << "\n";
        failures += !ok;
    };

    verdict("graph hash", p.graph_hash == graph_hash(g));
    try {
        validate(d);
        verdict("well-formed", true);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::invariant) throw;
        verdict("well-formed", false, e.what());
        return kVerify;
    }
    verdict("underlying graph equals input", same_labelled_graph(underlying_graph(d), g));
    // The replay below runs the certificate on g, which only makes sense for the same graph.
    if (failures > 0) return kVerify;

    const Metrics stored = p.metrics;
    const Metrics m = metrics(d, -1, &budget);
    verdict("metrics", m.width == stored.width && m.adhesion == stored.adhesion && m.locality.infinite == stored.locality.infinite &&
                           m.locality.value == stored.locality.value && m.locality.lower_bound == stored.locality.lower_bound,
            "width " + std::to_string(m.width) + " adhesion " + std::to_string(m.adhesion) + " locality " + m.locality.str());

    const GraphDecomposition rebuilt =
        p.kind == Pipeline::blockcut ? blockcut_decomposition(g, r) : replay_decomposition(g, p.certificate, r);
    verdict("replay reproduces the decomposition",
            to_json(g, rebuilt, p.kind, p.certificate, stored) == to_json(g, d, p.kind, p.certificate, stored));

    std::string bad;
    for (std::size_t b = 0; b < d.bags.size(); ++b) {
        bool ok = false;
        if (p.kind == Pipeline::blockcut) {
            const MultiGraph& bg = d.bags[b].graph;
            ok = (bg.num_vertices() == 2 && bg.num_edges() == 1) || (bg.num_vertices() == 1 && bg.num_edges() == 0) ||
                 is_locally_2_connected(bg, r);
        } else {
            ok = is_basic_piece(torso(d, static_cast<int>(b)), r);
        }
        if (!ok) bad += (bad.empty() ? "bags " : ", ") + std::to_string(b);
    }
    verdict("torso classification", bad.empty(), bad);
    return failures == 0 ? kOk : kVerify;
}

int run(const RunConfig& cfg) {
    const Scale r = parse_r(cfg.r_text);
    ExpansionBudget budget = cfg.budget ? ExpansionBudget(*cfg.budget) : ExpansionBudget();
    const MultiGraph g = load_graph(cfg.input);
    if (cfg.mode == "check") return run_check(cfg, g, budget);
    if (cfg.mode == "separators") return run_separators(cfg, g, r, budget);
    if (cfg.mode == "stats") return run_stats(cfg, g, r, budget);
    require(r.infinite || r.value >= 3, ErrorKind::input, "--r must be at least 3 for " + cfg.mode);
    if (cfg.mode == "blockcut") {
        emit(cfg, g, blockcut_decomposition(g, r), Pipeline::blockcut, {}, budget);
        return kOk;
    }
    if (cfg.mode == "canonical") {
        const CanonicalResult res = canonical_decomposition(g, r, &budget);
        emit(cfg, g, res.decomposition, Pipeline::canonical, res.certificate, budget);
        return kOk;
    }
    GreedyPolicy policy;
    if (cfg.seed) policy = {GreedyPolicy::Kind::random, *cfg.seed};
    const GreedyResult res = greedy_decomposition(g, r, policy, &budget);
    emit(cfg, g, replay_decomposition(g, res.certificate, r), Pipeline::greedy, res.certificate, budget);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decompose a graph along its r-local 2-separators."};
    RunConfig cfg;
    app.add_option("input", cfg.input, "Edge-list file ('-' for stdin): lines 'u w [len]', '#' comments")->required();
    app.add_option("--r", cfg.r_text, "Locality parameter: a non-negative integer or 'inf'")->capture_default_str();
    app.add_option("--mode", cfg.mode, "Pipeline or report")
        ->check(CLI::IsMember({"canonical", "greedy", "blockcut", "separators", "check", "stats"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Greedy: pick separators at random with this seed (default: lexicographic)");
    app.add_option("--budget", cfg.budget, "Node-expansion budget (default: LOCSEP_EXPANSION_BUDGET or 10^7)");
    app.add_option("--json", cfg.json_path, "Write JSON here instead of stdout");
    app.add_option("--dot", cfg.dot_path, "Also write the decomposition as DOT");
    app.add_option("--decomposition", cfg.decomposition_path, "Check: the decomposition JSON to verify");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInput;
    }
    try {
        return run(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::input:
            case ErrorKind::precondition: return kInput;
            case ErrorKind::cap_exceeded: return kCap;
            case ErrorKind::invariant: return kVerify;
        }
        return kVerify;
    }
}
