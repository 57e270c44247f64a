#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "locsep/graph.hpp"

namespace locsep {
struct CutAllResult;
}

/// Brute-force re-implementations of the local notions. Nothing here calls the explorer,
/// separator or surgery engines except where a check compares against them; the predicates
/// are rebuilt from MultiGraph with breadth-first search and explicit path enumeration.
namespace locsep::oracle {

inline constexpr int kMaxVertices = 16;
inline constexpr long kMaxScale = 8;

struct OracleReport {
    OracleReport() = default;
    OracleReport(std::string check_name, std::string instance_name)
        : check(std::move(check_name)), instance(std::move(instance_name)) {}

    std::string check;
    std::string instance;
    bool pass = true;
    std::optional<std::string> counterexample;  // set iff !pass

    void fail(const std::string& what);
    /// One JSON object on one line.
    std::string json_line() const;
};

/// Unit-length copy of g: every edge of length l becomes a path through l-1 new vertices named
/// "~<edge id>.<offset>".
MultiGraph subdivided(const MultiGraph& g);

/// Unit lengths, at most kMaxVertices vertices, r finite and <= kMaxScale or infinite.
void check_caps(const MultiGraph& g, Scale r);

bool oracle_cutvertex(const MultiGraph& g, int v, Scale r);
bool oracle_separator(const MultiGraph& g, int v, int w, Scale r);
/// Components of the punctured explorer-neighbourhood, or 0 when v, w are too far apart.
int oracle_separator_components(const MultiGraph& g, int v, int w, Scale r);
/// The same components, each as the host vertices of its copies.
std::vector<std::vector<int>> oracle_separator_parts(const MultiGraph& g, int v, int w, Scale r);
bool oracle_locally_2_connected(const MultiGraph& g, Scale r);
bool oracle_locally_3_connected(const MultiGraph& g, Scale r);
/// A cycle of total length <= r, or a connected graph on at least four vertices with an r-locally
/// 2-connected subdivision in which no pair of original vertices has two local components that
/// both reach an original vertex.
bool oracle_basic(const MultiGraph& weighted, Scale r);

/// Classical notions on the whole graph.
bool classical_cutvertex(const MultiGraph& g, int v);
bool classical_2_separator(const MultiGraph& g, int v, int w);

/// r = infinity against the classical theory, on a small 2-connected graph.
OracleReport oracle_classical(const MultiGraph& g, const std::string& instance);

/// Are the two cut results the same graph up to a bijection that keeps roots, original edge
/// ids and the multiset of torso edges?
bool provenance_isomorphic(const MultiGraph& a, const Provenance& pa, const MultiGraph& b, const Provenance& pb);

/// cut_all under `trials` random orders of `seps`; every result must be provenance-isomorphic.
OracleReport oracle_commute(const MultiGraph& g, const std::vector<std::pair<std::string, std::string>>& seps, Scale r,
                            int trials, std::mt19937_64& rng, const std::string& instance);

/// Is (B_{r/2}(v) u B_{r/2}(w)) - v - w disconnected, with v, w at distance <= r/2?
bool double_ball_separator(const MultiGraph& g, int v, int w, Scale r);

struct ProjectionTally {
    long pairs = 0;              // pairs of non-subdivision vertices with distinct roots
    long double_ball_failures = 0;  // double-ball separators of G' whose roots are none in G
    long expl_failures = 0;         // local 2-separators of G' whose roots are none in G
    std::vector<std::pair<std::string, std::string>> double_ball_witnesses;
};

/// Compares both separator notions under projection from the cut graph back to g.
ProjectionTally projection_tally(const MultiGraph& g, const CutAllResult& cut, Scale r);

struct CrossingStripFixture {
    MultiGraph graph;
    Scale r;
    std::string a1, a2, b1, b2;
    int cycle_length = 0;
    int strip_length = 0;
};

/// Two crossing separators {a1,a2}, {b1,b2} on a short cycle, plus a triangulated strip from a
/// neighbour of a1 to a neighbour of b1 whose end rungs are glued to cycle edges. Searches r,
/// cycle and strip sizes until the double-balls at {a1,a2} and {b1,b2} are disconnected, the one
/// at {a1,b1} is connected, and cutting {b1,b2} produces a double-ball separator at a slice of b1
/// next to a1. Throws when none works.
CrossingStripFixture build_crossing_strip_fixture();

/// Cuts `pairs` and tallies projection failures of both notions. Passes iff explorer-neighbourhood
/// separators always project and a double-ball failure occurs exactly when `expect_regression`.
OracleReport oracle_double_ball_regression(const MultiGraph& g, const std::vector<std::pair<std::string, std::string>>& pairs,
                                           Scale r, bool expect_regression, const std::string& instance);

/// Sequential cut_vertex over a random vertex order against cut_all_vertices.
OracleReport oracle_vertex_commute(const MultiGraph& g, Scale r, int trials, std::mt19937_64& rng,
                                   const std::string& instance);

}  // namespace locsep::oracle
