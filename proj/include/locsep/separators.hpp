#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "locsep/cycles.hpp"
#include "locsep/explorer.hpp"

namespace locsep {

/// Components of the punctured ball B_{r/2}(v) - v. A non-loop edge at v that the ball does
/// not keep (possible only for long weighted edges) counts as a component of its own, as it
/// would after subdivision.
struct CutvertexVerdict {
    bool is_cutvertex = false;
    std::vector<std::vector<int>> components;  // host vertex indices
    std::vector<int> detached_edges;           // edge positions at v outside the ball
};

CutvertexVerdict is_local_cutvertex(const MultiGraph& g, int v, Scale r);

/// An r-local cutvertex or r-local 2-separator together with its local components.
struct LocalSeparator {
    enum class Kind { cutvertex, pair };

    Kind kind = Kind::pair;
    int a = -1;
    int b = -1;  // -1 for cutvertices
    Scale r;
    std::shared_ptr<const ExplorerNeighbourhood> expl;  // pairs only
    PuncturedExpl parts;                                // pairs only
    std::vector<std::vector<int>> vertex_components;    // cutvertices only

    int num_components() const {
        return kind == Kind::pair ? static_cast<int>(parts.components.size())
                                  : static_cast<int>(vertex_components.size());
    }
    bool has(int x) const { return x == a || x == b; }
};

/// The separator with its components when {v,w} is an r-local 2-separator, else nullopt.
std::optional<LocalSeparator> local_2_separator(const MultiGraph& g, int v, int w, Scale r);
bool is_local_2_separator(const MultiGraph& g, int v, int w, Scale r);

/// All r-local 2-separators, ordered by (smaller name, larger name).
std::vector<LocalSeparator> enumerate_local_2_separators(const MultiGraph& g, Scale r);

/// Local 2-separators of a weighted graph, read through its subdivision, that split the graph
/// itself: both ends are vertices of `weighted` and at least two local components contain a copy
/// of one. A component made only of subdivision points is the inside of a long edge, which
/// vertex separators do not split. Pairs are indices into `weighted`, ordered by names.
std::vector<std::pair<int, int>> essential_2_separators(const MultiGraph& weighted, Scale r);

/// Connected, 2-regular, and of total length <= r.
bool is_short_cycle(const MultiGraph& g, Scale r);
bool is_locally_2_connected(const MultiGraph& g, Scale r);
bool is_locally_3_connected(const MultiGraph& g, Scale r);

struct CrossingReport {
    bool pre_crosses = false;
    bool crosses = false;
    std::optional<Cycle> witness;   // a cycle of Expl(B).graph
    std::vector<int> witness_host;  // its vertices mapped to the host graph
    bool alternates = false;        // witness order is a b a b
};

/// Does the pair A cross the separator B? Tries every pair of copies of A's vertices in Expl(B).
CrossingReport crosses(const MultiGraph& g, const LocalSeparator& a, const LocalSeparator& b,
                       ExpansionBudget* budget = nullptr);

struct SeparatorAnalysis {
    std::vector<LocalSeparator> separators;
    std::vector<std::vector<CrossingReport>> reports;  // reports[i][j]: separators[i] crosses separators[j]
    std::vector<int> noncrossed;                       // indices crossed by no separator

    bool crossed_by_any(int j) const;
};

SeparatorAnalysis analyse_separators(const MultiGraph& g, Scale r, ExpansionBudget* budget = nullptr);
std::vector<LocalSeparator> noncrossed_set(const MultiGraph& g, Scale r, ExpansionBudget* budget = nullptr);

}  // namespace locsep
