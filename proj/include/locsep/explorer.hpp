#pragma once

#include <array>
#include <vector>

#include "locsep/graph.hpp"

namespace locsep {

/// Vertices on shortest v-w paths.
struct Core {
    int v = -1;
    int w = -1;
    long distance = 0;
    std::vector<int> members;  // sorted vertex indices
};

Core core_vertices(const MultiGraph& g, int v, int w);

/// The explorer-neighbourhood Expl(v,w) of parameter r.
///
/// Each side's ball B_{r/2} is copied and every member u is labelled by the set of shortest
/// core-to-u paths inside that ball. The label is encoded as (in-ball distance from the core,
/// edge positions of the shortest-path sub-DAG ending at u); two path sets are equal iff these
/// encodings are. The union identifies a vertex's two side copies only when labels agree.
struct ExplorerNeighbourhood {
    static constexpr unsigned kSideV = 1;
    static constexpr unsigned kSideW = 2;

    struct Copy {
        int vertex = -1;           // underlying vertex of the host graph
        unsigned sides = 0;        // kSideV | kSideW
        long core_distance = 0;
        std::vector<int> dag_edges;
    };
    struct CopyEdge {
        int edge = -1;  // position in the host graph
        int a = -1;
        int b = -1;
        unsigned sides = 0;  // balls whose kept edges map onto this copy edge
    };

    int v = -1;
    int w = -1;
    Scale r;
    Core core;
    std::vector<Copy> copies;
    std::vector<CopyEdge> edges;
    std::array<std::vector<int>, 2> side_copy;  // per side: host vertex -> copy id or -1
    int copy_v = -1;
    int copy_w = -1;
    /// Copies as vertices (indices equal copy ids), edges in the order of `edges`.
    MultiGraph graph;

    std::vector<int> copies_of(int vertex) const;
    /// Copy ids of the embedded ball around v (side 0) or w (side 1).
    std::vector<int> ball_image(int side) const;
};

/// Requires v != w in one component with 2 * distance(v, w) <= r.
ExplorerNeighbourhood explorer_neighbourhood(const MultiGraph& g, int v, int w, Scale r);

/// Components of Expl(v,w) - v - w, as sorted copy ids.
struct PuncturedExpl {
    std::vector<std::vector<int>> components;  // ordered by smallest underlying vertex name
    std::vector<int> component_of;             // per copy; -1 for the copies of v and w
};

PuncturedExpl punctured_expl(const MultiGraph& g, const ExplorerNeighbourhood& e);

}  // namespace locsep
