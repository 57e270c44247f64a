#pragma once

#include <random>
#include <string>
#include <vector>

#include "locsep/graph.hpp"

namespace locsep::fixtures {

/// C6 strong product K2: vertices a0..a5, b0..b5; rungs a_i b_i.
MultiGraph prism6();
/// Cycle v0..v{n-1}.
MultiGraph cycle(int n);
/// Path p0..p{n-1}.
MultiGraph path(int n);
MultiGraph complete(int n);
/// Two triangles sharing the vertex c.
MultiGraph bowtie();
/// Poles s, t joined by `paths` internally disjoint paths of length `len`.
MultiGraph theta(int paths = 3, int len = 2);
/// Two triangles glued along the edge b-c.
MultiGraph diamond();
/// The square of C30 with vertices 0, 10 and 20 identified into c.
MultiGraph triple_glued_ring();

struct Named {
    std::string name;
    MultiGraph graph;
    Scale r;
};

/// Every fixture at the scale the tests use it with.
std::vector<Named> all();

using Rng = std::mt19937_64;

/// Ear construction: a cycle of length <= r, then ears closing cycles of length <= r. The result
/// is connected and every vertex lies on a cycle of length <= r; callers filter for local
/// 2-connectivity.
MultiGraph random_ear_graph(Rng& rng, int max_vertices, Scale r);

/// Ear decomposition without length limits and without parallel edges: 2-connected and simple.
MultiGraph random_2_connected(Rng& rng, int max_vertices);

/// Connected multigraph with loops and parallel edges.
MultiGraph random_multigraph(Rng& rng, int max_vertices);

/// The same labelled graph with its vertices inserted in a random order.
MultiGraph shuffle_names(Rng& rng, const MultiGraph& g);

}  // namespace locsep::fixtures
