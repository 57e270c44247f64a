#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locsep/separators.hpp"

namespace locsep {

/// A torso edge added by one cut. `start` is the slice of the separator's first vertex.
struct TorsoEdge {
    int edge_id = -1;
    std::string start;
    std::string end;
    int component = -1;  // local component index; digons are numbered after the components
    long weight = 0;
    bool artificial = false;  // the parallel edge of a digon component
};

/// Result of one local cut. Provenance is relative to the input graph: `parent` is the input
/// vertex, `root` is carried over from the input's own provenance.
struct CutResult {
    MultiGraph graph;  // may carry weighted torso edges
    Provenance provenance;
    std::vector<TorsoEdge> torso_edges;
    std::vector<int> artificial_components;  // component indices of digon components
    std::vector<std::string> cut;            // the cut vertices, as named in the input
    int num_local_components = 0;
};

/// Slice naming shared by every cut: `<vertex>#<component>`.
std::string slice_name(const std::string& vertex, int component);

/// Cuts the r-local cutvertex v (a non-cutvertex yields one slice). Requires unit lengths,
/// r >= 2 and no loop at v.
CutResult cut_vertex(const MultiGraph& g, int v, Scale r, const Provenance* base = nullptr);

/// Cuts every vertex at once using the local components computed in g.
CutResult cut_all_vertices(const MultiGraph& g, Scale r, const Provenance* base = nullptr);

/// Cuts the r-local 2-separator {v0, v1} of a unit-length graph.
CutResult cut_2separator(const MultiGraph& g, int v0, int v1, Scale r, const Provenance* base = nullptr);

/// Cuts {v0, v1} of a graph with edge lengths: the cut runs on the subdivision and every
/// subdivided edge is contracted back afterwards, keeping its id, length and tag.
CutResult cut_weighted(const MultiGraph& g, int v0, int v1, Scale r, const Provenance* base = nullptr);

/// The lift of the pair {b1, b2} (vertex names of the graph that `cut` was applied to).
std::pair<std::string, std::string> lift(const CutResult& cut, const std::string& b1, const std::string& b2,
                                         Scale r, ExpansionBudget* budget = nullptr);

struct CutStep {
    std::pair<std::string, std::string> separator;  // root names
    std::pair<std::string, std::string> lifted;     // names in the graph before this step
    std::vector<TorsoEdge> torso_edges;
    std::vector<int> artificial_components;
    int num_local_components = 0;
};

struct CutAllResult {
    MultiGraph graph;
    Provenance provenance;  // relative to the input graph
    std::vector<CutStep> steps;
};

struct CutAllOptions {
    bool sort = true;              // process separators in sorted order; otherwise in the given order
    bool verify_noncrossing = true;
    ExpansionBudget* budget = nullptr;
};

/// Cuts the pair (names of state.graph) and appends the step. Roots come from the provenance;
/// vertices without a root (subdivision points) stand for themselves.
CutResult cut_step(CutAllResult& state, const std::pair<std::string, std::string>& pair, Scale r);

/// Cuts a set of pairwise non-crossing r-local 2-separators, lifting the remaining ones
/// after every cut. Separators are given by vertex names of g.
CutAllResult cut_all(const MultiGraph& g, const std::vector<std::pair<std::string, std::string>>& seps, Scale r,
                     const CutAllOptions& options = {});

/// Replays recorded cuts on g. Used to confirm a certificate reproduces the stored graph.
CutAllResult replay_cuts(const MultiGraph& g, const std::vector<CutStep>& steps, Scale r);

/// A family of directed gluing edges for a local 2-sum.
struct SumSpec {
    struct Glue {
        int host = 0;
        int edge_id = -1;
        bool reversed = false;  // start vertex is edge.v instead of edge.u
    };
    std::vector<MultiGraph> hosts;
    std::vector<Glue> glue;
    Scale r;
    std::optional<std::string> start_name;     // name of the merged start vertex
    std::optional<std::string> terminal_name;  // name of the merged terminal vertex
};

struct SumViolation {
    int glue = -1;
    long length = 0;
    long delta = 0;
};

struct SumValidation {
    std::vector<long> gamma;
    std::vector<SumViolation> length_mismatches;
    bool local = true;  // same-host start (terminal) vertices are at distance >= r+1

    bool valid() const { return length_mismatches.empty() && local; }
};

SumValidation validate_sum(const SumSpec& spec);

enum class SumCheck { strict, structural };

/// The local 2-sum. With SumCheck::strict, length mismatches and locality violations are errors;
/// SumCheck::structural still rejects malformed families.
MultiGraph local_2_sum(const SumSpec& spec, SumCheck check = SumCheck::strict);

/// Undoes one cut: glues the result back along its torso edges. The merged vertices take the
/// names of the cut pair.
MultiGraph undo_cut(const MultiGraph& result, const std::vector<TorsoEdge>& torso,
                    const std::pair<std::string, std::string>& pair, Scale r, SumCheck check,
                    SumValidation* validation = nullptr);

/// An embedding of a pattern graph: vertex map and edge map (pattern edge position -> edge position).
struct Embedding {
    std::vector<int> vertices;
    std::vector<int> edges;
};

struct Identification {
    MultiGraph graph;
    std::vector<int> class_of;  // per vertex of the input graph
};

/// Quotient of g by the family, keeping one copy of the clones of every pattern edge.
/// Classes take the smallest member name.
Identification identify_along(const MultiGraph& g, const MultiGraph& pattern, const std::vector<Embedding>& family);

}  // namespace locsep
