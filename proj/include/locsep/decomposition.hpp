#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locsep/surgery.hpp"

namespace locsep {

/// A graph-decomposition: bags and separators joined by decomposition edges.
///
/// Bags exclude torso edges; torso weights live on the incidences and enter only through
/// torso(). Separator graphs are edgeless: the edge between an adjacent pair lives in its
/// digon bag, so every incidence map is a plain vertex embedding.
struct GraphDecomposition {
    struct Bag {
        MultiGraph graph;
        std::vector<std::string> roots;  // per bag vertex: vertex of the decomposed graph
        bool artificial = false;         // digon bag made of one separator edge
    };
    struct Separator {
        std::vector<std::string> vertices;  // vertices of the decomposed graph
        bool has_edge = false;              // the decomposed graph joins the pair by an edge
    };
    struct Incidence {
        int sep = -1;
        int bag = -1;
        std::vector<int> iota;   // separator vertex index -> bag vertex index
        long torso_weight = 0;   // 0 for cutvertex separators
    };

    Scale r;
    std::vector<Bag> bags;
    std::vector<Separator> separators;
    std::vector<Incidence> incidences;

    std::vector<int> incidences_of_bag(int bag) const;
    std::vector<int> incidences_of_separator(int sep) const;
};

/// Checks bipartite well-formedness, injective iota maps with matching roots, and disjoint
/// images per separator within each bag. Throws ErrorKind::invariant.
void validate(const GraphDecomposition& d);

/// Builds the decomposition of a cut along separators. Bags are the components of the cut
/// graph without torso edges; every torso edge becomes one incidence.
GraphDecomposition build_decomposition(const MultiGraph& g, const CutAllResult& cut, Scale r);

/// The bag plus, for every incidence, an edge between the images with the torso weight.
MultiGraph torso(const GraphDecomposition& d, int bag);

/// Disjoint union of the bags identified along every separator's images, with vertices renamed
/// to their roots.
MultiGraph underlying_graph(const GraphDecomposition& d);

struct Locality {
    long value = 0;
    bool infinite = false;
    bool lower_bound = false;  // no odd traversal up to `value + 1`, search stopped there

    std::string str() const;
};

struct Metrics {
    int width = 0;
    int adhesion = 0;
    Locality locality;
};

/// Width, adhesion and locality. Locality searches cycles of the underlying graph up to
/// `cycle_bound`; with -1 the bound starts at r+2 and doubles until an odd traversal is found or
/// every cycle has been seen. A search cut short by the budget reports a lower bound.
Metrics metrics(const GraphDecomposition& d, long cycle_bound = -1, ExpansionBudget* budget = nullptr);

/// Per separator, the number of traversals by the cycle of underlying_graph(d).
std::vector<int> traversal_counts(const GraphDecomposition& d, const MultiGraph& underlying, const Cycle& c);

/// The certificate of a pipeline: the cuts in order, replayable on the input graph.
struct CutCertificate {
    std::vector<CutStep> steps;
};

/// Replays the certificate and rebuilds the decomposition it describes.
GraphDecomposition replay_decomposition(const MultiGraph& g, const CutCertificate& cert, Scale r);

struct CanonicalResult {
    GraphDecomposition decomposition;
    CutCertificate certificate;
    CutAllResult cut;
    SeparatorAnalysis analysis;
};

/// The canonical decomposition: cut along the separators crossed by no separator. Needs a simple
/// graph: a bond such as a triangle with a doubled edge has no separator yet is not basic.
CanonicalResult canonical_decomposition(const MultiGraph& g, Scale r, ExpansionBudget* budget = nullptr);

/// A cycle of total length <= r, or a connected graph with at least four vertices whose
/// subdivision is r-locally 2-connected and which has no essential 2-separator. Long edges are
/// edges here: the ends of a torso edge do not separate its subdivision points from the rest.
bool is_basic_piece(const MultiGraph& weighted, Scale r);

struct GreedyPolicy {
    enum class Kind { lexicographic, random };
    Kind kind = Kind::lexicographic;
    std::uint64_t seed = 0;
};

/// Bookkeeping of one greedy cut: the cut component and its descendants.
struct GreedyLedger {
    Triplex parent;
    std::vector<Triplex> children;
    long e = 0, v = 0, k = 0, gamma = 0;            // parent piece
    long e2 = 0, v2 = 0, k2 = 0, gamma2 = 0, ell = 0;  // its descendants after the cut
    bool counts_balance = false;  // e2 = e + ell and v2 = v + 2(ell - 1)
    bool rank_balance = false;    // gamma2 = gamma - (ell - 2) + (k2 - k)
    bool decreasing = false;      // every child is below the parent in the triplex order
};

struct GreedyResult {
    MultiGraph graph;  // final graph; its components are the pieces
    Provenance provenance;
    std::vector<MultiGraph> pieces;
    CutCertificate certificate;
    std::vector<GreedyLedger> ledger;
};

/// Cuts essential separators until every component is basic. Needs a simple graph.
GreedyResult greedy_decomposition(const MultiGraph& g, Scale r, GreedyPolicy policy = {},
                                  ExpansionBudget* budget = nullptr);

/// The local block-cutvertex decomposition: every r-local cutvertex cut at once. Every bag is
/// r-locally 2-connected or a single edge, except the lone bag of a one-vertex graph. Needs r >= 3.
GraphDecomposition blockcut_decomposition(const MultiGraph& g, Scale r);

/// SHA-256 of the canonical edge-list text, hex encoded.
std::string graph_hash(const MultiGraph& g);

/// Which pipeline produced a decomposition; decides the bag classification `check` expects.
enum class Pipeline { canonical, greedy, blockcut };
const char* to_string(Pipeline p);

std::string to_json(const MultiGraph& g, const GraphDecomposition& d, Pipeline kind, const CutCertificate& cert,
                    const Metrics& m);
std::string to_dot(const GraphDecomposition& d);

struct ParsedDecomposition {
    std::string graph_hash;
    Pipeline kind = Pipeline::canonical;
    GraphDecomposition decomposition;
    CutCertificate certificate;
    Metrics metrics;
};

ParsedDecomposition parse_decomposition_json(const std::string& text);

}  // namespace locsep
