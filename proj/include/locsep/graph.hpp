#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "locsep/error.hpp"

namespace locsep {

inline constexpr long kUnreachable = std::numeric_limits<long>::max() / 4;

enum class EdgeTag { original, torso, subdivision };

const char* to_string(EdgeTag tag);

/// An edge record. `u` and `v` are vertex indices; `id` is stable across derived graphs.
struct Edge {
    int id = 0;
    int u = 0;
    int v = 0;
    long len = 1;
    EdgeTag tag = EdgeTag::original;

    bool is_loop() const { return u == v; }
};

/// Finite multigraph with positive integer edge lengths. Loops and parallel edges are allowed.
///
/// Vertices are dense indices carrying unique string names. Edges are stored by position;
/// `Edge::id` is a separate stable identifier so that inherited edges keep their identity
/// when a graph is rewritten.
class MultiGraph {
public:
    int add_vertex(const std::string& name);
    /// Index of `name`, adding the vertex if it is new.
    int ensure_vertex(const std::string& name);
    /// Adds an edge and returns its position. `id < 0` draws a fresh id.
    int add_edge(int u, int v, long len = 1, EdgeTag tag = EdgeTag::original, int id = -1);

    int num_vertices() const { return static_cast<int>(names_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> find(const std::string& name) const;
    /// Index of `name`; throws ErrorKind::input when unknown.
    int index(const std::string& name) const;

    const Edge& edge(int pos) const { return edges_[pos]; }
    const std::vector<Edge>& edges() const { return edges_; }
    /// Edge positions incident with `v`. A loop is listed once.
    const std::vector<int>& incident(int v) const { return incident_[v]; }
    int other_end(int pos, int v) const;
    std::optional<int> edge_position(int id) const;
    int next_edge_id() const { return next_id_; }

    /// Degree with loops counted twice.
    int degree(int v) const;
    bool unit_lengths() const;
    long total_length() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::unordered_map<int, int> id_to_pos_;
    int next_id_ = 0;
};

/// The locality parameter r, a natural number or infinity.
struct Scale {
    long value = 0;
    bool infinite = false;

    static Scale of(long r) { return Scale{r, false}; }
    static Scale inf() { return Scale{0, true}; }

    bool admits(long length) const { return infinite || length <= value; }
    /// Bound usable for cycle searches: `value`, or the total edge length of `g` when infinite.
    long bound_for(const MultiGraph& g) const;
    std::string str() const;
    bool operator==(const Scale& o) const { return infinite == o.infinite && (infinite || value == o.value); }
};

/// A radius stored in half-steps: radius s is 2s, radius s+1/2 is 2s+1.
struct Radius2 {
    long value = 0;
    bool infinite = false;

    static Radius2 half_of(Scale r) { return Radius2{r.value, r.infinite}; }
    /// Largest integer distance inside the ball.
    long max_distance() const { return infinite ? kUnreachable - 1 : value / 2; }
};

/// Ball of radius `radius2/2` around `center`.
///
/// An edge of length `len` between members at distances a and b is kept iff
/// a + b + len <= radius2, i.e. iff its subdivision path lies inside the ball.
/// On unit-length graphs this is exactly: integer radius drops edges between two
/// vertices at maximal distance; half-integer radius keeps all induced edges.
struct Ball {
    int center = -1;
    Radius2 radius2;
    std::vector<long> dist;         // per vertex of the host graph; kUnreachable outside
    std::vector<int> members;       // sorted vertex indices
    std::vector<int> kept_edges;    // sorted edge positions of the host graph
    std::vector<int> detached;      // non-loop edges at the center that are not kept

    bool contains(int v) const { return dist[v] != kUnreachable; }
};

/// Origin of a vertex of a derived graph.
struct Origin {
    enum class Kind { original, slice, interior };
    Kind kind = Kind::original;
    std::string parent;   // vertex this one replaces (original / slice)
    std::string root;     // original vertex of the input graph (original / slice)
    int component = -1;   // local component index for slices
    int edge_id = -1;     // subdivided edge (interior)
    long offset = 0;      // position along that edge, in [1, len-1] (interior)
};

using Provenance = std::vector<Origin>;

/// Identity provenance: every vertex is its own origin.
Provenance identity_provenance(const MultiGraph& g);

/// Single-source distances under edge lengths. Loops have no effect.
std::vector<long> distances_from(const MultiGraph& g, int source);
/// Multi-source distances restricted to the edges flagged in `allowed` (by position).
std::vector<long> distances_from(const MultiGraph& g, const std::vector<int>& sources,
                                 const std::vector<char>& allowed);

/// Length of a shortest u-v path, or kUnreachable.
long distance(const MultiGraph& g, int u, int v);
long distance(const MultiGraph& g, const std::string& u, const std::string& v);

Ball ball(const MultiGraph& g, int v, Radius2 radius2);
MultiGraph ball_graph(const MultiGraph& g, const Ball& b);
/// The ball with its center and the center's edges removed.
MultiGraph punctured_ball(const MultiGraph& g, int v, Radius2 radius2);

/// Subgraph on the given vertices and edge positions; names and edge ids are preserved.
MultiGraph subgraph(const MultiGraph& g, const std::vector<int>& vertices,
                    const std::vector<int>& edge_positions);
MultiGraph remove_vertices(const MultiGraph& g, const std::vector<int>& vertices);

/// Connected components as sorted vertex lists, ordered by their smallest vertex name.
std::vector<std::vector<int>> components(const MultiGraph& g);
int num_components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

struct Subdivision {
    MultiGraph graph;
    Provenance provenance;
};

/// Replaces each edge of length l by a path of l unit edges.
Subdivision subdivide(const MultiGraph& g);

/// Parses the edge-list text format: `#` comment lines, data lines `u w [len]`.
MultiGraph parse_edge_list(std::istream& in);
MultiGraph parse_edge_list_string(const std::string& text);
MultiGraph read_edge_list_file(const std::string& path);
std::string to_edge_list(const MultiGraph& g);

/// Same vertex names, same edge ids with same endpoint names and lengths.
bool same_labelled_graph(const MultiGraph& a, const MultiGraph& b);

}  // namespace locsep
