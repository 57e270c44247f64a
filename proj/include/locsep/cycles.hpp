#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "locsep/gf2.hpp"
#include "locsep/graph.hpp"

namespace locsep {

/// Node-expansion budget shared by the exhaustive searches. Exceeding it is a hard error.
class ExpansionBudget {
public:
    /// Reads LOCSEP_EXPANSION_BUDGET, defaulting to 10^7.
    static long default_limit();

    ExpansionBudget() : limit_(default_limit()) {}
    explicit ExpansionBudget(long limit) : limit_(limit) {}

    void spend(long n = 1) {
        used_ += n;
        if (used_ > limit_) exceeded();
    }
    long used() const { return used_; }
    long limit() const { return limit_; }

private:
    [[noreturn]] void exceeded() const;

    long limit_;
    long used_ = 0;
};

/// A simple cycle: vertices[i] and vertices[i+1 mod k] are joined by edges[i] (edge positions).
struct Cycle {
    std::vector<int> vertices;
    std::vector<int> edges;
    long length = 0;

    bool contains(int v) const;
};

struct CycleSet {
    std::vector<Cycle> cycles;
    long bound = 0;
};

/// All simple cycles of total length <= bound (loops and digons included), each once.
/// Canonical form: starts at its smallest vertex index and runs toward the smaller neighbour
/// (for digons, toward the smaller edge position).
CycleSet enumerate_short_cycles(const MultiGraph& g, long bound, ExpansionBudget* budget = nullptr);

/// Some cycle of length <= bound through `through` that satisfies `accept`, or nullopt.
std::optional<Cycle> find_cycle(const MultiGraph& g, long bound, int through,
                                const std::function<bool(const Cycle&)>& accept,
                                ExpansionBudget* budget = nullptr);

/// Length of a shortest cycle, or kUnreachable for forests.
long girth(const MultiGraph& g);

/// |E| - |V| + number of components.
long cycle_space_dim(const MultiGraph& g);

gf2::BitVector edge_vector(const MultiGraph& g, const std::vector<int>& edge_positions);

/// GF(2) rank of the cycles of length <= bound.
long short_cycle_rank(const MultiGraph& g, long bound, ExpansionBudget* budget = nullptr);

/// Ordered lexicographically by (gamma, -gammabar, v).
struct Triplex {
    long gamma = 0;
    long gammabar = 0;
    long v = 0;

    std::strong_ordering operator<=>(const Triplex& o) const {
        if (auto c = gamma <=> o.gamma; c != 0) return c;
        if (auto c = o.gammabar <=> gammabar; c != 0) return c;
        return v <=> o.v;
    }
    bool operator==(const Triplex& o) const = default;
};

Triplex triplex(const MultiGraph& g, Scale r, ExpansionBudget* budget = nullptr);

/// True iff the cycles of length <= r span the cycle space of the ball.
bool check_generation(const MultiGraph& g, const Ball& b, Scale r, ExpansionBudget* budget = nullptr);
bool check_generation(const MultiGraph& ball_as_graph, Scale r, ExpansionBudget* budget = nullptr);

}  // namespace locsep
