#pragma once

#include <random>
#include <string>

#include "locsep/oracle.hpp"

/// Structural invariants, each checked exhaustively on one instance (g, r). The checks call the
/// engine and compare its output against the stated property; a failed report names the first
/// offending vertex, pair or cycle.
///
/// Cutting refuses a vertex that carries a loop, so the cut checks skip such vertices and
/// separators.
namespace locsep::lemmas {

using oracle::OracleReport;

/// Core vertices of Expl(a1,a2) and their neighbours have one copy each, for every pair at
/// distance <= r/2.
OracleReport unique_copy(const MultiGraph& g, Scale r, const std::string& instance);

/// Every vertex of a cycle of length <= r through a1 and a2 has one copy in Expl(a1,a2).
OracleReport unique_copy_extended(const MultiGraph& g, Scale r, const std::string& instance);

/// The cycles of the two embedded balls span the cycle space of Expl(v,w).
OracleReport cycle_gen(const MultiGraph& g, Scale r, const std::string& instance);

/// For each separator and each local component k, some cycle of length <= r in Expl passes the
/// copy of v with exactly one edge into k. Needs g r-locally 2-connected.
OracleReport local_is_very_local(const MultiGraph& g, Scale r, const std::string& instance);

/// Crossing is symmetric, and a crossing separator has exactly two local components.
OracleReport cross_sym(const MultiGraph& g, Scale r, const std::string& instance);

/// Crossing separators have an alternating cycle of length <= r, and every cycle of length <= r
/// through a1, a2 and some b_i alternates.
OracleReport alt_exist(const MultiGraph& g, Scale r, const std::string& instance);

/// After cutting any local cutvertex, or any separator when g is r-locally 2-connected, slices of
/// one vertex are at distance >= r+1.
OracleReport cut_far(const MultiGraph& g, Scale r, const std::string& instance);

/// Cutting any separator of an r-locally 2-connected graph keeps it r-locally 2-connected.
OracleReport loc2con_pres(const MultiGraph& g, Scale r, const std::string& instance);

/// Gluing every cut back along its torso edges gives g again.
OracleReport inverse_sum_cut(const MultiGraph& g, Scale r, const std::string& instance);

/// Separators of a cut graph between original vertices come from separators of g.
OracleReport projection(const MultiGraph& g, Scale r, const std::string& instance);

/// A separator not crossed by the cut one lifts to a unique separator of the cut graph.
OracleReport lifting(const MultiGraph& g, Scale r, const std::string& instance);

/// Cutting a separator crossed by neither of two others keeps whether their lifts cross.
OracleReport lift_non_crossing(const MultiGraph& g, Scale r, const std::string& instance);

/// cut_all on the noncrossed separators and vertex cuts are independent of the order.
OracleReport commute(const MultiGraph& g, Scale r, int trials, std::mt19937_64& rng, const std::string& instance);

/// No slice of a cut vertex is an r-local cutvertex of the result.
OracleReport no_cut_vertex(const MultiGraph& g, Scale r, const std::string& instance);

/// Cutting every vertex leaves no r-local cutvertex; its components are r-locally 2-connected or
/// single edges. Below r = 3 only the first clause is checked: no graph is r-locally 2-connected.
OracleReport cut_all1(const MultiGraph& g, Scale r, const std::string& instance);

/// The block-cut decomposition has adhesion <= 1 and locality >= r. Needs r >= 3.
OracleReport block_cut(const MultiGraph& g, Scale r, const std::string& instance);

}  // namespace locsep::lemmas
