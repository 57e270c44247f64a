#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "locsep/error.hpp"
#include "locsep/fixtures.hpp"
#include "locsep/graph.hpp"

namespace test {

using namespace locsep;

inline MultiGraph graph(const std::string& text) { return parse_edge_list_string(text); }

inline std::set<std::string> names(const MultiGraph& g, const std::vector<int>& vs) {
    std::set<std::string> out;
    for (int v : vs) out.insert(g.name(v));
    return out;
}

inline std::set<std::string> names(const MultiGraph& g) { return {g.names().begin(), g.names().end()}; }

template <class F>
ErrorKind error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::invariant;
}

inline bool has_loop(const MultiGraph& g) {
    return std::any_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); });
}

/// Random edge lengths in [1, max_len] on a copy of g.
inline MultiGraph with_random_lengths(fixtures::Rng& rng, const MultiGraph& g, long max_len) {
    MultiGraph h;
    for (const auto& n : g.names()) h.add_vertex(n);
    for (const Edge& e : g.edges())
        h.add_edge(e.u, e.v, std::uniform_int_distribution<long>(1, max_len)(rng), e.tag, e.id);
    return h;
}

}  // namespace test
