#pragma once

#include "treefree/graph.hpp"

#include <optional>
#include <vector>

namespace treefree {

// Greedy colouring of G[within] in index order; returns the largest class.
// Size is at least ceil(|within| / (max degree + 1)).
VertexSet greedy_maxdeg_stable(const Graph& g, const VertexSet& within);
inline VertexSet greedy_maxdeg_stable(const Graph& g)
{
    return greedy_maxdeg_stable(g, g.vertices());
}

// Min-degree greedy: take a vertex of minimum degree, delete its closed
// neighbourhood, repeat. Size is at least n^2 / (n + 2|E|).
VertexSet turan_stable(const Graph& g, const VertexSet& within);
inline VertexSet turan_stable(const Graph& g)
{
    return turan_stable(g, g.vertices());
}

struct RamseyResult {
    VertexSet set;
    // false: `set` is stable but smaller than requested (failure certificate).
    bool complete = false;
    // an edge was met where the clique bound says none can exist.
    bool clique_bound_broken = false;
};

// Stable set of size m inside G[within], assuming omega(G[within]) <= k.
// Guaranteed to complete when k >= 2 and |within| >= k^m.
RamseyResult ramsey_stable(const Graph& g, const VertexSet& within, int k, int m);

// Ordering x_1..x_n of X where each x_i has at most d neighbours in
// {x_{i+1}..x_n} union (host \ X); nullopt when none exists. Exact.
std::optional<std::vector<int>> is_degenerate_in(const Graph& g, const VertexSet& host,
                                                 const VertexSet& x, int d);

// True when `ordering` is a permutation of X with the property above.
bool is_degenerate_ordering(const Graph& g, const VertexSet& host, const VertexSet& x,
                            const std::vector<int>& ordering, int d);

// Colours X with at most d+1 stable classes along a valid degenerate-in
// ordering. Throws ContractViolation if the ordering is not valid.
std::vector<VertexSet> colour_degenerate(const Graph& g, const VertexSet& host,
                                         const VertexSet& x, const std::vector<int>& ordering,
                                         int d);

} // namespace treefree
