#pragma once

#include "treefree/graph.hpp"
#include "treefree/outcome.hpp"
#include "treefree/tree.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace treefree {

// Size limits above which the oracles refuse (OracleRefusal) instead of
// degrading to an approximation.
struct OracleLimits {
    int alpha_max_n = 60;
    int exhaustive_alpha_max_n = 20;
    int tree_max_t = 10;
    int tree_max_n = 60;
    int frac_max_n = 16;
    std::size_t max_stable_sets = 1000000;
};

struct AlphaResult {
    int value = 0;
    VertexSet set;
};

// Branch and bound: branch on a max-degree vertex (exclude it, or take it
// and delete its closed neighbourhood), prune with a greedy clique cover.
AlphaResult exact_alpha(const Graph& g, const OracleLimits& limits = {});
// Plain subset enumeration, for cross-checking exact_alpha.
AlphaResult exhaustive_alpha(const Graph& g, const OracleLimits& limits = {});
// Clique number via exact_alpha of the complement.
AlphaResult exact_omega(const Graph& g, const OracleLimits& limits = {});

// Backtracking along a dfs-enumeration of T from its center. When
// `root_image` is set, the center is mapped there.
std::optional<TreeWitness> find_induced_tree(const Graph& g, const TreePattern& t,
                                             const OracleLimits& limits = {},
                                             std::optional<int> root_image = std::nullopt);

// A clique of exactly `size` vertices inside G[within], if one exists.
std::optional<std::vector<int>> find_clique(const Graph& g, const VertexSet& within, int size);

// All maximal stable sets as bitmasks (n <= 64), by Bron-Kerbosch with
// pivoting on the complement. Refuses past limits.max_stable_sets.
std::vector<std::uint64_t> maximal_stable_sets(const Graph& g, const OracleLimits& limits = {});

struct FracChromatic {
    Rational value;      // covering optimum
    Rational dual_value; // max total weight with every stable set of weight <= 1
    std::vector<std::uint64_t> sets;
    std::vector<Rational> set_weights;    // primal optimum, one entry per set
    std::vector<Rational> vertex_weights; // dual optimum
};

// Exact fractional chromatic number by solving the covering LP over
// maximal stable sets and its dual, both in rational arithmetic.
FracChromatic exact_frac_chromatic(const Graph& g, const OracleLimits& limits = {});

} // namespace treefree
