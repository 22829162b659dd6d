#pragma once

// Independent brute-force oracles used only by the tests.

#include "treefree/graph.hpp"
#include "treefree/tree.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

// Every graph on n vertices up to isomorphism, for n = 1..max_n (max_n <= 7).
// Built by vertex extension and deduplicated by a canonical adjacency code.
std::vector<treefree::Graph> all_graphs(int max_n);

// Adjacency rows as bitmasks (n <= 64).
std::vector<std::uint64_t> rows(const treefree::Graph& g);

// Tries every injective map of T into G.
std::optional<std::vector<int>> induced_copy_by_maps(const treefree::Graph& g, const treefree::TreePattern& t);

// Subset enumeration, n <= 24.
int alpha_by_subsets(const treefree::Graph& g);
int omega_by_subsets(const treefree::Graph& g);

bool isomorphic_by_maps(const treefree::Graph& a, const treefree::Graph& b);

} // namespace oracle

#include "treefree/outcome.hpp"

#include <string>

namespace oracle {

// Rechecks an outcome from first principles: stability and claimed size or
// weight, induced copy by direct adjacency comparison, or a (k+1)-clique.
// Returns an empty string when the outcome holds.
std::string recheck_outcome(const treefree::Graph& g, const treefree::TreePattern& t, int k,
                            const treefree::SearchOutcome& outcome,
                            const treefree::Weighting* weights = nullptr);

bool is_clique_list(const treefree::Graph& g, const std::vector<int>& vertices);
int max_degree_by_rows(const treefree::Graph& g, const treefree::VertexSet& within);

// Exhaustive K_{size}-freeness for small sizes.
bool clique_free(const treefree::Graph& g, int size);

} // namespace oracle
