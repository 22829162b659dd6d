#pragma once

#include "treefree/rational.hpp"
#include "treefree/vertex_set.hpp"

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace treefree {

using Edge = std::pair<int, int>;

class Graph;

// Accumulates edges before freezing them into an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    // Throws InputError on a self-loop or an out-of-range endpoint.
    // Repeated edges collapse.
    void add_edge(int u, int v);
    Graph build() &&;

private:
    int n_;
    std::vector<VertexSet> adj_;
};

// Undirected simple graph with bitset adjacency, immutable once built.
// Induced subgraphs are never materialised; algorithms take the host graph
// plus a VertexSet mask so vertex names stay stable across a pipeline.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    const VertexSet& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
    int degree_in(int v, const VertexSet& within) const
    {
        return static_cast<int>(neighbours(v).intersection_count(within));
    }

    VertexSet vertices() const { return VertexSet::full(adj_.size()); }
    VertexSet empty_set() const { return VertexSet(adj_.size()); }

    Graph complement() const;
    std::vector<Edge> edges() const;

private:
    friend class GraphBuilder;
    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

// Per-vertex nonnegative exact weights.
using Weighting = std::vector<Rational>;

Weighting uniform_weighting(const Graph& g);
Rational weight_of(const Weighting& w, const VertexSet& s);

// Maximum degree of the induced subgraph G[within]; 0 for an empty mask.
int max_degree_in(const Graph& g, const VertexSet& within);
// Lowest-index vertex of maximum degree in G[within]; -1 for an empty mask.
int max_degree_vertex(const Graph& g, const VertexSet& within);
std::size_t edge_count_in(const Graph& g, const VertexSet& within);

bool is_stable(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, std::span<const int> vertices);

// Degree conditions appear with both "fewer than" and "at most" readings;
// callers pick the comparison explicitly.
enum class Comparison { strict, inclusive };

// Every vertex of `within` has (< or <=) `bound` neighbours in `target`.
bool degrees_bounded(const Graph& g, const VertexSet& within, const VertexSet& target,
                     const Rational& bound, Comparison cmp);
// Max degree of G[within] is (< or <=) `bound`.
bool max_degree_bounded(const Graph& g, const VertexSet& within, const Rational& bound,
                        Comparison cmp);

// DIMACS edge format: "p edge n m", "e u v" (1-based), "c ..." comments.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

} // namespace treefree
