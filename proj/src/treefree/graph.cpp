#include "treefree/graph.hpp"

#include "treefree/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace treefree {

GraphBuilder::GraphBuilder(int n) : n_(n)
{
    if (n < 0)
        throw InputError("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

void GraphBuilder::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(n_ - 1));
    if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
}

Graph GraphBuilder::build() &&
{
    Graph g;
    g.adj_ = std::move(adj_);
    std::size_t degree_sum = 0;
    for (const auto& row : g.adj_)
        degree_sum += row.size();
    g.edge_count_ = degree_sum / 2;
    return g;
}

Graph Graph::build(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::complement() const
{
    GraphBuilder b(order());
    for (int u = 0; u < order(); ++u)
        for (int v = u + 1; v < order(); ++v)
            if (!adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : neighbours(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Weighting uniform_weighting(const Graph& g)
{
    return Weighting(static_cast<std::size_t>(g.order()), Rational(1));
}

Rational weight_of(const Weighting& w, const VertexSet& s)
{
    Rational total = 0;
    for (int v : s)
        total += w[static_cast<std::size_t>(v)];
    return total;
}

int max_degree_in(const Graph& g, const VertexSet& within)
{
    int best = 0;
    for (int v : within)
        best = std::max(best, g.degree_in(v, within));
    return best;
}

int max_degree_vertex(const Graph& g, const VertexSet& within)
{
    int best = -1, best_deg = -1;
    for (int v : within) {
        int d = g.degree_in(v, within);
        if (d > best_deg) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

std::size_t edge_count_in(const Graph& g, const VertexSet& within)
{
    std::size_t sum = 0;
    for (int v : within)
        sum += static_cast<std::size_t>(g.degree_in(v, within));
    return sum / 2;
}

bool is_stable(const Graph& g, const VertexSet& s)
{
    for (int v : s)
        if (g.neighbours(v).intersects(s))
            return false;
    return true;
}

bool is_clique(const Graph& g, std::span<const int> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool degrees_bounded(const Graph& g, const VertexSet& within, const VertexSet& target,
                     const Rational& bound, Comparison cmp)
{
    for (int v : within) {
        Rational deg = g.degree_in(v, target);
        if (cmp == Comparison::strict ? !(deg < bound) : !(deg <= bound))
            return false;
    }
    return true;
}

bool max_degree_bounded(const Graph& g, const VertexSet& within, const Rational& bound,
                        Comparison cmp)
{
    Rational deg = max_degree_in(g, within);
    return cmp == Comparison::strict ? deg < bound : deg <= bound;
}

Graph read_dimacs(std::istream& in)
{
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long declared_edges = 0;
    long seen_edges = 0;
    std::vector<Edge> edges;
    int n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            std::string kind;
            if (have_header || !(iss >> kind >> n >> declared_edges) ||
                (kind != "edge" && kind != "edges" && kind != "col") || n < 0 ||
                declared_edges < 0)
                throw InputError("bad DIMACS header at line " + std::to_string(line_no));
            have_header = true;
        } else if (tag == "e") {
            int u = 0, v = 0;
            if (!have_header)
                throw InputError("DIMACS edge before header at line " + std::to_string(line_no));
            if (!(iss >> u >> v))
                throw InputError("bad DIMACS edge at line " + std::to_string(line_no));
            edges.emplace_back(u - 1, v - 1);
            ++seen_edges;
        } else {
            throw InputError("unknown DIMACS line type '" + tag + "' at line " +
                             std::to_string(line_no));
        }
    }
    if (!have_header)
        throw InputError("DIMACS input has no 'p edge' header");
    if (seen_edges != declared_edges)
        throw InputError("DIMACS header declares " + std::to_string(declared_edges) +
                         " edges but " + std::to_string(seen_edges) + " were listed");
    return Graph::build(n, edges);
}

void write_dimacs(std::ostream& out, const Graph& g)
{
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

} // namespace treefree
