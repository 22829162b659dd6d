#include "treefree/extract.hpp"

#include "treefree/errors.hpp"

#include <algorithm>
#include <string>

namespace treefree {

VertexSet greedy_maxdeg_stable(const Graph& g, const VertexSet& within)
{
    std::vector<VertexSet> classes;
    for (int v : within) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const VertexSet& c) { return !g.neighbours(v).intersects(c); });
        if (it == classes.end()) {
            classes.emplace_back(within.universe());
            it = std::prev(classes.end());
        }
        it->insert(v);
    }
    if (classes.empty())
        return VertexSet(within.universe());
    return *std::max_element(classes.begin(), classes.end(),
                             [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
}

VertexSet turan_stable(const Graph& g, const VertexSet& within)
{
    VertexSet remaining = within;
    VertexSet chosen(within.universe());
    while (!remaining.empty()) {
        int best = -1, best_deg = 0;
        for (int v : remaining) {
            int d = g.degree_in(v, remaining);
            if (best < 0 || d < best_deg) {
                best = v;
                best_deg = d;
            }
        }
        chosen.insert(best);
        remaining -= g.neighbours(best);
        remaining.erase(best);
    }
    return chosen;
}

namespace {

RamseyResult ramsey_search(const Graph& g, const VertexSet& w, int k, int m)
{
    RamseyResult out{VertexSet(w.universe()), false, false};
    if (m <= 0) {
        out.complete = true;
        return out;
    }
    if (w.empty())
        return out;
    if (k <= 1) {
        // G[w] should be edgeless here; take a greedy stable subset either way.
        out.clique_bound_broken = !is_stable(g, w);
        for (int v : w) {
            if (static_cast<int>(out.set.size()) == m)
                break;
            if (!g.neighbours(v).intersects(out.set))
                out.set.insert(v);
        }
        out.complete = static_cast<int>(out.set.size()) == m;
        return out;
    }

    int v = max_degree_vertex(g, w);
    VertexSet outside = w - g.neighbours(v);
    outside.erase(v);
    RamseyResult with_v = ramsey_search(g, outside, k, m - 1);
    with_v.set.insert(v);
    if (with_v.complete)
        return with_v;

    VertexSet inside = w & g.neighbours(v);
    if (inside.empty())
        return with_v;
    RamseyResult in_nbhd = ramsey_search(g, inside, k - 1, m);
    bool broken = with_v.clique_bound_broken || in_nbhd.clique_bound_broken;
    RamseyResult& pick =
        in_nbhd.complete || in_nbhd.set.size() > with_v.set.size() ? in_nbhd : with_v;
    pick.clique_bound_broken = broken;
    return pick;
}

} // namespace

RamseyResult ramsey_stable(const Graph& g, const VertexSet& within, int k, int m)
{
    if (m < 0)
        throw ContractViolation("ramsey_stable: negative target size");
    if (m == 0)
        return {VertexSet(within.universe()), true, false};
    if (k <= 1 && !is_stable(g, within))
        throw ContractViolation("ramsey_stable: clique bound " + std::to_string(k) +
                                " but the vertex set spans an edge");
    return ramsey_search(g, within, k, m);
}

std::optional<std::vector<int>> is_degenerate_in(const Graph& g, const VertexSet& host,
                                                 const VertexSet& x, int d)
{
    // count[v] = neighbours of v among not-yet-removed X plus host \ X;
    // removals only lower the counts, so peeling any eligible vertex is safe.
    VertexSet remaining = x;
    std::vector<int> count(static_cast<std::size_t>(g.order()), 0);
    for (int v : x)
        count[static_cast<std::size_t>(v)] = g.degree_in(v, host);
    std::vector<int> order;
    order.reserve(x.size());
    while (!remaining.empty()) {
        int best = -1;
        for (int v : remaining)
            if (best < 0 || count[static_cast<std::size_t>(v)] < count[static_cast<std::size_t>(best)])
                best = v;
        if (count[static_cast<std::size_t>(best)] > d)
            return std::nullopt;
        order.push_back(best);
        remaining.erase(best);
        for (int u : g.neighbours(best) & remaining)
            --count[static_cast<std::size_t>(u)];
    }
    return order;
}

bool is_degenerate_ordering(const Graph& g, const VertexSet& host, const VertexSet& x,
                            const std::vector<int>& ordering, int d)
{
    if (ordering.size() != x.size())
        return false;
    VertexSet later = host;
    VertexSet seen(x.universe());
    for (int v : ordering) {
        if (v < 0 || v >= g.order() || !x.contains(v) || seen.contains(v))
            return false;
        seen.insert(v);
    }
    if (!x.is_subset_of(host))
        return false;
    for (int v : ordering) {
        later.erase(v);
        if (g.degree_in(v, later) > d)
            return false;
    }
    return true;
}

std::vector<VertexSet> colour_degenerate(const Graph& g, const VertexSet& host,
                                         const VertexSet& x, const std::vector<int>& ordering,
                                         int d)
{
    if (!is_degenerate_ordering(g, host, x, ordering, d))
        throw ContractViolation("colour_degenerate: ordering is not " + std::to_string(d) +
                                "-degenerate in the host");
    std::vector<VertexSet> classes;
    for (auto it = ordering.rbegin(); it != ordering.rend(); ++it) {
        int v = *it;
        auto cls = std::find_if(classes.begin(), classes.end(),
                                [&](const VertexSet& c) { return !g.neighbours(v).intersects(c); });
        if (cls == classes.end()) {
            classes.emplace_back(x.universe());
            cls = std::prev(classes.end());
        }
        cls->insert(v);
    }
    if (static_cast<int>(classes.size()) > d + 1)
        throw InvariantViolation("colour_degenerate used more than d+1 classes");
    return classes;
}

} // namespace treefree
