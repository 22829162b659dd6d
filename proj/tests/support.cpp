#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

std::vector<std::uint64_t> rows(const treefree::Graph& g)
{
    std::vector<std::uint64_t> r(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : g.edges()) {
        r[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        r[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return r;
}

namespace {

using Rows = std::vector<std::uint64_t>;

std::uint64_t code_under(const Rows& adj, const std::vector<int>& perm)
{
    // Upper-triangle bits of the relabelled adjacency matrix.
    const int n = static_cast<int>(adj.size());
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >> perm[static_cast<std::size_t>(j)] & 1)
                code |= std::uint64_t{1} << bit;
    return code;
}

// Minimum code over relabellings that list vertices by nondecreasing degree.
std::uint64_t canonical(const Rows& adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    auto deg = [&](int v) { return __builtin_popcountll(adj[static_cast<std::size_t>(v)]); };
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return deg(a) < deg(b) || (deg(a) == deg(b) && a < b); });
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && deg(perm[static_cast<std::size_t>(j)]) == deg(perm[static_cast<std::size_t>(i)]))
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    // Odometer over the permutations of each block.
    std::function<void(std::size_t)> walk = [&](std::size_t b) {
        if (b == blocks.size()) {
            best = std::min(best, code_under(adj, perm));
            return;
        }
        auto first = perm.begin() + blocks[b].first;
        auto last = perm.begin() + blocks[b].second;
        std::sort(first, last);
        do
            walk(b + 1);
        while (std::next_permutation(first, last));
    };
    walk(0);
    return best;
}

treefree::Graph from_rows(const Rows& adj)
{
    std::vector<treefree::Edge> edges;
    const int n = static_cast<int>(adj.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[static_cast<std::size_t>(u)] >> v & 1)
                edges.emplace_back(u, v);
    return treefree::Graph::build(n, edges);
}

} // namespace

std::vector<treefree::Graph> all_graphs(int max_n)
{
    std::vector<treefree::Graph> out;
    std::vector<Rows> level{Rows{0}};
    out.push_back(from_rows(level.front()));
    for (int n = 2; n <= max_n; ++n) {
        std::map<std::uint64_t, Rows> seen;
        for (const auto& base : level)
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
                Rows adj = base;
                adj.push_back(nb);
                for (int u = 0; u < n - 1; ++u)
                    if (nb >> u & 1)
                        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << (n - 1);
                seen.emplace(canonical(adj), adj);
            }
        level.clear();
        for (auto& [code, adj] : seen) {
            out.push_back(from_rows(adj));
            level.push_back(std::move(adj));
        }
    }
    return out;
}

std::optional<std::vector<int>> induced_copy_by_maps(const treefree::Graph& g, const treefree::TreePattern& t)
{
    const int n = g.order();
    const int k = t.order();
    if (k > n)
        return std::nullopt;
    std::vector<int> image(static_cast<std::size_t>(k), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(int)> place = [&](int i) {
        if (i == k) {
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    if (t.adjacent(a, b) != g.adjacent(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]))
                        return false;
            return true;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            used[static_cast<std::size_t>(v)] = true;
            image[static_cast<std::size_t>(i)] = v;
            if (place(i + 1))
                return true;
            used[static_cast<std::size_t>(v)] = false;
        }
        return false;
    };
    if (place(0))
        return image;
    return std::nullopt;
}

int alpha_by_subsets(const treefree::Graph& g)
{
    auto adj = rows(g);
    const int n = g.order();
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((s >> v & 1) && (adj[static_cast<std::size_t>(v)] & s))
                ok = false;
        if (ok)
            best = std::max(best, __builtin_popcountll(s));
    }
    return best;
}

int omega_by_subsets(const treefree::Graph& g)
{
    return alpha_by_subsets(g.complement());
}

bool isomorphic_by_maps(const treefree::Graph& a, const treefree::Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace oracle

namespace oracle {

bool is_clique_list(const treefree::Graph& g, const std::vector<int>& vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= g.order())
            return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j]))
                return false;
    }
    return true;
}

int max_degree_by_rows(const treefree::Graph& g, const treefree::VertexSet& within)
{
    int best = 0;
    for (int v : within) {
        int d = 0;
        for (int u : within)
            if (g.adjacent(u, v))
                ++d;
        best = std::max(best, d);
    }
    return best;
}

bool clique_free(const treefree::Graph& g, int size)
{
    const int n = g.order();
    std::vector<int> pick;
    std::function<bool(int)> grow = [&](int from) {
        if (static_cast<int>(pick.size()) == size)
            return true;
        for (int v = from; v < n; ++v) {
            bool ok = true;
            for (int u : pick)
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            pick.push_back(v);
            if (grow(v + 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    return !grow(0);
}

std::string recheck_outcome(const treefree::Graph& g, const treefree::TreePattern& t, int k,
                            const treefree::SearchOutcome& outcome, const treefree::Weighting* weights)
{
    using namespace treefree;
    if (const auto* c = std::get_if<StableSetCert>(&outcome)) {
        auto members = c->set.to_vector();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (g.adjacent(members[i], members[j]))
                    return "set is not stable";
        if (c->weighted && !weights)
            return "weighted certificate without weights";
        Rational got = 0;
        for (int v : members)
            got += (c->weighted && weights) ? (*weights)[static_cast<std::size_t>(v)] : Rational(1);
        if (got < c->claimed_bound)
            return "set falls short of its claimed bound";
        return {};
    }
    if (const auto* w = std::get_if<TreeWitness>(&outcome)) {
        const auto& e = w->embedding;
        if (static_cast<int>(e.size()) != t.order())
            return "embedding has the wrong length";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= g.order())
                return "embedding leaves the graph";
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                if (e[i] == e[j])
                    return "embedding is not injective";
                if (t.adjacent(static_cast<int>(i), static_cast<int>(j)) != g.adjacent(e[i], e[j]))
                    return "embedding is not induced";
            }
        }
        return {};
    }
    const auto& clique = std::get<HypothesisViolation>(outcome).clique;
    if (static_cast<int>(clique.size()) <= k || !is_clique_list(g, clique))
        return "reported clique has at most k vertices or is not a clique";
    return {};
}

} // namespace oracle
