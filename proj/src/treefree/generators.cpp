#include "treefree/generators.hpp"

#include "treefree/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

namespace treefree {

Rng::Rng(std::uint64_t seed)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    state_ = z ? z : 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Rng::next()
{
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw ContractViolation("Rng::below needs a positive bound");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        std::uint64_t x = next();
        if (x < limit)
            return x % bound;
    }
}

bool Rng::chance(std::uint64_t num, std::uint64_t den)
{
    return below(den) < num;
}

namespace {

void need(bool ok, const std::string& what)
{
    if (!ok)
        throw InputError(what);
}

} // namespace

Graph cycle_graph(int n)
{
    need(n >= 3, "cycle needs n >= 3");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph path_graph(int n)
{
    need(n >= 1, "path needs n >= 1");
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i)
        b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph matching_graph(int n)
{
    need(n >= 0 && n % 2 == 0, "matching needs an even vertex count");
    GraphBuilder b(n);
    for (int i = 0; i < n; i += 2)
        b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph kneser_graph(int n, int k)
{
    need(k >= 1 && n >= k && n <= 20, "kneser needs 1 <= k <= n <= 20");
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) == k)
            subsets.push_back(m);
    // Lexicographic order on the sorted element lists.
    auto key = [n](std::uint32_t m) {
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1u)
                elems.push_back(i);
        return elems;
    };
    std::sort(subsets.begin(), subsets.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
    need(subsets.size() <= 4096, "kneser graph too large");
    const int count = static_cast<int>(subsets.size());
    GraphBuilder b(count);
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if ((subsets[static_cast<std::size_t>(i)] & subsets[static_cast<std::size_t>(j)]) == 0)
                b.add_edge(i, j);
    return std::move(b).build();
}

Graph mycielski_graph(int depth)
{
    need(depth >= 1 && depth <= 7, "mycielski depth must lie in 1..7");
    std::vector<Edge> edges{{0, 1}};
    int n = 2;
    for (int level = 1; level < depth; ++level) {
        // Vertex i keeps its name, its shadow is n + i, the apex is 2n.
        std::vector<Edge> next = edges;
        for (auto [u, v] : edges) {
            next.emplace_back(u, n + v);
            next.emplace_back(v, n + u);
        }
        for (int i = 0; i < n; ++i)
            next.emplace_back(n + i, 2 * n);
        edges = std::move(next);
        n = 2 * n + 1;
    }
    return Graph::build(n, edges);
}

Graph complete_bipartite(int a, int b)
{
    return complete_multipartite({a, b});
}

Graph complete_multipartite(const std::vector<int>& parts)
{
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        need(parts[p] >= 0, "part sizes must be nonnegative");
        n += parts[p];
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    }
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph random_gnp(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed)
{
    need(n >= 0 && den > 0 && num <= den, "random_gnp needs n >= 0 and 0 <= num <= den");
    Rng rng(seed);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den))
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph random_bipartite(int a, int b, std::uint64_t num, std::uint64_t den, std::uint64_t seed)
{
    need(a >= 0 && b >= 0 && den > 0 && num <= den, "random_bipartite needs sizes >= 0 and 0 <= num <= den");
    Rng rng(seed);
    GraphBuilder gb(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            if (rng.chance(num, den))
                gb.add_edge(u, a + v);
    return std::move(gb).build();
}

namespace {

// Shortest cycle through edge (u,v): BFS from u avoiding that edge.
int cycle_through(const std::vector<std::vector<int>>& adj, int u, int v)
{
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue{u};
    dist[static_cast<std::size_t>(u)] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adj[static_cast<std::size_t>(x)]) {
            if ((x == u && y == v) || dist[static_cast<std::size_t>(y)] >= 0)
                continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            if (y == v)
                return dist[static_cast<std::size_t>(y)] + 1;
            queue.push_back(y);
        }
    }
    return 0;
}

} // namespace

Graph random_girth(int n, int target_degree, int girth, std::uint64_t seed)
{
    need(n >= 2 && target_degree >= 0 && target_degree < n && girth >= 3,
         "random_girth needs n >= 2, 0 <= degree < n and girth >= 3");
    Graph base = random_gnp(n, static_cast<std::uint64_t>(target_degree), static_cast<std::uint64_t>(n - 1), seed);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : base.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    auto drop = [&](int u, int v) {
        auto& a = adj[static_cast<std::size_t>(u)];
        a.erase(std::find(a.begin(), a.end(), v));
        auto& b = adj[static_cast<std::size_t>(v)];
        b.erase(std::find(b.begin(), b.end(), u));
    };
    // Edges are scanned in index order; any edge on a short cycle goes.
    for (auto [u, v] : base.edges()) {
        int len = cycle_through(adj, u, v);
        if (len > 0 && len < girth)
            drop(u, v);
    }
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v : adj[static_cast<std::size_t>(u)])
            if (u < v)
                b.add_edge(u, v);
    return std::move(b).build();
}

int girth_of(const Graph& g)
{
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
    auto edges = g.edges();
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    int best = 0;
    for (auto [u, v] : edges) {
        int len = cycle_through(adj, u, v);
        if (len > 0 && (best == 0 || len < best))
            best = len;
    }
    return best;
}

std::string InstanceSpec::text() const
{
    std::string out = name;
    for (std::size_t i = 0; i < params.size(); ++i)
        out += (i ? "," : ":") + std::to_string(params[i]);
    if (seed != 0)
        out += "@" + std::to_string(seed);
    return out;
}

InstanceSpec parse_instance(const std::string& text)
{
    InstanceSpec spec;
    std::string body = text;
    if (auto at = body.find('@'); at != std::string::npos) {
        std::string seed = body.substr(at + 1);
        auto [ptr, ec] = std::from_chars(seed.data(), seed.data() + seed.size(), spec.seed);
        need(ec == std::errc{} && ptr == seed.data() + seed.size(), "bad seed in '" + text + "'");
        body.resize(at);
    }
    auto colon = body.find(':');
    spec.name = body.substr(0, colon);
    need(!spec.name.empty(), "missing generator name in '" + text + "'");
    if (colon != std::string::npos) {
        std::string rest = body.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            long value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            need(!item.empty() && ec == std::errc{} && ptr == item.data() + item.size(),
                 "bad parameter '" + item + "' in '" + text + "'");
            spec.params.push_back(value);
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
    }
    return spec;
}

Graph generate(const InstanceSpec& spec)
{
    const auto& p = spec.params;
    auto arity = [&](std::size_t count) {
        need(p.size() == count, spec.name + " takes " + std::to_string(count) + " parameters");
    };
    auto i = [&](std::size_t idx) {
        need(p[idx] >= 0 && p[idx] <= 100000, "parameter out of range in " + spec.text());
        return static_cast<int>(p[idx]);
    };
    auto u = [&](std::size_t idx) { return static_cast<std::uint64_t>(i(idx)); };
    const std::string& n = spec.name;
    if (n == "cycle") {
        arity(1);
        return cycle_graph(i(0));
    }
    if (n == "path") {
        arity(1);
        return path_graph(i(0));
    }
    if (n == "matching") {
        arity(1);
        return matching_graph(i(0));
    }
    if (n == "empty") {
        arity(1);
        return GraphBuilder(i(0)).build();
    }
    if (n == "complete") {
        arity(1);
        return complete_multipartite(std::vector<int>(static_cast<std::size_t>(i(0)), 1));
    }
    if (n == "kneser") {
        arity(2);
        return kneser_graph(i(0), i(1));
    }
    if (n == "mycielski") {
        arity(1);
        return mycielski_graph(i(0));
    }
    if (n == "complete_bipartite") {
        arity(2);
        return complete_bipartite(i(0), i(1));
    }
    if (n == "complete_multipartite") {
        need(!p.empty(), "complete_multipartite needs part sizes");
        std::vector<int> parts;
        for (std::size_t k = 0; k < p.size(); ++k)
            parts.push_back(i(k));
        return complete_multipartite(parts);
    }
    if (n == "random_gnp") {
        arity(3);
        return random_gnp(i(0), u(1), u(2), spec.seed);
    }
    if (n == "random_bipartite") {
        arity(4);
        return random_bipartite(i(0), i(1), u(2), u(3), spec.seed);
    }
    if (n == "random_girth") {
        arity(3);
        return random_girth(i(0), i(1), i(2), spec.seed);
    }
    throw InputError("unknown generator '" + n + "'");
}

} // namespace treefree
