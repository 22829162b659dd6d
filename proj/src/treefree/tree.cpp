#include "treefree/tree.hpp"

#include "treefree/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <queue>

namespace treefree {

namespace {

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int source)
{
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

std::string arm_text(const ArmSpec& a)
{
    return "(" + std::to_string(a.length) + "," + std::to_string(a.bristles) + ")";
}

} // namespace

int multibroom_order(const MultibroomSpec& spec)
{
    int t = 1;
    for (const auto& a : spec)
        t += a.length + a.bristles;
    return t;
}

TreePattern TreePattern::from_edges(int t, const std::vector<Edge>& edges)
{
    if (t < 1)
        throw InputError("a tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != t - 1)
        throw InputError("a tree on " + std::to_string(t) + " vertices has " +
                         std::to_string(t - 1) + " edges");
    TreePattern out;
    out.adj_.assign(static_cast<std::size_t>(t), {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= t || v >= t || u == v)
            throw InputError("bad tree edge");
        out.adj_[static_cast<std::size_t>(u)].push_back(v);
        out.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : out.adj_)
        std::sort(row.begin(), row.end());
    out.dist_.reserve(static_cast<std::size_t>(t));
    for (int v = 0; v < t; ++v) {
        out.dist_.push_back(bfs_distances(out.adj_, v));
        if (std::find(out.dist_.back().begin(), out.dist_.back().end(), -1) != out.dist_.back().end())
            throw InputError("tree edges do not connect all vertices");
    }
    out.radius_ = std::numeric_limits<int>::max();
    for (int v = 0; v < t; ++v) {
        int e = out.eccentricity(v);
        if (e < out.radius_) {
            out.radius_ = e;
            out.center_ = v;
        }
    }
    out.label_ = "tree:" + std::to_string(t);
    return out;
}

bool TreePattern::adjacent(int u, int v) const
{
    const auto& row = neighbours(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> TreePattern::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (int v : neighbours(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int TreePattern::eccentricity(int v) const
{
    const auto& row = dist_[static_cast<std::size_t>(v)];
    return *std::max_element(row.begin(), row.end());
}

Graph TreePattern::as_graph() const
{
    auto e = edges();
    return Graph::build(order(), e);
}

TreePattern make_multibroom(const MultibroomSpec& spec)
{
    std::vector<Edge> edges;
    int next = 1;
    for (const auto& arm : spec) {
        if (arm.length < 1)
            throw InputError("broom length must be at least 1");
        if (arm.bristles < 0)
            throw InputError("bristle count must be nonnegative");
        int prev = 0;
        for (int s = 0; s < arm.length; ++s) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        for (int b = 0; b < arm.bristles; ++b)
            edges.emplace_back(prev, next++);
    }
    TreePattern t = TreePattern::from_edges(next, edges);
    t.multibroom_ = spec;
    std::string label = "multibroom:";
    for (std::size_t i = 0; i < spec.size(); ++i)
        label += (i ? "," : "") + arm_text(spec[i]);
    t.label_ = label;
    return t;
}

TreePattern make_broom(int length, int bristles)
{
    if (length < 1)
        throw InputError("broom length must be at least 1");
    return make_multibroom({{length, bristles}})
        .with_label("broom:" + std::to_string(length) + "," + std::to_string(bristles));
}

TreePattern make_path(int vertices)
{
    if (vertices < 1)
        throw InputError("a path needs at least one vertex");
    MultibroomSpec spec;
    if (vertices == 2)
        spec = {{1, 0}};
    else if (vertices >= 3)
        spec = {{vertices - 2, 1}};
    return make_multibroom(spec).with_label("path:" + std::to_string(vertices));
}

TreePattern make_star(int leaves)
{
    if (leaves < 0)
        throw InputError("a star needs a nonnegative leaf count");
    MultibroomSpec spec;
    if (leaves >= 1)
        spec = {{1, leaves - 1}};
    return make_multibroom(spec).with_label("star:" + std::to_string(leaves));
}

namespace {

class PatternParser {
public:
    explicit PatternParser(std::string_view text) : text_(text) {}

    int integer()
    {
        skip_space();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc())
            fail("expected an integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    void expect(char c)
    {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void finish()
    {
        skip_space();
        if (pos_ != text_.size())
            fail("trailing characters");
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("bad tree pattern '" + std::string(text_) + "': " + what);
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

TreePattern parse_tree(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw InputError("bad tree pattern '" + std::string(text) +
                         "': expected broom:, multibroom:, path: or star:");
    std::string_view kind = text.substr(0, colon);
    PatternParser p(text.substr(colon + 1));
    if (kind == "path") {
        int n = p.integer();
        p.finish();
        if (n < 1)
            p.fail("path needs at least one vertex");
        return make_path(n);
    }
    if (kind == "star") {
        int n = p.integer();
        p.finish();
        if (n < 0)
            p.fail("negative leaf count");
        return make_star(n);
    }
    if (kind == "broom") {
        int l = p.integer();
        p.expect(',');
        int m = p.integer();
        p.finish();
        if (l < 1 || m < 0)
            p.fail("broom needs length >= 1 and bristles >= 0");
        return make_broom(l, m);
    }
    if (kind == "multibroom") {
        MultibroomSpec spec;
        do {
            p.expect('(');
            ArmSpec a;
            a.length = p.integer();
            p.expect(',');
            a.bristles = p.integer();
            p.expect(')');
            if (a.length < 1 || a.bristles < 0)
                p.fail("arm needs length >= 1 and bristles >= 0");
            spec.push_back(a);
        } while (p.accept(','));
        p.finish();
        return make_multibroom(spec);
    }
    throw InputError("unknown tree pattern kind '" + std::string(kind) + "'");
}

std::vector<int> DfsEnumeration::active_path(int i) const
{
    std::vector<int> path;
    for (int v = order[static_cast<std::size_t>(i)]; v >= 0; v = parent[static_cast<std::size_t>(v)])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

DfsEnumeration dfs_enumeration(const TreePattern& t, int root)
{
    const auto n = static_cast<std::size_t>(t.order());
    DfsEnumeration out;
    out.parent.assign(n, -1);
    out.depth.assign(n, 0);
    out.position.assign(n, -1);

    // BFS order gives parents and depths; reverse BFS order gives heights.
    std::vector<int> bfs{root};
    std::vector<bool> seen(n, false);
    seen[static_cast<std::size_t>(root)] = true;
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (int v : t.neighbours(bfs[i]))
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                out.parent[static_cast<std::size_t>(v)] = bfs[i];
                out.depth[static_cast<std::size_t>(v)] = out.depth[static_cast<std::size_t>(bfs[i])] + 1;
                bfs.push_back(v);
            }
    std::vector<int> height(n, 0);
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
        int p = out.parent[static_cast<std::size_t>(*it)];
        if (p >= 0)
            height[static_cast<std::size_t>(p)] =
                std::max(height[static_cast<std::size_t>(p)], height[static_cast<std::size_t>(*it)] + 1);
    }

    std::vector<int> stack{root};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.position[static_cast<std::size_t>(u)] = static_cast<int>(out.order.size());
        out.order.push_back(u);
        std::vector<int> children;
        for (int v : t.neighbours(u))
            if (v != out.parent[static_cast<std::size_t>(u)])
                children.push_back(v);
        std::sort(children.begin(), children.end(), [&](int a, int b) {
            if (height[static_cast<std::size_t>(a)] != height[static_cast<std::size_t>(b)])
                return height[static_cast<std::size_t>(a)] > height[static_cast<std::size_t>(b)];
            return a < b;
        });
        for (auto it = children.rbegin(); it != children.rend(); ++it)
            stack.push_back(*it);
    }
    return out;
}

bool is_dfs_enumeration(const TreePattern& t, const std::vector<int>& order)
{
    const auto n = static_cast<std::size_t>(t.order());
    if (order.size() != n)
        return false;
    std::vector<bool> seen(n, false);
    for (int v : order) {
        if (v < 0 || v >= t.order() || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    int root = order.front();
    for (std::size_t i = 1; i < n; ++i) {
        // the path from sigma_1 to sigma_i is {u : d(root,u) + d(u,sigma_i) = d(root,sigma_i)}
        int prev = order[i - 1];
        int next = order[i];
        bool ok = false;
        for (int u : t.neighbours(next))
            if (t.distance(root, u) + t.distance(u, prev) == t.distance(root, prev))
                ok = true;
        if (!ok)
            return false;
    }
    return true;
}

} // namespace treefree
