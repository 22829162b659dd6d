#include "treefree/oracle.hpp"

#include "treefree/errors.hpp"
#include "treefree/exact_lp.hpp"

#include <bit>
#include <string>

namespace treefree {

namespace {

using Mask = std::uint64_t;

Mask bit(int v)
{
    return Mask{1} << v;
}

int lowest(Mask m)
{
    return std::countr_zero(m);
}

std::vector<Mask> adjacency_masks(const Graph& g)
{
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbours(v))
            adj[static_cast<std::size_t>(v)] |= bit(u);
    return adj;
}

VertexSet to_vertex_set(int n, Mask m)
{
    VertexSet s(static_cast<std::size_t>(n));
    for (; m; m &= m - 1)
        s.insert(lowest(m));
    return s;
}

void refuse_if(bool cond, const std::string& what)
{
    if (cond)
        throw OracleRefusal(what);
}

class AlphaSearch {
public:
    explicit AlphaSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

    void run(Mask p, Mask cur, int cur_size)
    {
        if (!p) {
            record(cur, cur_size);
            return;
        }
        if (cur_size + clique_cover(p) <= best_)
            return;
        int v = -1, deg = -1;
        for (Mask m = p; m; m &= m - 1) {
            int u = lowest(m);
            int d = std::popcount(adj_[static_cast<std::size_t>(u)] & p);
            if (d > deg) {
                v = u;
                deg = d;
            }
        }
        if (deg == 0) {
            record(cur | p, cur_size + std::popcount(p));
            return;
        }
        run(p & ~adj_[static_cast<std::size_t>(v)] & ~bit(v), cur | bit(v), cur_size + 1);
        run(p & ~bit(v), cur, cur_size);
    }

    int best() const { return best_; }
    Mask best_set() const { return best_set_; }

private:
    void record(Mask set, int size)
    {
        if (size > best_) {
            best_ = size;
            best_set_ = set;
        }
    }

    // Greedy partition of p into cliques; each clique holds at most one
    // vertex of a stable set.
    int clique_cover(Mask p) const
    {
        int count = 0;
        while (p) {
            int v = lowest(p);
            Mask clique = bit(v);
            Mask cand = p & adj_[static_cast<std::size_t>(v)];
            while (cand) {
                int u = lowest(cand);
                clique |= bit(u);
                cand &= adj_[static_cast<std::size_t>(u)];
            }
            p &= ~clique;
            ++count;
        }
        return count;
    }

    std::vector<Mask> adj_;
    int best_ = -1;
    Mask best_set_ = 0;
};

} // namespace

AlphaResult exact_alpha(const Graph& g, const OracleLimits& limits)
{
    refuse_if(g.order() > limits.alpha_max_n || g.order() > 64,
              "exact_alpha: " + std::to_string(g.order()) + " vertices exceeds the oracle limit");
    int n = g.order();
    AlphaSearch search(adjacency_masks(g));
    Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    search.run(all, 0, 0);
    return {search.best(), to_vertex_set(n, search.best_set())};
}

AlphaResult exhaustive_alpha(const Graph& g, const OracleLimits& limits)
{
    refuse_if(g.order() > limits.exhaustive_alpha_max_n || g.order() > 30,
              "exhaustive_alpha: " + std::to_string(g.order()) + " vertices exceeds the oracle limit");
    int n = g.order();
    auto adj = adjacency_masks(g);
    int best = 0;
    Mask best_set = 0;
    for (Mask m = 0; m < bit(n); ++m) {
        int size = std::popcount(m);
        if (size <= best)
            continue;
        bool stable = true;
        for (Mask r = m; r && stable; r &= r - 1)
            stable = !(adj[static_cast<std::size_t>(lowest(r))] & m);
        if (stable) {
            best = size;
            best_set = m;
        }
    }
    return {best, to_vertex_set(n, best_set)};
}

AlphaResult exact_omega(const Graph& g, const OracleLimits& limits)
{
    return exact_alpha(g.complement(), limits);
}

std::optional<TreeWitness> find_induced_tree(const Graph& g, const TreePattern& t,
                                             const OracleLimits& limits,
                                             std::optional<int> root_image)
{
    refuse_if(t.order() > limits.tree_max_t,
              "find_induced_tree: pattern with " + std::to_string(t.order()) +
                  " vertices exceeds the oracle limit");
    refuse_if(g.order() > limits.tree_max_n,
              "find_induced_tree: " + std::to_string(g.order()) + " vertices exceeds the oracle limit");
    if (root_image && (*root_image < 0 || *root_image >= g.order()))
        throw ContractViolation("find_induced_tree: root image outside the graph");

    const DfsEnumeration dfs = dfs_enumeration(t, t.center());
    const int size = t.order();
    std::vector<int> image(static_cast<std::size_t>(size), -1);
    VertexSet used = g.empty_set();

    auto extend = [&](auto& self, int i) -> bool {
        if (i == size)
            return true;
        int tv = dfs.order[static_cast<std::size_t>(i)];
        VertexSet cand = g.vertices();
        if (i == 0) {
            if (root_image)
                cand = VertexSet::of(static_cast<std::size_t>(g.order()), {*root_image});
        } else {
            int pv = dfs.parent[static_cast<std::size_t>(tv)];
            cand = g.neighbours(image[static_cast<std::size_t>(pv)]);
            for (int j = 0; j < i; ++j) {
                int u = dfs.order[static_cast<std::size_t>(j)];
                if (u != pv)
                    cand -= g.neighbours(image[static_cast<std::size_t>(u)]);
            }
        }
        cand -= used;
        for (int c : cand) {
            image[static_cast<std::size_t>(tv)] = c;
            used.insert(c);
            if (self(self, i + 1))
                return true;
            used.erase(c);
        }
        image[static_cast<std::size_t>(tv)] = -1;
        return false;
    };
    if (extend(extend, 0))
        return TreeWitness{image};
    return std::nullopt;
}

std::optional<std::vector<int>> find_clique(const Graph& g, const VertexSet& within, int size)
{
    std::vector<int> clique;
    if (size <= 0)
        return clique;
    auto grow = [&](auto& self, VertexSet cand) -> bool {
        if (static_cast<int>(clique.size()) == size)
            return true;
        while (!cand.empty()) {
            if (clique.size() + cand.size() < static_cast<std::size_t>(size))
                return false;
            int v = cand.first();
            cand.erase(v);
            clique.push_back(v);
            if (self(self, cand & g.neighbours(v)))
                return true;
            clique.pop_back();
        }
        return false;
    };
    if (grow(grow, within))
        return clique;
    return std::nullopt;
}

std::vector<std::uint64_t> maximal_stable_sets(const Graph& g, const OracleLimits& limits)
{
    refuse_if(g.order() > 64, "maximal_stable_sets: more than 64 vertices");
    const int n = g.order();
    const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    auto adj = adjacency_masks(g);
    std::vector<Mask> non(adj.size());
    for (int v = 0; v < n; ++v)
        non[static_cast<std::size_t>(v)] = all & ~adj[static_cast<std::size_t>(v)] & ~bit(v);

    std::vector<Mask> out;
    auto bk = [&](auto& self, Mask r, Mask p, Mask x) -> void {
        if (!p && !x) {
            out.push_back(r);
            refuse_if(out.size() > limits.max_stable_sets,
                      "maximal_stable_sets: more than " + std::to_string(limits.max_stable_sets) +
                          " maximal stable sets");
            return;
        }
        int pivot = -1, best = -1;
        for (Mask m = p | x; m; m &= m - 1) {
            int u = lowest(m);
            int c = std::popcount(p & non[static_cast<std::size_t>(u)]);
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        for (Mask m = p & ~non[static_cast<std::size_t>(pivot)]; m; m &= m - 1) {
            int v = lowest(m);
            self(self, r | bit(v), p & non[static_cast<std::size_t>(v)], x & non[static_cast<std::size_t>(v)]);
            p &= ~bit(v);
            x |= bit(v);
        }
    };
    bk(bk, 0, all, 0);
    return out;
}

FracChromatic exact_frac_chromatic(const Graph& g, const OracleLimits& limits)
{
    refuse_if(g.order() > limits.frac_max_n,
              "exact_frac_chromatic: " + std::to_string(g.order()) + " vertices exceeds the oracle limit");
    FracChromatic out;
    const int n = g.order();
    if (n == 0)
        return out;
    out.sets = maximal_stable_sets(g, limits);
    const std::size_t s = out.sets.size();

    LinearProgram primal;
    primal.sense = LinearProgram::Sense::minimize;
    primal.objective.assign(s, Rational(1));
    for (int v = 0; v < n; ++v) {
        LinearProgram::Row row;
        row.relation = LinearProgram::Relation::greater_equal;
        row.rhs = 1;
        for (std::size_t a = 0; a < s; ++a)
            row.coeffs.emplace_back((out.sets[a] >> v) & 1 ? 1 : 0);
        primal.rows.push_back(std::move(row));
    }

    LinearProgram dual;
    dual.sense = LinearProgram::Sense::maximize;
    dual.objective.assign(static_cast<std::size_t>(n), Rational(1));
    for (std::size_t a = 0; a < s; ++a) {
        LinearProgram::Row row;
        row.relation = LinearProgram::Relation::less_equal;
        row.rhs = 1;
        for (int v = 0; v < n; ++v)
            row.coeffs.emplace_back((out.sets[a] >> v) & 1 ? 1 : 0);
        dual.rows.push_back(std::move(row));
    }

    LpSolution p = solve_lp(primal);
    LpSolution d = solve_lp(dual);
    if (p.status != LpSolution::Status::optimal || d.status != LpSolution::Status::optimal)
        throw InvariantViolation("exact_frac_chromatic: covering LP or its dual not solved to optimality");
    if (p.value != d.value)
        throw InvariantViolation("exact_frac_chromatic: primal " + p.value.get_str() +
                                 " differs from dual " + d.value.get_str());
    out.value = p.value;
    out.dual_value = d.value;
    out.set_weights = std::move(p.x);
    out.vertex_weights = std::move(d.x);
    return out;
}

} // namespace treefree
