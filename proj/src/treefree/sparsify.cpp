#include "treefree/sparsify.hpp"

#include "treefree/errors.hpp"
#include "treefree/extract.hpp"
#include "treefree/oracle.hpp"

#include <algorithm>
#include <string>

namespace treefree {

namespace {

std::string str(const Rational& r)
{
    return r.get_str();
}

Rational kt_of(int k, int t)
{
    return Rational(pow_int(k, static_cast<unsigned>(t)));
}

Rational max_of(const Rational& a, const Rational& b)
{
    return a < b ? b : a;
}

[[noreturn]] void rethrow_with_apex(const HypothesisFailure& e, int apex)
{
    auto clique = e.clique;
    clique.push_back(apex);
    throw HypothesisFailure(e.what(), std::move(clique));
}

} // namespace

void SparsifyParams::check() const
{
    if (k < 2 || r < 2 || t < 2)
        throw ParameterRefusal("sparsify parameters need k, r, t >= 2");
    if (q != (r - 1) * (k - 1))
        throw ParameterRefusal("q must equal (r-1)(k-1)");
    if (static_cast<int>(y.size()) != q + 1)
        throw ParameterRefusal("expected " + std::to_string(q + 1) + " y values");
    for (const auto& v : y)
        if (v <= 0 || v >= 1)
            throw ParameterRefusal("y value " + str(v) + " outside (0,1)");
    for (int p = 1; p <= q; ++p)
        if (y[static_cast<std::size_t>(p)] * 3 * t > y[static_cast<std::size_t>(p - 1)])
            throw ParameterRefusal("y_" + std::to_string(p) + " exceeds y_" + std::to_string(p - 1) +
                                   "/(3t)");
}

SparsifyParams default_params(const TreePattern& t, int k, long d)
{
    auto c = guarantee_constants(t, k);
    return {c.k, c.r, c.t, c.q, default_y(d, c.q)};
}

SparsifyParams forced_params(const TreePattern& t, int k, const Rational& y0)
{
    auto c = guarantee_constants(t, k);
    return {c.k, c.r, c.t, c.q, forced_y(y0, c.q, c.t)};
}

DescendResult sparse_descend(const Graph& g, const VertexSet& within, int levels,
                             const std::vector<Rational>& thresholds)
{
    if (levels < 1)
        throw ContractViolation("sparse_descend needs at least one level");
    if (static_cast<int>(thresholds.size()) != levels + 1)
        throw ContractViolation("sparse_descend needs levels+1 thresholds");
    for (const auto& n : thresholds)
        if (n <= 0)
            throw ContractViolation("sparse_descend thresholds must be positive");
    if (Rational(static_cast<long>(within.size())) < thresholds[0])
        throw ContractViolation("sparse_descend: n_0 exceeds the vertex count");

    VertexSet w = within;
    std::vector<int> chain;
    for (int p = 1; p <= levels; ++p) {
        if (max_degree_bounded(g, w, thresholds[static_cast<std::size_t>(p)], Comparison::strict))
            return {p, w};
        int v = max_degree_vertex(g, w);
        if (p == levels) {
            chain.push_back(v);
            chain.push_back((g.neighbours(v) & w).first());
            throw HypothesisFailure("sparse_descend ran out of levels: clique of size " +
                                        std::to_string(chain.size()),
                                    chain);
        }
        chain.push_back(v);
        w &= g.neighbours(v);
    }
    throw InvariantViolation("sparse_descend fell through");
}

LocalPartitionResult local_partition(const Graph& g, const VertexSet& within, const Rational& d,
                                     int parts)
{
    if (parts < 1)
        throw ContractViolation("local_partition needs at least one part");
    if (!max_degree_bounded(g, within, d, Comparison::strict))
        throw ContractViolation("local_partition: max degree is not below d");

    std::vector<int> part(static_cast<std::size_t>(g.order()), -1);
    LocalPartitionResult out;
    out.parts.assign(static_cast<std::size_t>(parts), VertexSet(within.universe()));
    int i = 0;
    for (int v : within) {
        part[static_cast<std::size_t>(v)] = i % parts;
        out.parts[static_cast<std::size_t>(i % parts)].insert(v);
        ++i;
    }
    // Each move strictly lowers the internal edge count, so this terminates.
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v : within) {
            int own = part[static_cast<std::size_t>(v)];
            int best = own;
            int best_count = g.degree_in(v, out.parts[static_cast<std::size_t>(own)]);
            for (int j = 0; j < parts; ++j) {
                int c = g.degree_in(v, out.parts[static_cast<std::size_t>(j)]);
                if (c < best_count) {
                    best = j;
                    best_count = c;
                }
            }
            if (best != own) {
                out.parts[static_cast<std::size_t>(own)].erase(v);
                out.parts[static_cast<std::size_t>(best)].insert(v);
                part[static_cast<std::size_t>(v)] = best;
                moved = true;
            }
        }
    }
    out.h = *std::max_element(out.parts.begin(), out.parts.end(),
                              [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    return out;
}

bool is_move_stable(const Graph& g, const std::vector<VertexSet>& parts)
{
    for (const auto& own : parts)
        for (int v : own) {
            int here = g.degree_in(v, own);
            for (const auto& other : parts)
                if (g.degree_in(v, other) < here)
                    return false;
        }
    return true;
}

std::optional<std::string> check_sparse_pair(const Graph& g, const VertexSet& within,
                                             const SparsifyParams& params, long d,
                                             const SparsePair& pair)
{
    const auto& y = params.y;
    if (pair.p < 1 || pair.p > params.q)
        return "p = " + std::to_string(pair.p) + " outside 1..q";
    if (!pair.a.is_subset_of(within) || !pair.b.is_subset_of(within))
        return std::string("A or B leaves the working graph");
    if (pair.a.intersects(pair.b))
        return std::string("A and B intersect");
    Rational dr(d);
    const Rational& y_prev = y[static_cast<std::size_t>(pair.p - 1)];
    const Rational& y_p = y[static_cast<std::size_t>(pair.p)];
    if (Rational(static_cast<long>(pair.a.size())) * 2 < y_prev * dr)
        return "|A| = " + std::to_string(pair.a.size()) + " below y_{p-1} d / 2 = " + str(y_prev * dr / 2);
    if (static_cast<long>(pair.b.size()) >= 2L * params.r * params.t * d)
        return "|B| = " + std::to_string(pair.b.size()) + " not below 2rtd";
    if (!max_degree_bounded(g, pair.a, y_p * dr, Comparison::strict))
        return std::string("G[A] max degree not below y_p d");
    Rational cap = max_of(y_p * dr, kt_of(params.k, params.t));
    VertexSet rest = within - pair.a - pair.b;
    if (!degrees_bounded(g, pair.a, rest, cap, Comparison::strict))
        return "a vertex of A has at least max(y_p d, k^t) = " + str(cap) + " neighbours outside A and B";
    return std::nullopt;
}

namespace {

class KeyStepRun {
public:
    KeyStepRun(const Graph& g, const VertexSet& within, const TreePattern& t,
               const SparsifyParams& params, const KeyStepOptions& options, KeyStepStats* stats)
        : g_(g), f_(within), tree_(t), params_(params), options_(options), stats_(stats),
          dfs_(dfs_enumeration(t, t.center())), kt_(kt_of(params.k, params.t)), used_(g.empty_set())
    {
    }

    KeyStepOutcome run()
    {
        params_.check();
        if (tree_.order() != params_.t)
            throw ParameterRefusal("tree order differs from t");
        if (tree_.radius() > params_.r)
            throw ParameterRefusal("tree radius exceeds r");
        d_ = max_degree_in(g_, f_);
        dr_ = Rational(d_);
        if (dr_ * y(params_.q - 1) < 6 * params_.t)
            throw ParameterRefusal("max degree " + std::to_string(d_) + " below 6t/y_{q-1}");

        seed();
        while (s_ < params_.t) {
            if (auto pair = grow())
                return *pair;
            if (options_.audit)
                audit();
        }
        return TreeWitness{image_};
    }

private:
    const Rational& y(int i) const { return params_.y[static_cast<std::size_t>(i)]; }
    VertexSet& a(int i) { return a_[static_cast<std::size_t>(i - 1)]; }
    int p(int i) const { return p_[static_cast<std::size_t>(i - 1)]; }
    int ell() const { return dfs_.depth[static_cast<std::size_t>(dfs_.order[static_cast<std::size_t>(s_ - 1)])] + 1; }

    std::vector<Rational> thresholds(int offset) const
    {
        std::vector<Rational> n;
        for (int i = 0; i <= params_.k - 1; ++i)
            n.push_back(y(offset + i) * dr_);
        return n;
    }

    void embed(int tree_vertex, int x)
    {
        image_[static_cast<std::size_t>(tree_vertex)] = x;
        used_.insert(x);
        ++s_;
        if (stats_)
            stats_->embedded = s_;
    }

    void seed()
    {
        image_.assign(static_cast<std::size_t>(params_.t), -1);
        int v = max_degree_vertex(g_, f_);
        VertexSet nbhd = g_.neighbours(v) & f_;
        DescendResult res;
        try {
            res = sparse_descend(g_, nbhd, params_.k - 1, thresholds(0));
        } catch (const HypothesisFailure& e) {
            rethrow_with_apex(e, v);
        }
        a_ = {res.h};
        p_ = {res.p};
        embed(dfs_.root(), v);
        if (options_.audit)
            audit();
    }

    // One extension step; returns the stuck pair when no x is eligible.
    std::optional<SparsePair> grow()
    {
        const int r = params_.r;
        const int t = params_.t;
        int sigma = dfs_.order[static_cast<std::size_t>(s_)];
        int j = dfs_.attach_index(s_);
        if (j < 1 || j > std::min(ell(), r) || j > static_cast<int>(a_.size()))
            throw InvariantViolation("key_step: attach index " + std::to_string(j) + " out of range");

        int x = -1;
        VertexSet c(g_.order());
        if (j < r) {
            VertexSet b = used_;
            for (int u : used_)
                b |= g_.neighbours(u);
            b &= f_;
            for (int i = 1; i <= j; ++i) {
                const auto size = static_cast<long>(a(i).size());
                for (int u : f_)
                    if (static_cast<long>(g_.neighbours(u).intersection_count(a(i))) * (2 * t - s_) > size)
                        b.insert(u);
            }
            // A_j lies in the neighbourhood of w_j; keep the output pair disjoint.
            b -= a(j);
            Rational cap = max_of(y(p(j)) * dr_, kt_);
            VertexSet outside = f_ - a(j) - b;
            long best = -1;
            for (int cand : a(j)) {
                long out = static_cast<long>(g_.neighbours(cand).intersection_count(outside));
                if (Rational(out) >= cap && out > best) {
                    best = out;
                    x = cand;
                }
            }
            if (x < 0) {
                SparsePair pair{p(j), a(j), b};
                if (auto why = check_sparse_pair(g_, f_, params_, d_, pair))
                    throw InvariantViolation("key_step output: " + *why);
                return pair;
            }
            c = g_.neighbours(x) & outside;
        } else {
            x = a(r).first();
            if (x < 0)
                throw InvariantViolation("key_step: A_r is empty with vertices left to embed");
        }

        for (int i = 1; i <= j; ++i) {
            a(i) -= g_.neighbours(x);
            a(i).erase(x);
        }
        a_.resize(static_cast<std::size_t>(j));
        p_.resize(static_cast<std::size_t>(std::min(j, r - 1)));
        if (j == r - 1) {
            auto res = ramsey_stable(g_, c, params_.k, t);
            if (!res.complete) {
                auto clique = find_clique(g_, c, params_.k + 1);
                if (!clique)
                    throw InvariantViolation("key_step: Ramsey extraction failed without a large clique");
                throw HypothesisFailure("clique found while extracting A_r", *clique);
            }
            a_.push_back(res.set);
        } else if (j < r - 1) {
            DescendResult res;
            try {
                res = sparse_descend(g_, c, params_.k - 1, thresholds(p(j)));
            } catch (const HypothesisFailure& e) {
                rethrow_with_apex(e, x);
            }
            a_.push_back(res.h);
            p_.push_back(p(j) + res.p);
        }
        embed(sigma, x);
        return std::nullopt;
    }

    [[noreturn]] void audit_fail(const std::string& what) const
    {
        throw InvariantViolation("reference state at s = " + std::to_string(s_) + ": " + what);
    }

    void audit()
    {
        if (stats_)
            ++stats_->states_audited;
        const int r = params_.r;
        const int t = params_.t;
        const int l = ell();
        const int na = std::min(l, r);
        const int np = std::min(l, r - 1);
        if (static_cast<int>(a_.size()) != na || static_cast<int>(p_.size()) != np)
            audit_fail("wrong number of references");
        auto path = dfs_.active_path(s_ - 1);

        VertexSet seen = used_;
        for (int i = 1; i <= na; ++i) {
            if (!a(i).is_subset_of(f_))
                audit_fail("A_" + std::to_string(i) + " leaves the graph");
            if (a(i).intersects(seen))
                audit_fail("A_" + std::to_string(i) + " meets U or an earlier A_h");
            seen |= a(i);
            int wi = image_[static_cast<std::size_t>(path[static_cast<std::size_t>(i - 1)])];
            for (int u : a(i)) {
                VertexSet touch = g_.neighbours(u) & used_;
                if (touch.size() != 1 || !touch.contains(wi))
                    audit_fail("a vertex of A_" + std::to_string(i) + " is not attached to w_i alone");
            }
        }
        Rational frac = 1 - make_rational(s_, 2 * t);
        for (int i = 1; i <= np; ++i) {
            if (p(i) < 1 || p(i) > (params_.k - 1) * i || p(i) > params_.q)
                audit_fail("p_" + std::to_string(i) + " = " + std::to_string(p(i)) + " out of range");
            if (Rational(static_cast<long>(a(i).size())) < frac * y(p(i) - 1) * dr_)
                audit_fail("|A_" + std::to_string(i) + "| below (1 - s/2t) y_{p_i-1} d");
            if (!max_degree_bounded(g_, a(i), y(p(i)) * dr_, Comparison::strict))
                audit_fail("G[A_" + std::to_string(i) + "] max degree not below y_{p_i} d");
        }
        if (l >= r) {
            if (!is_stable(g_, a(r)))
                audit_fail("A_r is not stable");
            if (static_cast<int>(a(r).size()) < t - s_)
                audit_fail("|A_r| below t - s");
        }
        for (int i = 2; i <= na; ++i)
            for (int h = 1; h < i; ++h) {
                const auto size = static_cast<long>(a(h).size());
                for (int u : a(i))
                    if (static_cast<long>(g_.neighbours(u).intersection_count(a(h))) * (2 * t - s_) > size)
                        audit_fail("A_" + std::to_string(i) + " is not sparse to A_" + std::to_string(h));
            }
    }

    const Graph& g_;
    const VertexSet& f_;
    const TreePattern& tree_;
    const SparsifyParams& params_;
    KeyStepOptions options_;
    KeyStepStats* stats_;
    DfsEnumeration dfs_;
    Rational kt_;
    long d_ = 0;
    Rational dr_;
    int s_ = 0;
    std::vector<int> image_;
    VertexSet used_;
    std::vector<VertexSet> a_;
    std::vector<int> p_;
};

} // namespace

KeyStepOutcome key_step(const Graph& g, const VertexSet& within, const TreePattern& t,
                        const SparsifyParams& params, const KeyStepOptions& options,
                        KeyStepStats* stats)
{
    return KeyStepRun(g, within, t, params, options, stats).run();
}

SparsifyOutcome sparsify_once(const Graph& g, const VertexSet& within, const TreePattern& t,
                              const SparsifyParams& params, long d, const KeyStepOptions& options)
{
    params.check();
    if (max_degree_in(g, within) > d)
        throw ContractViolation("sparsify_once: max degree exceeds d");
    const int q = params.q;
    const auto& y = params.y;
    const Rational dr(d);
    const Rational kt = kt_of(params.k, params.t);
    const Rational rt4(4 * params.r * params.t);

    struct Entry {
        VertexSet a, b;
        int p;
    };
    std::vector<Entry> acc;
    VertexSet f = within;
    while (!f.empty()) {
        long df = max_degree_in(g, f);
        Entry e;
        if (Rational(df) * y[static_cast<std::size_t>(q - 1)] >= 6 * params.t) {
            auto res = key_step(g, f, t, params, options);
            if (auto* w = std::get_if<TreeWitness>(&res))
                return *w;
            auto& pair = std::get<SparsePair>(res);
            e = {pair.a, pair.b, pair.p};
        } else {
            VertexSet a = greedy_maxdeg_stable(g, f);
            e = {a, f - a, q};
        }
        const Rational& yp = y[static_cast<std::size_t>(e.p)];
        const Rational& yprev = y[static_cast<std::size_t>(e.p - 1)];
        VertexSet rest = f - e.a - e.b;
        if (e.a.empty() || !(Rational(static_cast<long>(e.a.size())) * rt4 > yprev * static_cast<long>(e.b.size())))
            throw InvariantViolation("accumulator: |A_j| not above (4rt)^-1 y_{p-1} |B_j|");
        if (!max_degree_bounded(g, e.a, yp * dr, Comparison::strict))
            throw InvariantViolation("accumulator: G[A_j] max degree not below y_p d");
        if (!degrees_bounded(g, e.a, rest, max_of(yp * dr, kt), Comparison::inclusive))
            throw InvariantViolation("accumulator: A_j has too many neighbours in the unexplored part");
        acc.push_back(std::move(e));
        f = rest;
    }

    // Pick the index class covering the most vertices.
    int best_p = 1;
    std::size_t best_cover = 0;
    for (int p = 1; p <= q; ++p) {
        std::size_t cover = 0;
        for (const auto& e : acc)
            if (e.p == p)
                cover += e.a.size() + e.b.size();
        if (cover > best_cover) {
            best_cover = cover;
            best_p = p;
        }
    }
    if (best_cover * static_cast<std::size_t>(q) < within.size())
        throw InvariantViolation("accumulator does not cover the graph");
    VertexSet c = g.empty_set();
    for (const auto& e : acc)
        if (e.p == best_p)
            c |= e.a;
    const Rational& yp = y[static_cast<std::size_t>(best_p)];
    Rational edges(static_cast<long>(edge_count_in(g, c)));
    Rational csize(static_cast<long>(c.size()));
    if (edges * 2 > 3 * max_of(yp * dr, kt) * csize)
        throw InvariantViolation("accumulator edge bound fails on G[C]");

    SparsifyStep out;
    out.accumulator_size = static_cast<int>(acc.size());
    if (edges * 2 <= 3 * kt * csize) {
        out.h = turan_stable(g, c);
        out.p = q;
        out.turan = true;
    } else {
        // Strict threshold, so that the split below yields degree < y_p d.
        Rational six = 6 * yp * dr;
        VertexSet s_prime = g.empty_set();
        for (int v : c)
            if (Rational(g.degree_in(v, c)) < six)
                s_prime.insert(v);
        if (s_prime.size() * 2 < c.size())
            throw InvariantViolation("fewer than half of C have low degree");
        out.h = local_partition(g, s_prime, six, 6).h;
        out.p = best_p;
    }
    BigInt cc = guarantee_constants(t, params.k).c;
    const Rational& y_out_prev = y[static_cast<std::size_t>(out.p - 1)];
    if (Rational(static_cast<long>(out.h.size())) * Rational(cc) < y_out_prev * static_cast<long>(within.size()))
        throw InvariantViolation("sparsify_once: |H| below (20qrtk^t)^-1 y_{p-1} |G|");
    if (!max_degree_bounded(g, out.h, y[static_cast<std::size_t>(out.p)] * dr, Comparison::strict))
        throw InvariantViolation("sparsify_once: max degree of H not below y_p d");
    return out;
}

SparseRun stable_set_sparse(const Graph& g, const TreePattern& t, int k, const SparseOptions& options)
{
    if (k < 1)
        throw ContractViolation("stable_set_sparse needs k >= 1");
    SparseRun run;
    run.branch = "trivial";
    const int n = g.order();
    const VertexSet all = g.vertices();
    auto cert = [&](VertexSet s, Rational bound, std::string mode) {
        run.outcome = StableSetCert{std::move(s), std::move(bound), std::move(mode), false};
        return run;
    };
    auto any_edge = [&]() -> std::optional<Edge> {
        for (int v = 0; v < n; ++v)
            if (int u = g.neighbours(v).first(); u >= 0)
                return Edge{v, u};
        return std::nullopt;
    };

    if (n == 0)
        return cert(all, Rational(0), "trivial");
    if (t.order() == 1) {
        run.outcome = TreeWitness{{0}};
        return run;
    }
    if (t.order() == 2) {
        if (auto e = any_edge()) {
            run.outcome = TreeWitness{{e->first, e->second}};
            return run;
        }
        return cert(all, Rational(n), "trivial");
    }
    if (k == 1) {
        if (auto e = any_edge()) {
            run.outcome = HypothesisViolation{{e->first, e->second}};
            return run;
        }
        return cert(all, Rational(n), "trivial");
    }

    const long delta = max_degree_in(g, all);
    const long d = std::max(delta, 2L);
    run.guarantee = sparse_guarantee(n, delta, t, k);
    const auto& consts = run.guarantee->constants;
    Rational claim = max_of(Rational(1), run.guarantee->bound);

    try {
        SparsifyParams params;
        if (!options.force) {
            if (greedy_branch_applies(d, consts)) {
                run.branch = "greedy";
                VertexSet s = greedy_maxdeg_stable(g);
                if (static_cast<long>(s.size()) * (delta + 1) < n)
                    throw InvariantViolation("greedy stable set below n/(d+1)");
                return cert(std::move(s), claim, "greedy");
            }
            run.branch = "iterated";
            params = default_params(t, k, d);
            run.round_limit = default_round_limit(d, consts.q);
        } else {
            run.branch = "forced";
            params = forced_params(t, k, options.y0);
            params.check();
            run.round_limit = forced_round_limit(d, params.y[1]);
            claim = n;
        }
        params.check();

        KeyStepOptions ks{options.audit};
        VertexSet cur = all;
        for (long dj = delta; dj >= 1; dj = max_degree_in(g, cur)) {
            auto res = sparsify_once(g, cur, t, params, dj, ks);
            if (auto* w = std::get_if<TreeWitness>(&res)) {
                run.outcome = *w;
                return run;
            }
            auto& step = std::get<SparsifyStep>(res);
            cur = step.h;
            ++run.rounds;
            run.round_p.push_back(step.p);
            if (options.force)
                claim *= params.y[static_cast<std::size_t>(step.p - 1)] / Rational(consts.c);
            if (run.rounds > run.round_limit)
                throw InvariantViolation("sparsification exceeded its round bound " +
                                         std::to_string(run.round_limit));
        }
        return cert(std::move(cur), claim, run.branch);
    } catch (const HypothesisFailure& e) {
        run.outcome = HypothesisViolation{e.clique};
        return run;
    }
}

} // namespace treefree
