#include "treefree/multibroom.hpp"

#include "treefree/errors.hpp"
#include "treefree/extract.hpp"
#include "treefree/oracle.hpp"
#include "treefree/validate.hpp"

#include <algorithm>

namespace treefree {

namespace {

int power_int(int k, int m)
{
    return static_cast<int>(pow_int(k, static_cast<unsigned>(m)).get_si());
}

Rational weighted_degree(const Graph& g, const Weighting& w, int u, const VertexSet& within)
{
    return weight_of(w, g.neighbours(u) & within);
}

[[noreturn]] void rethrow_with_apex(const HypothesisFailure& e, int apex)
{
    auto clique = e.clique;
    clique.push_back(apex);
    throw HypothesisFailure(e.what(), std::move(clique));
}

// m pairwise nonadjacent vertices of `pool`, by plain backtracking.
bool extend_stable(const Graph& g, const std::vector<int>& pool, std::size_t from, int m,
                   std::vector<int>& chosen)
{
    if (static_cast<int>(chosen.size()) == m)
        return true;
    for (std::size_t i = from; i < pool.size(); ++i) {
        int u = pool[i];
        bool free = std::none_of(chosen.begin(), chosen.end(), [&](int c) { return g.adjacent(u, c); });
        if (!free)
            continue;
        chosen.push_back(u);
        if (extend_stable(g, pool, i + 1, m, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

Rational pow2(int e)
{
    return Rational(pow_int(2, static_cast<unsigned>(e)));
}

class BroomSearch {
public:
    BroomSearch(const BroomProblem& pb, const VertexSet& within, int v, int length, int bristles)
        : pb_(pb), g_(pb.g), within_(within), v_(v), length_(length), bristles_(bristles),
          km_(power_int(pb.k, bristles))
    {
    }

    BroomOutcome run()
    {
        if (!within_.contains(v_))
            throw ContractViolation("broom_or_degenerate: root outside the vertex set");
        if (length_ < 1 || bristles_ < 0)
            throw ContractViolation("broom_or_degenerate: bad broom shape");
        if (pb_.d < 1)
            throw ContractViolation("broom_or_degenerate: d must be at least 1");
        BroomOutcome out = search();
        std::optional<std::string> why;
        if (auto* b = std::get_if<BroomWitness>(&out))
            why = check_broom(g_, within_, v_, length_, bristles_, *b);
        else
            why = check_degenerate_pair(pb_, within_, v_, length_, bristles_, std::get<DegeneratePair>(out));
        if (why)
            throw InvariantViolation("broom_or_degenerate: " + *why);
        return out;
    }

private:
    Rational weight(const VertexSet& s) const { return weight_of(pb_.w, s); }

    BroomOutcome search()
    {
        const int n = g_.order();
        zero_ = g_.empty_set();
        for (int u : within_)
            if (u != v_ && pb_.w[static_cast<std::size_t>(u)] == 0)
                zero_.insert(u);
        live_ = within_ - zero_;
        delta_ = 0;
        for (int u : live_)
            delta_ = std::max(delta_, weighted_degree(g_, pb_.w, u, live_));

        pred_.assign(static_cast<std::size_t>(n), -1);
        VertexSet root = g_.empty_set();
        root.insert(v_);
        layers_ = {root};
        unions_ = {g_.empty_set()};
        for (int i = 1; i <= length_; ++i)
            grow_layer();
        for (int i = 1; i <= length_; ++i)
            if (weight(layers_[static_cast<std::size_t>(i)]) > 2 * delta_)
                throw InvariantViolation("layer " + std::to_string(i) + " heavier than 2 Delta");

        for (int j = 1; j < length_; ++j) {
            Rational next = weight(layers_[static_cast<std::size_t>(j + 1)]);
            Rational here = weight(layers_[static_cast<std::size_t>(j)]);
            if (next < std::min(here, delta_))
                return j == 1 ? first_layer() : augment(j);
        }
        return full_depth();
    }

    // R_{i-1} greedily by descending weight, then L_i and J_i.
    void grow_layer()
    {
        const VertexSet& prev = layers_.back();
        VertexSet blocked = unions_.back();
        blocked.insert(v_);
        auto cands = prev.to_vector();
        std::stable_sort(cands.begin(), cands.end(), [&](int a, int b) {
            return pb_.w[static_cast<std::size_t>(a)] > pb_.w[static_cast<std::size_t>(b)];
        });
        VertexSet chosen = g_.empty_set();
        VertexSet reach = g_.empty_set();
        Rational cap = 2 * delta_;
        for (int u : cands) {
            VertexSet grown = reach | ((g_.neighbours(u) & live_) - blocked);
            if (weight(grown) <= cap) {
                chosen.insert(u);
                reach = std::move(grown);
            }
        }
        for (int u : reach)
            pred_[static_cast<std::size_t>(u)] = (g_.neighbours(u) & chosen).first();
        chosen_.push_back(chosen);
        layers_.push_back(reach);
        unions_.push_back(unions_.back() | reach);
    }

    std::vector<int> path_to(int u) const
    {
        std::vector<int> path;
        for (int x = u; x != v_; x = pred_[static_cast<std::size_t>(x)]) {
            if (x < 0)
                throw InvariantViolation("broken predecessor chain");
            path.push_back(x);
        }
        path.push_back(v_);
        std::reverse(path.begin(), path.end());
        return path;
    }

    VertexSet ask_oracle(const VertexSet& c, int apex) const
    {
        if (c.empty())
            return c;
        VertexSet s = pb_.oracle(c, apex);
        if (!s.is_subset_of(c) || !is_stable(g_, s))
            throw InvariantViolation("inner oracle returned an invalid stable set");
        if (pb_.d * weight(s) < weight(c))
            throw InvariantViolation("inner oracle missed its factor");
        return s;
    }

    void check_prefix(int j) const
    {
        Rational lj = weight(layers_[static_cast<std::size_t>(j)]);
        if (weight(unions_[static_cast<std::size_t>(j - 1)]) > 2 * (j - 1) * lj)
            throw InvariantViolation("w(J_{j-1}) exceeds 2(j-1) w(L_j)");
        if (lj < weighted_degree(g_, pb_.w, v_, live_))
            throw InvariantViolation("w(L_j) below w(N(v))");
    }

    std::optional<std::vector<int>> bristles_for(int u, const VertexSet& nb) const
    {
        if (bristles_ == 0)
            return std::vector<int>{};
        if (static_cast<long>(nb.size()) >= km_) {
            auto res = ramsey_stable(g_, nb, pb_.k, bristles_);
            if (!res.complete) {
                auto clique = find_clique(g_, nb, pb_.k);
                if (!clique)
                    throw InvariantViolation("Ramsey extraction failed without a large clique");
                clique->push_back(u);
                throw HypothesisFailure("clique found next to a broom end", *clique);
            }
            auto set = res.set.to_vector();
            set.resize(static_cast<std::size_t>(bristles_));
            return set;
        }
        std::vector<int> chosen;
        if (extend_stable(g_, nb.to_vector(), 0, bristles_, chosen))
            return chosen;
        return std::nullopt;
    }

    BroomOutcome full_depth()
    {
        check_prefix(length_);
        const VertexSet& last = layers_[static_cast<std::size_t>(length_)];
        VertexSet rest = last;
        std::vector<VertexSet> parts;
        for (int vi : chosen_[static_cast<std::size_t>(length_ - 1)]) {
            VertexSet c = rest & g_.neighbours(vi);
            rest -= c;
            parts.push_back(ask_oracle(c, vi));
        }
        if (!rest.empty())
            throw InvariantViolation("last layer not covered by its predecessors");

        VertexSet outside = live_ - unions_[static_cast<std::size_t>(length_)];
        outside.erase(v_);
        std::vector<VertexSet> q(parts.size() + 1, outside);
        for (std::size_t i = parts.size(); i-- > 0;)
            q[i] = q[i + 1] | parts[i];
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (int u : parts[i])
                if (auto b = bristles_for(u, g_.neighbours(u) & q[i + 1]))
                    return BroomWitness{path_to(u), *b};

        DegeneratePair pair{g_.empty_set(), g_.empty_set(), {}};
        for (const auto& s : parts) {
            pair.x |= s;
            for (int u : s)
                pair.ordering.push_back(u);
        }
        pair.y = unions_[static_cast<std::size_t>(length_ - 1)] | (last - pair.x) | zero_;
        return pair;
    }

    BroomOutcome first_layer()
    {
        const VertexSet& l1 = layers_[1];
        if (!(chosen_[1] == l1))
            throw InvariantViolation("R_1 differs from L_1 at a drop");
        DegeneratePair pair{ask_oracle(l1, v_), g_.empty_set(), {}};
        if (pair.x.empty())
            throw InvariantViolation("empty stable set in a positive-weight first layer");
        pair.ordering = pair.x.to_vector();
        // The complement of the stable set inside L_1 goes to Y.
        pair.y = (l1 - pair.x) | layers_[2] | zero_;
        return pair;
    }

    BroomOutcome augment(int j)
    {
        const VertexSet& lj = layers_[static_cast<std::size_t>(j)];
        if (!(chosen_[static_cast<std::size_t>(j)] == lj))
            throw InvariantViolation("R_j differs from L_j at a drop");
        check_prefix(j);
        const int sub_length = length_ - j + 1;
        Rational factor = pow2(2 * sub_length) * pb_.d;
        DegeneratePair pair{g_.empty_set(), g_.empty_set(), {}};
        VertexSet y_local = g_.empty_set();
        for (VertexSet rest = lj; !rest.empty(); rest = lj - pair.x - y_local) {
            int q = rest.first();
            int p = pred_[static_cast<std::size_t>(q)];
            VertexSet sub = rest;
            sub.insert(p);
            auto res = BroomSearch(pb_, sub, p, sub_length, bristles_).run();
            if (auto* b = std::get_if<BroomWitness>(&res)) {
                auto path = path_to(p);
                path.insert(path.end(), b->path.begin() + 1, b->path.end());
                return BroomWitness{std::move(path), b->bristles};
            }
            auto& inner = std::get<DegeneratePair>(res);
            if (inner.x.empty())
                throw InvariantViolation("augmentation step added nothing to X");
            pair.x |= inner.x;
            pair.ordering.insert(pair.ordering.end(), inner.ordering.begin(), inner.ordering.end());
            y_local |= inner.y;
            if (factor * weight(pair.x) < weight(pair.x | y_local))
                throw InvariantViolation("augmentation broke the weight ratio");
        }
        pair.y = y_local | unions_[static_cast<std::size_t>(j - 1)] |
                 layers_[static_cast<std::size_t>(j + 1)] | zero_;
        return pair;
    }

    const BroomProblem& pb_;
    const Graph& g_;
    VertexSet within_;
    int v_;
    int length_;
    int bristles_;
    int km_;
    VertexSet zero_;
    VertexSet live_;
    Rational delta_;
    std::vector<int> pred_;
    std::vector<VertexSet> layers_;  // L_0..L_length
    std::vector<VertexSet> chosen_;  // R_0..R_{length-1}
    std::vector<VertexSet> unions_;  // J_0..J_length
};

struct Shape {
    int t = 1;
    int length = 0;
    int bristles = 0;
};

Shape shape_of(const MultibroomSpec& spec)
{
    Shape s;
    s.t = multibroom_order(spec);
    for (const auto& a : spec) {
        s.length = std::max(s.length, a.length);
        s.bristles = std::max(s.bristles, a.bristles);
    }
    return s;
}

class MultibroomEngine {
public:
    MultibroomEngine(const Graph& g, const Weighting& w, const MultibroomSpec& spec, MultibroomStats* stats)
        : g_(g), w_(w), spec_(spec), shape_(shape_of(spec)), stats_(stats ? stats : &local_)
    {
    }

    VertexSet stable(int level, const VertexSet& within)
    {
        if (within.empty())
            return within;
        if (level == 1) {
            for (int u : within)
                if (int x = (g_.neighbours(u) & within).first(); x >= 0)
                    throw HypothesisFailure("edge inside a set assumed edgeless", {u, x});
            return within;
        }
        Growth run(*this, level, within);
        VertexSet s = run.finish();
        if (s.empty())
            s.insert(within.first());
        if (level_factor(spec_, level) * weight(s) < weight(within))
            throw InvariantViolation("level " + std::to_string(level) + " stable set misses its factor");
        return s;
    }

private:
    Rational weight(const VertexSet& s) const { return weight_of(w_, s); }

    class Growth {
    public:
        Growth(MultibroomEngine& e, int level, const VertexSet& within)
            : e_(e), g_(e.g_), within_(within), x_(within.universe()), y_(within.universe()),
              d_(level_factor(e.spec_, level - 1)),
              big_d_(d_ * d_ * pow2(2 * e.shape_.length + 3) * e.shape_.t),
              km_(power_int(level, e.shape_.bristles)),
              problem_{e.g_, e.w_, level, d_, [this, level](const VertexSet& c, int apex) {
                           try {
                               return e_.stable(level - 1, c);
                           } catch (const HypothesisFailure& f) {
                               rethrow_with_apex(f, apex);
                           }
                       }}
        {
        }

        VertexSet finish()
        {
            for (VertexSet rest = within_; !(rest = within_ - x_ - y_).empty();) {
                ++e_.stats_->rounds;
                round(rest);
            }
            auto classes = colour_degenerate(g_, within_ - y_, x_, order_, km_);
            VertexSet best = g_.empty_set();
            Rational best_w = -1;
            for (const auto& c : classes)
                if (Rational cw = e_.weight(c); cw > best_w) {
                    best_w = cw;
                    best = c;
                }
            return best;
        }

    private:
        void round(const VertexSet& rest)
        {
            int v = -1;
            Rational delta = -1;
            for (int u : rest)
                if (Rational du = weighted_degree(g_, e_.w_, u, rest); du > delta) {
                    delta = du;
                    v = u;
                }
            if (delta == 0) {
                absorb(rest);
                return;
            }
            const VertexSet nv = g_.neighbours(v) & rest;
            VertexSet s = problem_.oracle(nv, v);
            if (!s.is_subset_of(nv) || !is_stable(g_, s) || d_ * e_.weight(s) < delta)
                throw InvariantViolation("inner oracle failed on a neighbourhood");
            const Rational ws = e_.weight(s);
            const int t = e_.shape_.t;
            VertexSet z = g_.empty_set();
            for (int u : rest - s)
                if (u != v && 2 * t * e_.weight(g_.neighbours(u) & s) >= ws)
                    z.insert(u);
            const VertexSet z_prime = nv - s;

            std::vector<int> embedding(static_cast<std::size_t>(t), -1);
            embedding[0] = v;
            std::size_t next = 1;
            VertexSet body = g_.empty_set(); // H minus v
            for (const auto& arm : e_.spec_) {
                VertexSet w_set = body;
                for (int h : body)
                    w_set |= g_.neighbours(h);
                w_set &= rest;
                w_set -= z;
                w_set -= z_prime;
                w_set.erase(v);
                VertexSet sub = rest - z - z_prime - w_set;
                auto res = broom_or_degenerate(problem_, sub, v, arm.length, arm.bristles);
                if (auto* b = std::get_if<BroomWitness>(&res)) {
                    for (std::size_t i = 1; i < b->path.size(); ++i)
                        embedding[next++] = b->path[i];
                    for (int u : b->bristles)
                        embedding[next++] = u;
                    for (std::size_t i = 1; i < b->path.size(); ++i)
                        body.insert(b->path[i]);
                    for (int u : b->bristles)
                        body.insert(u);
                    ++e_.stats_->brooms;
                    continue;
                }
                auto& pair = std::get<DegeneratePair>(res);
                VertexSet y_new = pair.y | z | z_prime | w_set;
                y_new.insert(v);
                if (big_d_ * e_.weight(pair.x) >= e_.weight(pair.x | y_new)) {
                    if (!is_degenerate_ordering(g_, rest - y_new, pair.x, pair.ordering, km_))
                        throw InvariantViolation("accepted pair is not degenerate in the working graph");
                    x_ |= pair.x;
                    order_.insert(order_.end(), pair.ordering.begin(), pair.ordering.end());
                    y_ |= y_new;
                } else {
                    absorb(rest);
                }
                return;
            }
            std::string why;
            if (!is_induced_copy(g_, make_multibroom(e_.spec_), embedding, &why))
                throw InvariantViolation("assembled multibroom rejected: " + why);
            throw TreeFound(std::move(embedding));
        }

        // A vertex whose own weight pays for its neighbourhood moves to X
        // with that neighbourhood in Y.
        void absorb(const VertexSet& rest)
        {
            int pick = -1;
            Rational best = -1;
            for (int u : rest) {
                const Rational& wu = e_.w_[static_cast<std::size_t>(u)];
                if ((big_d_ - 1) * wu >= weighted_degree(g_, e_.w_, u, rest) && wu > best) {
                    best = wu;
                    pick = u;
                }
            }
            if (pick < 0)
                throw InvariantViolation("no vertex can be absorbed");
            x_.insert(pick);
            order_.push_back(pick);
            y_ |= g_.neighbours(pick) & rest;
            ++e_.stats_->absorptions;
        }

        MultibroomEngine& e_;
        const Graph& g_;
        VertexSet within_;
        VertexSet x_;
        VertexSet y_;
        std::vector<int> order_;
        Rational d_;
        Rational big_d_;
        int km_;
        BroomProblem problem_;
    };

    const Graph& g_;
    const Weighting& w_;
    const MultibroomSpec& spec_;
    Shape shape_;
    MultibroomStats local_;
    MultibroomStats* stats_;
};

} // namespace

BroomOutcome broom_or_degenerate(const BroomProblem& problem, const VertexSet& within, int v,
                                 int length, int bristles)
{
    return BroomSearch(problem, within, v, length, bristles).run();
}

std::optional<std::string> check_broom(const Graph& g, const VertexSet& within, int v, int length,
                                       int bristles, const BroomWitness& broom)
{
    if (static_cast<int>(broom.path.size()) != length + 1 || broom.path.front() != v)
        return std::string("broom path has the wrong shape");
    if (static_cast<int>(broom.bristles.size()) != bristles)
        return std::string("broom has the wrong number of bristles");
    std::vector<int> embedding = broom.path;
    embedding.insert(embedding.end(), broom.bristles.begin(), broom.bristles.end());
    for (int u : embedding)
        if (u < 0 || u >= g.order() || !within.contains(u))
            return std::string("broom leaves the vertex set");
    std::string why;
    if (!is_induced_copy(g, make_broom(length, bristles), embedding, &why))
        return "broom is not induced: " + why;
    return std::nullopt;
}

std::optional<std::string> check_degenerate_pair(const BroomProblem& problem, const VertexSet& within,
                                                 int v, int length, int bristles,
                                                 const DegeneratePair& pair)
{
    const auto& g = problem.g;
    const auto& w = problem.w;
    if (!pair.x.is_subset_of(within) || !pair.y.is_subset_of(within))
        return std::string("X or Y leaves the vertex set");
    if (pair.x.intersects(pair.y))
        return std::string("X and Y intersect");
    if (pair.x.contains(v) || pair.y.contains(v))
        return std::string("the root lies in X or Y");
    Rational total = weight_of(w, pair.x | pair.y);
    if (problem.d * pow2(2 * length) * weight_of(w, pair.x) < total)
        return "w(X u Y) = " + total.get_str() + " exceeds d 2^(2l) w(X)";
    Rational nv = weighted_degree(g, w, v, within);
    if (total < nv)
        return "w(X u Y) = " + total.get_str() + " below w(N(v)) = " + nv.get_str();
    VertexSet host = within - pair.y;
    host.erase(v);
    if (!is_degenerate_ordering(g, host, pair.x, pair.ordering, power_int(problem.k, bristles)))
        return std::string("X is not degenerate in the remaining graph");
    return std::nullopt;
}

Rational level_factor(const MultibroomSpec& spec, int level)
{
    if (level < 1)
        throw ContractViolation("level_factor needs level >= 1");
    Shape s = shape_of(spec);
    Rational d = 1;
    for (int j = 2; j <= level; ++j)
        d = d * d * pow2(2 * s.length + 3) * s.t * (power_int(j, s.bristles) + 1);
    return d;
}

VertexSet stable_weighted_recursive(const Graph& g, const Weighting& w, const MultibroomSpec& spec,
                                    int level, const VertexSet& within, MultibroomStats* stats)
{
    if (level < 1)
        throw ContractViolation("stable_weighted_recursive needs level >= 1");
    if (static_cast<int>(w.size()) != g.order())
        throw ContractViolation("weighting size differs from the vertex count");
    for (const auto& x : w)
        if (x < 0)
            throw ContractViolation("weights must be nonnegative");
    return MultibroomEngine(g, w, spec, stats).stable(level, within);
}

MultibroomRun weighted_stable_multibroom(const Graph& g, const Weighting& w,
                                         const MultibroomSpec& spec, int k)
{
    if (k < 1)
        throw ContractViolation("weighted_stable_multibroom needs k >= 1");
    MultibroomRun run;
    run.constant = multibroom_constant(spec, k);
    try {
        VertexSet s = stable_weighted_recursive(g, w, spec, k, g.vertices(), &run.stats);
        Rational bound = run.constant * weight_of(w, g.vertices());
        run.outcome = StableSetCert{std::move(s), bound, "multibroom", true};
    } catch (const TreeFound& found) {
        run.outcome = TreeWitness{found.embedding};
    } catch (const HypothesisFailure& e) {
        run.outcome = HypothesisViolation{e.clique};
    }
    return run;
}

} // namespace treefree
