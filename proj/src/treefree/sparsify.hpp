#pragma once

#include "treefree/graph.hpp"
#include "treefree/guarantee.hpp"
#include "treefree/outcome.hpp"
#include "treefree/tree.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace treefree {

struct SparsifyParams {
    int k = 2;
    int r = 2;
    int t = 2;
    int q = 1;
    std::vector<Rational> y; // y_0..y_q

    // Throws ParameterRefusal unless k, r, t >= 2, q = (r-1)(k-1), every
    // y_i lies in (0,1) and y_p <= y_{p-1}/(3t).
    void check() const;
};

// r = max(radius(T), 2); y = 2^(-x^i) for the degree bound d.
SparsifyParams default_params(const TreePattern& t, int k, long d);
// y_i = y0 / (3t)^i.
SparsifyParams forced_params(const TreePattern& t, int k, const Rational& y0);

struct DescendResult {
    int p = 1;
    VertexSet h;
};

// Thresholds n_0..n_levels; returns p in 1..levels with |H| >= n_{p-1} and
// max degree of G[H] below n_p. Throws HypothesisFailure with a clique of
// levels+1 vertices when the recursion runs out of levels.
DescendResult sparse_descend(const Graph& g, const VertexSet& within, int levels,
                             const std::vector<Rational>& thresholds);

struct LocalPartitionResult {
    VertexSet h;                // a largest part
    std::vector<VertexSet> parts;
};

// Local search over `parts`-partitions of G[within] minimising the number of
// internal edges. Requires max degree < d.
LocalPartitionResult local_partition(const Graph& g, const VertexSet& within, const Rational& d,
                                     int parts);
// No single-vertex move lowers the internal edge count.
bool is_move_stable(const Graph& g, const std::vector<VertexSet>& parts);

struct SparsePair {
    int p = 1;
    VertexSet a;
    VertexSet b;
};

struct KeyStepStats {
    int embedded = 0;     // largest prefix of T embedded
    int states_audited = 0;
};

struct KeyStepOptions {
    bool audit = false; // recheck every reference state exactly
};

using KeyStepOutcome = std::variant<SparsePair, TreeWitness>;

// Grows an induced copy of T inside G[within] along a dfs-enumeration from
// a center of T, keeping reference sets; returns the pair (A_j, B) once the
// growth is stuck. Throws ParameterRefusal when the max degree d of
// G[within] is below 6t/y_{q-1}, and HypothesisFailure on a (k+1)-clique.
KeyStepOutcome key_step(const Graph& g, const VertexSet& within, const TreePattern& t,
                        const SparsifyParams& params, const KeyStepOptions& options = {},
                        KeyStepStats* stats = nullptr);

// Checks the output conditions of a key_step pair against G[within] with
// max degree d; returns a description of the first failure, or nullopt.
std::optional<std::string> check_sparse_pair(const Graph& g, const VertexSet& within,
                                             const SparsifyParams& params, long d,
                                             const SparsePair& pair);

struct SparsifyStep {
    int p = 1;
    VertexSet h;
    int accumulator_size = 0;
    bool turan = false; // edge count small enough for the Turan step
};

using SparsifyOutcome = std::variant<SparsifyStep, TreeWitness>;

// One sparsification round on G[within] with max degree at most d.
SparsifyOutcome sparsify_once(const Graph& g, const VertexSet& within, const TreePattern& t,
                              const SparsifyParams& params, long d,
                              const KeyStepOptions& options = {});

struct SparseOptions {
    // Force mode runs the iterated engine with y_i = y0/(3t)^i regardless of
    // the greedy shortcut.
    bool force = false;
    Rational y0 = make_rational(255, 256);
    bool audit = false;
};

struct SparseRun {
    SearchOutcome outcome;
    std::string branch; // "trivial", "greedy", "iterated" or "forced"
    int rounds = 0;
    long round_limit = 0;
    std::vector<int> round_p;
    std::optional<SparseGuarantee> guarantee;
};

SparseRun stable_set_sparse(const Graph& g, const TreePattern& t, int k,
                            const SparseOptions& options = {});

} // namespace treefree
