#pragma once

#include "treefree/graph.hpp"
#include "treefree/outcome.hpp"
#include "treefree/tree.hpp"

#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace treefree {

// An induced (length, bristles)-broom: path[0] is the root, path.back()
// carries the bristles.
struct BroomWitness {
    std::vector<int> path;
    std::vector<int> bristles;
};

// X is degenerate in G minus (Y and the root), witnessed by `ordering`.
struct DegeneratePair {
    VertexSet x;
    VertexSet y;
    std::vector<int> ordering;
};

using BroomOutcome = std::variant<BroomWitness, DegeneratePair>;

// Returns a stable subset S of G[within] with d w(S) >= w(within); `apex` is
// adjacent to every vertex of `within`. May throw HypothesisFailure.
using StableOracle = std::function<VertexSet(const VertexSet& within, int apex)>;

// Thrown from inside the recursion when a copy of the multibroom turns up;
// embedding follows make_multibroom numbering.
class TreeFound : public std::exception {
public:
    explicit TreeFound(std::vector<int> embedding) : embedding(std::move(embedding)) {}
    const char* what() const noexcept override { return "induced copy of the tree found"; }
    std::vector<int> embedding;
};

struct BroomProblem {
    const Graph& g;
    const Weighting& w;
    int k = 2;
    Rational d = 1; // factor achieved by the oracle
    StableOracle oracle;
};

// Layered search from v inside G[within]: either an induced broom rooted at
// v, or a pair with d 2^(2 length) w(X) >= w(X u Y) >= w(N(v)) and X
// k^bristles-degenerate in G[within] minus (Y and v).
BroomOutcome broom_or_degenerate(const BroomProblem& problem, const VertexSet& within, int v,
                                 int length, int bristles);

std::optional<std::string> check_broom(const Graph& g, const VertexSet& within, int v, int length,
                                       int bristles, const BroomWitness& broom);
std::optional<std::string> check_degenerate_pair(const BroomProblem& problem, const VertexSet& within,
                                                 int v, int length, int bristles,
                                                 const DegeneratePair& pair);

// d_1 = 1 and d_j = d_{j-1}^2 2^(2l+3) |T| (j^m + 1), with l and m the
// largest arm length and bristle count. The level-k guarantee is 1/d_k.
Rational level_factor(const MultibroomSpec& spec, int level);
inline Rational multibroom_constant(const MultibroomSpec& spec, int k)
{
    return 1 / level_factor(spec, k);
}

struct MultibroomStats {
    int rounds = 0;      // growth rounds over every recursion level
    int absorptions = 0; // rounds closed by the single-vertex fallback
    int brooms = 0;      // arms attached in total
};

// Stable S inside G[within] with d_level w(S) >= w(within). Throws TreeFound
// or HypothesisFailure when the hypotheses fail.
VertexSet stable_weighted_recursive(const Graph& g, const Weighting& w, const MultibroomSpec& spec,
                                    int level, const VertexSet& within, MultibroomStats* stats = nullptr);

struct MultibroomRun {
    SearchOutcome outcome;
    Rational constant; // c_k
    MultibroomStats stats;
};

MultibroomRun weighted_stable_multibroom(const Graph& g, const Weighting& w,
                                         const MultibroomSpec& spec, int k);

} // namespace treefree
