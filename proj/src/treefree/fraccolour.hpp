#pragma once

#include "treefree/graph.hpp"
#include "treefree/oracle.hpp"
#include "treefree/outcome.hpp"
#include "treefree/tree.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace treefree {

// Stable sets A_1..A_a with every vertex in at least b of them.
struct FracColouring {
    std::vector<VertexSet> sets;
    std::vector<int> cover; // cover[v] = number of sets containing v
    int a = 0;
    int b = 0;
};

struct FracRun {
    std::variant<FracColouring, TreeWitness, HypothesisViolation> outcome;
    // Sum of 2^-cover(v) before the first round and after each round.
    std::vector<Rational> potential;
    Rational constant; // per-round guarantee of the stable-set engine
};

// Each round weights v by 2^-cover(v), asks the multibroom engine for a
// heavy stable set and adds it to the family.
FracRun build_frac_colouring(const Graph& g, const MultibroomSpec& spec, int k, int rounds);

struct FracCheck {
    bool pass = true;
    std::vector<std::string> failures;
    std::optional<Rational> ratio;        // a/b when b >= 1
    std::optional<Rational> frac_chromatic; // exact value when within oracle limits
};

FracCheck verify_frac_colouring(const Graph& g, const FracColouring& fc, const OracleLimits& limits = {});

// Heuristic round count ceil((b_target + log2 n) 2 ln 2 / c) for an observed
// per-round contraction c; not a guarantee.
int suggest_rounds(int n, int b_target, double observed_contraction);

} // namespace treefree
