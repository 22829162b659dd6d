#pragma once

#include "treefree/rational.hpp"
#include "treefree/vertex_set.hpp"

#include <string>
#include <variant>
#include <vector>

namespace treefree {

// A stable set with the bound it was promised to meet. When `weighted` is
// set the bound is on w(set); otherwise on |set|.
struct StableSetCert {
    VertexSet set;
    Rational claimed_bound;
    std::string mode;
    bool weighted = false;
};

// embedding[i] is the image of tree vertex i.
struct TreeWitness {
    std::vector<int> embedding;
};

// The clique-number hypothesis failed; `clique` has more than k vertices.
struct HypothesisViolation {
    std::vector<int> clique;
};

using SearchOutcome = std::variant<StableSetCert, TreeWitness, HypothesisViolation>;

inline const char* outcome_kind(const SearchOutcome& o)
{
    switch (o.index()) {
    case 0:
        return "stable_set";
    case 1:
        return "tree_witness";
    default:
        return "hypothesis_violation";
    }
}

} // namespace treefree
