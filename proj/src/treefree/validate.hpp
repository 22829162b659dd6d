#pragma once

#include "treefree/graph.hpp"
#include "treefree/oracle.hpp"
#include "treefree/outcome.hpp"
#include "treefree/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace treefree {

struct ValidationReport {
    bool pass = true;
    std::vector<std::string> failures;
    // Filled when G is within the oracle limits.
    std::optional<int> omega;
    std::optional<bool> hypothesis_holds; // omega <= k

    void fail(std::string why)
    {
        pass = false;
        failures.push_back(std::move(why));
    }
};

// True when `embedding` maps T injectively onto an induced copy of T.
bool is_induced_copy(const Graph& g, const TreePattern& t, const std::vector<int>& embedding,
                     std::string* why = nullptr);

// Rechecks an outcome from scratch. Certificates are checked against
// |set| (or w(set) when the certificate is weighted and `weights` is given).
ValidationReport validate_outcome(const Graph& g, const TreePattern& t, int k,
                                  const SearchOutcome& outcome,
                                  const Weighting* weights = nullptr,
                                  const OracleLimits& limits = {});

} // namespace treefree
