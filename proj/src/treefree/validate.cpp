#include "treefree/validate.hpp"

#include <algorithm>

namespace treefree {

bool is_induced_copy(const Graph& g, const TreePattern& t, const std::vector<int>& embedding,
                     std::string* why)
{
    auto reject = [&](std::string msg) {
        if (why)
            *why = std::move(msg);
        return false;
    };
    if (static_cast<int>(embedding.size()) != t.order())
        return reject("embedding has " + std::to_string(embedding.size()) + " entries for a " +
                      std::to_string(t.order()) + "-vertex tree");
    VertexSet seen = g.empty_set();
    for (int v : embedding) {
        if (v < 0 || v >= g.order())
            return reject("embedding maps outside the graph");
        if (seen.contains(v))
            return reject("embedding is not injective at vertex " + std::to_string(v));
        seen.insert(v);
    }
    for (int a = 0; a < t.order(); ++a)
        for (int b = a + 1; b < t.order(); ++b) {
            bool in_tree = t.adjacent(a, b);
            bool in_graph = g.adjacent(embedding[static_cast<std::size_t>(a)],
                                       embedding[static_cast<std::size_t>(b)]);
            if (in_tree != in_graph)
                return reject("tree vertices " + std::to_string(a) + "," + std::to_string(b) +
                              (in_tree ? " are adjacent but their images are not"
                                       : " are nonadjacent but their images are adjacent"));
        }
    return true;
}

ValidationReport validate_outcome(const Graph& g, const TreePattern& t, int k,
                                  const SearchOutcome& outcome, const Weighting* weights,
                                  const OracleLimits& limits)
{
    ValidationReport report;
    if (g.order() <= limits.alpha_max_n) {
        report.omega = exact_omega(g, limits).value;
        report.hypothesis_holds = *report.omega <= k;
    }

    if (const auto* cert = std::get_if<StableSetCert>(&outcome)) {
        if (cert->set.universe() != static_cast<std::size_t>(g.order())) {
            report.fail("certificate set has the wrong vertex universe");
            return report;
        }
        if (!is_stable(g, cert->set))
            report.fail("certificate set is not stable");
        if (g.order() > 0 && cert->set.empty())
            report.fail("certificate set is empty on a nonempty graph");
        if (cert->claimed_bound > 0) {
            if (cert->weighted) {
                if (!weights)
                    report.fail("weighted certificate without weights");
                else if (weight_of(*weights, cert->set) < cert->claimed_bound)
                    report.fail("w(S) = " + weight_of(*weights, cert->set).get_str() +
                                " is below the claimed bound " + cert->claimed_bound.get_str());
            } else if (BigInt(static_cast<unsigned long>(cert->set.size())) < ceil_of(cert->claimed_bound)) {
                report.fail("|S| = " + std::to_string(cert->set.size()) +
                            " is below the ceiling of the claimed bound " + cert->claimed_bound.get_str());
            }
        }
    } else if (const auto* wit = std::get_if<TreeWitness>(&outcome)) {
        std::string why;
        if (!is_induced_copy(g, t, wit->embedding, &why))
            report.fail("witness rejected: " + why);
    } else {
        const auto& viol = std::get<HypothesisViolation>(outcome);
        auto clique = viol.clique;
        std::sort(clique.begin(), clique.end());
        bool in_range = std::all_of(clique.begin(), clique.end(),
                                    [&](int v) { return v >= 0 && v < g.order(); });
        if (static_cast<int>(clique.size()) <= k)
            report.fail("reported clique has only " + std::to_string(clique.size()) + " vertices");
        else if (!in_range || !is_clique(g, clique))
            report.fail("reported clique is not a clique of G");
    }
    return report;
}

} // namespace treefree
