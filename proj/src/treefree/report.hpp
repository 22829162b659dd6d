#pragma once

#include "treefree/fraccolour.hpp"
#include "treefree/graph.hpp"
#include "treefree/outcome.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace treefree {

using Json = nlohmann::json;

std::string rational_text(const Rational& r);

// "input", "contract", "hypothesis", "oracle_refusal", "parameter",
// "invariant" or "internal".
const char* error_kind(const std::exception& e);

// {"n": int, "edges": [[u, v], ...]}
Json graph_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json set_json(const VertexSet& s);
VertexSet set_from_json(const Json& j, int n);

// {"kind": ..., plus "set" / "embedding" / "clique"} and for certificates
// "claimed_bound", "mode", "weighted".
Json outcome_json(const SearchOutcome& outcome);
SearchOutcome outcome_from_json(const Json& j, int n);

// {"a": int, "b": int, "sets": [[vertex indices]]}
Json frac_json(const FracColouring& fc);
FracColouring frac_from_json(const Json& j, int n);

// "random@seed" weights are p/q with p in 1..100 and q in 1..10.
Weighting make_weights(const Graph& g, const std::string& spec);

struct RunConfig {
    std::string instance;      // generator text, see parse_instance
    std::string tree;          // pattern text, see parse_tree
    int k = 2;
    std::string engine = "sparse";  // sparse | multibroom
    std::string mode = "default";   // default | force (sparse engine)
    std::string weights = "uniform"; // uniform | random@seed (multibroom engine)
};

struct BatchConfig {
    std::vector<RunConfig> runs;
    int workers = 1;
    bool timing = false;
};

// {"workers": n, "runs": [{"instance","tree","k","engine","mode","weights"}]}
BatchConfig parse_batch(const Json& j);

// Runs one configuration, validates the outcome, re-validates it after a
// JSON round trip and returns the report. Never throws on engine errors;
// they are recorded with "valid": false.
Json run_one(const RunConfig& config, bool timing);
Json run_one(const Graph& g, const RunConfig& config, bool timing);

struct BatchResult {
    std::vector<Json> reports; // in run order
    Json summary;
    bool pass = true;
};

BatchResult run_batch(const BatchConfig& config);

} // namespace treefree
