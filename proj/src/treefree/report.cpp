#include "treefree/report.hpp"

#include "treefree/errors.hpp"
#include "treefree/generators.hpp"
#include "treefree/multibroom.hpp"
#include "treefree/oracle.hpp"
#include "treefree/sparsify.hpp"
#include "treefree/validate.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <thread>

namespace treefree {

std::string rational_text(const Rational& r)
{
    return r.get_str();
}

const char* error_kind(const std::exception& e)
{
    if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const Json::exception*>(&e))
        return "input";
    if (dynamic_cast<const HypothesisFailure*>(&e))
        return "hypothesis";
    if (dynamic_cast<const ContractViolation*>(&e))
        return "contract";
    if (dynamic_cast<const OracleRefusal*>(&e))
        return "oracle_refusal";
    if (dynamic_cast<const ParameterRefusal*>(&e))
        return "parameter";
    if (dynamic_cast<const InvariantViolation*>(&e))
        return "invariant";
    return "internal";
}

Json graph_json(const Graph& g)
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return Json{{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j)
{
    int n = j.at("n").get<int>();
    if (n < 0)
        throw InputError("negative vertex count");
    GraphBuilder b(n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("edges must be [u, v] pairs");
        b.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return std::move(b).build();
}

Json set_json(const VertexSet& s)
{
    return Json(s.to_vector());
}

VertexSet set_from_json(const Json& j, int n)
{
    VertexSet s(static_cast<std::size_t>(n));
    for (const auto& x : j) {
        int v = x.get<int>();
        if (v < 0 || v >= n)
            throw InputError("vertex " + std::to_string(v) + " out of range");
        s.insert(v);
    }
    return s;
}

Json outcome_json(const SearchOutcome& outcome)
{
    Json j;
    j["kind"] = outcome_kind(outcome);
    if (const auto* c = std::get_if<StableSetCert>(&outcome)) {
        j["set"] = set_json(c->set);
        j["claimed_bound"] = rational_text(c->claimed_bound);
        j["mode"] = c->mode;
        j["weighted"] = c->weighted;
    } else if (const auto* w = std::get_if<TreeWitness>(&outcome)) {
        j["embedding"] = w->embedding;
    } else {
        j["clique"] = std::get<HypothesisViolation>(outcome).clique;
    }
    return j;
}

SearchOutcome outcome_from_json(const Json& j, int n)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "stable_set")
        return StableSetCert{set_from_json(j.at("set"), n), parse_rational(j.at("claimed_bound").get<std::string>()),
                             j.at("mode").get<std::string>(), j.at("weighted").get<bool>()};
    if (kind == "tree_witness")
        return TreeWitness{j.at("embedding").get<std::vector<int>>()};
    if (kind == "hypothesis_violation")
        return HypothesisViolation{j.at("clique").get<std::vector<int>>()};
    throw InputError("unknown outcome kind '" + kind + "'");
}

Json frac_json(const FracColouring& fc)
{
    Json sets = Json::array();
    for (const auto& s : fc.sets)
        sets.push_back(set_json(s));
    return Json{{"a", fc.a}, {"b", fc.b}, {"sets", sets}};
}

FracColouring frac_from_json(const Json& j, int n)
{
    FracColouring fc;
    fc.a = j.at("a").get<int>();
    fc.b = j.at("b").get<int>();
    fc.cover.assign(static_cast<std::size_t>(n), 0);
    for (const auto& s : j.at("sets")) {
        fc.sets.push_back(set_from_json(s, n));
        for (int v : fc.sets.back())
            ++fc.cover[static_cast<std::size_t>(v)];
    }
    return fc;
}

Weighting make_weights(const Graph& g, const std::string& spec)
{
    if (spec == "uniform")
        return uniform_weighting(g);
    if (spec.rfind("random@", 0) == 0) {
        Rng rng(std::stoull(spec.substr(7)));
        Weighting w;
        for (int v = 0; v < g.order(); ++v) {
            long p = static_cast<long>(rng.below(100)) + 1;
            long q = static_cast<long>(rng.below(10)) + 1;
            w.push_back(make_rational(p, q));
        }
        return w;
    }
    throw InputError("unknown weighting '" + spec + "'");
}

BatchConfig parse_batch(const Json& j)
{
    BatchConfig config;
    if (j.contains("workers"))
        config.workers = j.at("workers").get<int>();
    if (config.workers < 1)
        throw InputError("workers must be at least 1");
    if (j.contains("runs"))
        for (const auto& r : j.at("runs")) {
            RunConfig rc;
            rc.instance = r.at("instance").get<std::string>();
            rc.tree = r.at("tree").get<std::string>();
            rc.k = r.at("k").get<int>();
            rc.engine = r.value("engine", rc.engine);
            rc.mode = r.value("mode", rc.mode);
            rc.weights = r.value("weights", rc.weights);
            if (rc.engine != "sparse" && rc.engine != "multibroom")
                throw InputError("unknown engine '" + rc.engine + "'");
            if (rc.mode != "default" && rc.mode != "force")
                throw InputError("unknown mode '" + rc.mode + "'");
            config.runs.push_back(std::move(rc));
        }
    return config;
}

namespace {

void validate_into(Json& report, const Graph& g, const TreePattern& t, int k, const SearchOutcome& outcome,
                   const Weighting* weights)
{
    auto check = validate_outcome(g, t, k, outcome, weights);
    auto again = validate_outcome(g, t, k, outcome_from_json(outcome_json(outcome), g.order()), weights);
    Json failures = check.failures;
    for (const auto& f : again.failures)
        failures.push_back("after round trip: " + f);
    report["valid"] = check.pass && again.pass;
    report["failures"] = failures;
    if (check.omega)
        report["omega"] = *check.omega;
    if (check.hypothesis_holds)
        report["hypothesis_holds"] = *check.hypothesis_holds;
}

} // namespace

Json run_one(const RunConfig& config, bool timing)
{
    Json report{{"instance", config.instance}};
    try {
        Graph g = generate(parse_instance(config.instance));
        return run_one(g, config, timing);
    } catch (const std::exception& e) {
        report["valid"] = false;
        report["error"] = e.what();
        report["error_kind"] = error_kind(e);
        return report;
    }
}

Json run_one(const Graph& g, const RunConfig& config, bool timing)
{
    Json report{{"instance", config.instance}, {"n", g.order()}, {"edges", g.edge_count()},
                {"tree", config.tree},         {"k", config.k},  {"engine", config.engine}};
    auto start = std::chrono::steady_clock::now();
    try {
        TreePattern t = parse_tree(config.tree);
        if (g.order() <= OracleLimits{}.alpha_max_n)
            report["alpha"] = exact_alpha(g).value;
        if (config.engine == "sparse") {
            SparseOptions opts;
            opts.force = config.mode == "force";
            report["mode"] = config.mode;
            auto run = stable_set_sparse(g, t, config.k, opts);
            report["outcome"] = outcome_json(run.outcome);
            report["branch"] = run.branch;
            report["rounds"] = run.rounds;
            report["round_limit"] = run.round_limit;
            report["round_p"] = run.round_p;
            if (run.guarantee)
                report["guarantee"] = {{"c", run.guarantee->constants.c.get_str()},
                                       {"b", rational_text(run.guarantee->b)},
                                       {"bound", rational_text(run.guarantee->bound)}};
            if (run.round_limit > 0 && run.rounds > run.round_limit)
                throw InvariantViolation("round bound exceeded");
            validate_into(report, g, t, config.k, run.outcome, nullptr);
        } else if (config.engine == "multibroom") {
            if (!t.multibroom())
                throw ParameterRefusal("tree '" + config.tree + "' is not a multibroom");
            Weighting w = make_weights(g, config.weights);
            report["weights"] = config.weights;
            auto run = weighted_stable_multibroom(g, w, *t.multibroom(), config.k);
            report["outcome"] = outcome_json(run.outcome);
            report["constant"] = rational_text(run.constant);
            report["growth_rounds"] = run.stats.rounds;
            report["absorptions"] = run.stats.absorptions;
            if (const auto* c = std::get_if<StableSetCert>(&run.outcome))
                report["set_weight"] = rational_text(weight_of(w, c->set));
            validate_into(report, g, t, config.k, run.outcome, &w);
        } else {
            throw InputError("unknown engine '" + config.engine + "'");
        }
    } catch (const std::exception& e) {
        report["valid"] = false;
        report["error"] = e.what();
        report["error_kind"] = error_kind(e);
    }
    if (timing)
        report["time_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

BatchResult run_batch(const BatchConfig& config)
{
    BatchResult out;
    out.reports.resize(config.runs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < config.runs.size(); i = next++)
            out.reports[i] = run_one(config.runs[i], config.timing);
    };
    std::vector<std::thread> pool;
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(config.workers), config.runs.size());
    for (std::size_t i = 1; i < workers; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    std::size_t passed = 0;
    std::map<std::string, std::size_t> kinds;
    std::optional<Rational> worst;
    Rational ratio_sum = 0;
    std::size_t ratio_count = 0;
    Json failed = Json::array();
    for (std::size_t i = 0; i < out.reports.size(); ++i) {
        const auto& r = out.reports[i];
        if (r.value("valid", false))
            ++passed;
        else
            failed.push_back(i);
        if (r.contains("outcome")) {
            const auto& o = r["outcome"];
            ++kinds[o["kind"].get<std::string>()];
            if (o["kind"] == "stable_set" && r.contains("alpha") && r["alpha"].get<int>() > 0) {
                Rational q = make_rational(static_cast<long>(o["set"].size()), r["alpha"].get<long>());
                if (!worst || q < *worst)
                    worst = q;
                ratio_sum += q;
                ++ratio_count;
            }
        }
    }
    out.pass = passed == out.reports.size();
    out.summary = {{"summary", true},  {"runs", out.reports.size()}, {"passed", passed},
                   {"failed", failed}, {"outcomes", kinds}};
    if (worst) {
        out.summary["min_size_over_alpha"] = rational_text(*worst);
        out.summary["mean_size_over_alpha"] = rational_text(ratio_sum / static_cast<long>(ratio_count));
    }
    return out;
}

} // namespace treefree
