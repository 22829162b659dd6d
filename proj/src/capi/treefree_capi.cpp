#include "treefree/treefree.h"

#include "treefree/errors.hpp"
#include "treefree/fraccolour.hpp"
#include "treefree/generators.hpp"
#include "treefree/guarantee.hpp"
#include "treefree/oracle.hpp"
#include "treefree/report.hpp"
#include "treefree/tree.hpp"

#include <cstring>
#include <sstream>
#include <string>

struct tf_graph {
    treefree::Graph g;
};

struct tf_tree {
    treefree::TreePattern t;
};

namespace {

thread_local std::string last_error;

tf_status status_of(std::string_view kind)
{
    if (kind == "input")
        return TF_ERR_INPUT;
    if (kind == "contract")
        return TF_ERR_CONTRACT;
    if (kind == "hypothesis")
        return TF_ERR_HYPOTHESIS;
    if (kind == "oracle_refusal")
        return TF_ERR_ORACLE_REFUSAL;
    if (kind == "parameter")
        return TF_ERR_PARAMETER;
    if (kind == "invariant")
        return TF_ERR_INVARIANT;
    return TF_ERR_INTERNAL;
}

char* copy_out(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
tf_status guarded(F&& body)
{
    try {
        last_error.clear();
        return body();
    } catch (const std::exception& e) {
        last_error = e.what();
        return status_of(treefree::error_kind(e));
    } catch (...) {
        last_error = "unknown error";
        return TF_ERR_INTERNAL;
    }
}

tf_status null_arg(const char* what)
{
    last_error = std::string("null argument: ") + what;
    return TF_ERR_NULL;
}

// Engine errors inside a report become the call status.
tf_status finish_report(const treefree::Json& report, char** out)
{
    *out = copy_out(report.dump());
    if (report.contains("error_kind")) {
        last_error = report["error"].get<std::string>();
        return status_of(report["error_kind"].get<std::string>());
    }
    return TF_OK;
}

} // namespace

extern "C" {

const char* tf_last_error(void)
{
    return last_error.c_str();
}

const char* tf_version(void)
{
    return "1.0.0";
}

void tf_string_free(char* s)
{
    delete[] s;
}

tf_status tf_graph_create(int n, const int* edges, size_t edge_count, tf_graph** out)
{
    if (!out || (edge_count > 0 && !edges))
        return null_arg("edges or out");
    return guarded([&] {
        treefree::GraphBuilder b(n);
        for (size_t i = 0; i < edge_count; ++i)
            b.add_edge(edges[2 * i], edges[2 * i + 1]);
        *out = new tf_graph{std::move(b).build()};
        return TF_OK;
    });
}

tf_status tf_graph_generate(const char* spec, tf_graph** out)
{
    if (!spec || !out)
        return null_arg("spec or out");
    return guarded([&] {
        *out = new tf_graph{treefree::generate(treefree::parse_instance(spec))};
        return TF_OK;
    });
}

tf_status tf_graph_read(const char* text, const char* format, tf_graph** out)
{
    if (!text || !format || !out)
        return null_arg("text, format or out");
    return guarded([&] {
        std::string f = format;
        if (f == "dimacs") {
            std::istringstream in(text);
            *out = new tf_graph{treefree::read_dimacs(in)};
        } else if (f == "json") {
            *out = new tf_graph{treefree::graph_from_json(treefree::Json::parse(text))};
        } else {
            throw treefree::InputError("unknown format '" + f + "'");
        }
        return TF_OK;
    });
}

tf_status tf_graph_write(const tf_graph* g, const char* format, char** out)
{
    if (!g || !format || !out)
        return null_arg("graph, format or out");
    return guarded([&] {
        std::string f = format;
        if (f == "dimacs") {
            std::ostringstream s;
            treefree::write_dimacs(s, g->g);
            *out = copy_out(s.str());
        } else if (f == "json") {
            *out = copy_out(treefree::graph_json(g->g).dump());
        } else {
            throw treefree::InputError("unknown format '" + f + "'");
        }
        return TF_OK;
    });
}

void tf_graph_free(tf_graph* g)
{
    delete g;
}

int tf_graph_order(const tf_graph* g)
{
    return g ? g->g.order() : -1;
}

size_t tf_graph_edge_count(const tf_graph* g)
{
    return g ? g->g.edge_count() : 0;
}

tf_status tf_tree_parse(const char* text, tf_tree** out)
{
    if (!text || !out)
        return null_arg("text or out");
    return guarded([&] {
        *out = new tf_tree{treefree::parse_tree(text)};
        return TF_OK;
    });
}

void tf_tree_free(tf_tree* t)
{
    delete t;
}

int tf_tree_order(const tf_tree* t)
{
    return t ? t->t.order() : -1;
}

int tf_tree_radius(const tf_tree* t)
{
    return t ? t->t.radius() : -1;
}

tf_status tf_find_induced_tree(const tf_graph* g, const tf_tree* t, int* found, char** json)
{
    if (!g || !t || !found || !json)
        return null_arg("graph, tree, found or json");
    return guarded([&] {
        auto w = treefree::find_induced_tree(g->g, t->t);
        *found = w ? 1 : 0;
        *json = copy_out(w ? treefree::Json{{"embedding", w->embedding}}.dump() : "null");
        return TF_OK;
    });
}

tf_status tf_oracle_alpha_omega(const tf_graph* g, char** json)
{
    if (!g || !json)
        return null_arg("graph or json");
    return guarded([&] {
        auto a = treefree::exact_alpha(g->g);
        auto w = treefree::exact_omega(g->g);
        treefree::Json j{{"alpha", a.value}, {"set", treefree::set_json(a.set)}, {"omega", w.value},
                         {"clique", treefree::set_json(w.set)}};
        *json = copy_out(j.dump());
        return TF_OK;
    });
}

tf_status tf_oracle_frac_chromatic(const tf_graph* g, char** json)
{
    if (!g || !json)
        return null_arg("graph or json");
    return guarded([&] {
        auto f = treefree::exact_frac_chromatic(g->g);
        treefree::Json j{{"value", treefree::rational_text(f.value)},
                         {"dual_value", treefree::rational_text(f.dual_value)},
                         {"maximal_stable_sets", f.sets.size()}};
        *json = copy_out(j.dump());
        return TF_OK;
    });
}

tf_status tf_stable_sparse(const tf_graph* g, const tf_tree* t, int k, int force, char** report)
{
    if (!g || !t || !report)
        return null_arg("graph, tree or report");
    return guarded([&] {
        treefree::RunConfig rc;
        rc.instance = "input";
        rc.tree = t->t.label();
        rc.k = k;
        rc.mode = force ? "force" : "default";
        return finish_report(treefree::run_one(g->g, rc, false), report);
    });
}

tf_status tf_stable_multibroom(const tf_graph* g, const tf_tree* t, int k, const char* weights, char** report)
{
    if (!g || !t || !report)
        return null_arg("graph, tree or report");
    return guarded([&] {
        treefree::RunConfig rc;
        rc.instance = "input";
        rc.tree = t->t.label();
        rc.k = k;
        rc.engine = "multibroom";
        rc.weights = weights ? weights : "uniform";
        return finish_report(treefree::run_one(g->g, rc, false), report);
    });
}

tf_status tf_frac_colouring(const tf_graph* g, const tf_tree* t, int k, int rounds, char** json)
{
    if (!g || !t || !json)
        return null_arg("graph, tree or json");
    return guarded([&] {
        if (!t->t.multibroom())
            throw treefree::ParameterRefusal("tree is not a multibroom");
        auto run = treefree::build_frac_colouring(g->g, *t->t.multibroom(), k, rounds);
        treefree::Json j;
        if (auto* fc = std::get_if<treefree::FracColouring>(&run.outcome)) {
            j = treefree::frac_json(*fc);
            auto check = treefree::verify_frac_colouring(g->g, *fc);
            j["valid"] = check.pass;
            j["failures"] = check.failures;
            if (check.ratio)
                j["ratio"] = treefree::rational_text(*check.ratio);
            if (check.frac_chromatic)
                j["frac_chromatic"] = treefree::rational_text(*check.frac_chromatic);
        } else if (auto* w = std::get_if<treefree::TreeWitness>(&run.outcome)) {
            j = treefree::outcome_json(*w);
        } else {
            j = treefree::outcome_json(std::get<treefree::HypothesisViolation>(run.outcome));
        }
        j["constant"] = treefree::rational_text(run.constant);
        *json = copy_out(j.dump());
        return TF_OK;
    });
}

tf_status tf_sparse_guarantee(long n, long max_degree, const tf_tree* t, int k, char** json)
{
    if (!t || !json)
        return null_arg("tree or json");
    return guarded([&] {
        auto s = treefree::sparse_guarantee(n, max_degree, t->t, k);
        treefree::Json j{{"c", s.constants.c.get_str()},
                         {"q", s.constants.q},
                         {"r", s.constants.r},
                         {"b", treefree::rational_text(s.b)},
                         {"exponent", treefree::rational_text(s.exponent)},
                         {"fraction", treefree::rational_text(s.fraction)},
                         {"bound", treefree::rational_text(s.bound)}};
        *json = copy_out(j.dump());
        return TF_OK;
    });
}

tf_status tf_run_batch(const char* config_json, int timing, char** jsonl, int* all_valid)
{
    if (!config_json || !jsonl || !all_valid)
        return null_arg("config, jsonl or all_valid");
    return guarded([&] {
        auto config = treefree::parse_batch(treefree::Json::parse(config_json));
        config.timing = timing != 0;
        auto result = treefree::run_batch(config);
        std::string out;
        for (const auto& r : result.reports)
            out += r.dump() + "\n";
        out += result.summary.dump() + "\n";
        *jsonl = copy_out(out);
        *all_valid = result.pass ? 1 : 0;
        return TF_OK;
    });
}

} // extern "C"
