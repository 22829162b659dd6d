#include "treefree/treefree.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;

struct Failure {
    int code;
    std::string message;
};

struct Owned {
    char* p = nullptr;
    ~Owned() { tf_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

using GraphPtr = std::unique_ptr<tf_graph, decltype(&tf_graph_free)>;
using TreePtr = std::unique_ptr<tf_tree, decltype(&tf_tree_free)>;

void check(tf_status s)
{
    if (s == TF_OK)
        return;
    bool usage = s == TF_ERR_INPUT || s == TF_ERR_NULL || s == TF_ERR_CONTRACT || s == TF_ERR_PARAMETER;
    throw Failure{usage ? exit_usage : exit_invalid, tf_last_error()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Failure{exit_usage, "cannot open " + path};
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct GraphSource {
    std::string input;
    std::string instance;
    std::string format = "dimacs";
    std::uint64_t seed = 0;

    void add(CLI::App* app)
    {
        app->add_option("--input", input, "graph file");
        app->add_option("--instance", instance, "generator text, e.g. cycle:7");
        app->add_option("--format", format, "dimacs or json")->check(CLI::IsMember({"dimacs", "json"}));
        app->add_option("--seed", seed, "seed for random generators");
    }

    GraphPtr load() const
    {
        tf_graph* g = nullptr;
        if (!input.empty() == !instance.empty())
            throw Failure{exit_usage, "give exactly one of --input and --instance"};
        if (!input.empty())
            check(tf_graph_read(slurp(input).c_str(), format.c_str(), &g));
        else
            check(tf_graph_generate(with_seed(instance).c_str(), &g));
        return GraphPtr(g, tf_graph_free);
    }

    std::string with_seed(const std::string& spec) const
    {
        if (seed == 0 || spec.find('@') != std::string::npos)
            return spec;
        return spec + "@" + std::to_string(seed);
    }
};

TreePtr load_tree(const std::string& text)
{
    tf_tree* t = nullptr;
    check(tf_tree_parse(text.c_str(), &t));
    return TreePtr(t, tf_tree_free);
}

bool reports_valid(const std::string& json)
{
    return json.find("\"valid\":true") != std::string::npos;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stable sets in graphs without an induced tree and a large clique"};
    app.require_subcommand(1);

    std::string tree = "path:4";
    int k = 2;
    bool force = false;
    std::string engine = "sparse";
    std::string weights = "uniform";
    int rounds = 64;
    bool timing = false;
    bool with_frac = false;
    std::string output;

    GraphSource gen_src, free_src, stable_src, frac_src, oracle_src;
    std::string gen_spec;

    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("spec", gen_spec, "generator text, e.g. kneser:5,2")->required();
    gen->add_option("--format", gen_src.format, "dimacs or json")->check(CLI::IsMember({"dimacs", "json"}));
    gen->add_option("--seed", gen_src.seed, "seed for random generators");

    auto* check_free = app.add_subcommand("check-free", "search for an induced copy of the tree");
    free_src.add(check_free);
    check_free->add_option("--tree", tree, "tree pattern");

    auto* stable = app.add_subcommand("stable", "find a stable set or a certificate that the hypotheses fail");
    stable_src.add(stable);
    stable->add_option("--tree", tree, "tree pattern");
    stable->add_option("--k", k, "clique bound");
    stable->add_option("--engine", engine, "sparse or multibroom")->check(CLI::IsMember({"sparse", "multibroom"}));
    stable->add_flag("--force-sparsify", force, "run the forced-parameter iteration");
    stable->add_option("--weights", weights, "uniform or random@<seed>");

    auto* frac = app.add_subcommand("frac", "build a fractional colouring");
    frac_src.add(frac);
    frac->add_option("--tree", tree, "multibroom pattern");
    frac->add_option("--k", k, "clique bound");
    frac->add_option("--rounds", rounds, "number of stable sets");

    auto* oracle = app.add_subcommand("oracle", "exact alpha, omega and fractional chromatic number");
    oracle_src.add(oracle);
    oracle->add_flag("--frac", with_frac, "also solve the fractional chromatic LP");

    std::string config;
    auto* bench = app.add_subcommand("bench", "run a batch config and write JSON lines");
    bench->add_option("config", config, "batch config file")->required();
    bench->add_flag("--timing", timing, "record wall time per run");
    bench->add_option("--output", output, "write reports here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gen) {
            tf_graph* raw = nullptr;
            check(tf_graph_generate(gen_src.with_seed(gen_spec).c_str(), &raw));
            GraphPtr g(raw, tf_graph_free);
            Owned text;
            check(tf_graph_write(g.get(), gen_src.format.c_str(), &text.p));
            std::cout << text.str();
            if (gen_src.format == "json")
                std::cout << "\n";
            return exit_ok;
        }
        if (*check_free) {
            auto g = free_src.load();
            auto t = load_tree(tree);
            int found = 0;
            Owned json;
            check(tf_find_induced_tree(g.get(), t.get(), &found, &json.p));
            std::cout << "{\"free\":" << (found ? "false" : "true") << ",\"witness\":" << json.str() << "}\n";
            return exit_ok;
        }
        if (*stable) {
            auto g = stable_src.load();
            auto t = load_tree(tree);
            Owned report;
            if (engine == "sparse")
                check(tf_stable_sparse(g.get(), t.get(), k, force ? 1 : 0, &report.p));
            else
                check(tf_stable_multibroom(g.get(), t.get(), k, weights.c_str(), &report.p));
            std::cout << report.str() << "\n";
            return reports_valid(report.str()) ? exit_ok : exit_invalid;
        }
        if (*frac) {
            auto g = frac_src.load();
            auto t = load_tree(tree);
            Owned json;
            check(tf_frac_colouring(g.get(), t.get(), k, rounds, &json.p));
            std::cout << json.str() << "\n";
            return reports_valid(json.str()) ? exit_ok : exit_invalid;
        }
        if (*oracle) {
            auto g = oracle_src.load();
            Owned json;
            check(tf_oracle_alpha_omega(g.get(), &json.p));
            std::cout << json.str() << "\n";
            if (with_frac) {
                Owned f;
                check(tf_oracle_frac_chromatic(g.get(), &f.p));
                std::cout << f.str() << "\n";
            }
            return exit_ok;
        }
        if (*bench) {
            Owned lines;
            int all_valid = 0;
            check(tf_run_batch(slurp(config).c_str(), timing ? 1 : 0, &lines.p, &all_valid));
            if (output.empty()) {
                std::cout << lines.str();
            } else {
                std::ofstream out(output);
                out << lines.str();
                if (!out)
                    throw Failure{exit_invalid, "cannot write " + output};
            }
            return all_valid ? exit_ok : exit_invalid;
        }
    } catch (const Failure& f) {
        std::cerr << "treefree: " << f.message << "\n";
        return f.code;
    }
    return exit_usage;
}
