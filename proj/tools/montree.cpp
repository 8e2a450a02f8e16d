#include "montree/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"montree: exact tree-embedding counts, the greedy embedding "
                 "distribution, and its entropy decomposition"};
    app.require_subcommand(1);

    montree::RunConfig cfg;
    montree::apply_env_budgets(cfg);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "random seed (default 0)");
        sub->add_option("--max-embeddings", cfg.max_embeddings,
                        "embedding budget for exact distributions");
        sub->add_option("--max-nodes", cfg.max_nodes, "node budget for backtracking counts");
        sub->add_option("--tol", cfg.tol, "residual tolerance (default 1e-9)");
        sub->add_option("--tol-identity", cfg.tol_identity,
                        "identity residual tolerance (default 1e-12)");
        sub->add_option("--format", cfg.format, "output format: json|csv|text");
    };
    auto add_graph = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--graph", cfg.graph_spec,
                                    "graph: clique_union:k=..,s=.. | complete_bipartite:a=..,b=.. "
                                    "| cycle:n=.. | path:n=.. | file:PATH");
        if (required) opt->required();
    };
    auto add_tree = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--tree", cfg.tree_spec,
                                    "tree: path:t=.. | star:leaves=.. | catalog:n=..,index=.. "
                                    "| file:PATH");
        if (required) opt->required();
    };

    auto* count = app.add_subcommand("count", "exact |Mon|, |Hom| and walk counts");
    add_graph(count, true);
    add_tree(count, false);
    count->add_option("--walks", cfg.walks, "also count walks of this length");
    add_common(count);

    auto* bound = app.add_subcommand("bound", "main bound n(d)_t with equality classification");
    add_graph(bound, true);
    add_tree(bound, true);
    add_common(bound);

    auto* entropy = app.add_subcommand("entropy", "entropy decomposition of the greedy embedding");
    add_graph(entropy, true);
    add_tree(entropy, true);
    add_common(entropy);

    auto* sample = app.add_subcommand("sample", "draw greedy embeddings");
    add_graph(sample, true);
    add_tree(sample, true);
    sample->add_option("--samples", cfg.samples, "number of draws (default 1000)");
    add_common(sample);

    auto* lemmas = app.add_subcommand("lemmas", "twist/reverse/Jensen checks on an instance");
    add_graph(lemmas, true);
    add_tree(lemmas, true);
    add_common(lemmas);

    auto* d0 = app.add_subcommand("d0", "empirical degree threshold for the Sigma inequality");
    d0->add_option("--t", cfg.t_param, "tree edge count")->required();
    d0->add_option("--grid", cfg.grid, "geom:lo=..,hi=..,per_decade=..");
    add_common(d0);

    auto* search = app.add_subcommand("search", "minimum |Mon(T,.)| over all (n,m) graphs");
    search->add_option("--n", cfg.n_param, "vertex count (<= 8)")->required();
    search->add_option("--m", cfg.m_param, "edge count")->required();
    add_tree(search, true);
    add_common(search);

    auto* forest = app.add_subcommand("forest", "forest counterexample comparisons");
    forest->add_option("--k", cfg.k_param, "number of disjoint edges")->required();
    forest->add_option("--n", cfg.n_param, "vertex count")->required();
    forest->add_option("--d", cfg.d_param, "degree parameter (clique union vs bipartite)");
    forest->add_option("--m", cfg.m_param, "edge count (split-graph minimum check)");
    add_common(forest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return montree::run(cfg, std::cout, std::cerr);
}
