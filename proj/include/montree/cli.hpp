#pragma once

#include "montree/json_out.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace montree {

struct RunConfig {
    std::string command; // count | bound | entropy | sample | lemmas | d0 | search | forest
    std::string graph_spec;
    std::string tree_spec;
    std::uint64_t seed = 0;
    std::uint64_t max_embeddings = kDefaultEmbeddingBudget; // env MONTREE_MAX_EMBEDDINGS
    std::uint64_t max_nodes = kDefaultNodeBudget;           // env MONTREE_MAX_NODES
    double tol = 1e-9;
    double tol_identity = 1e-12;
    std::string format = "json"; // json | csv | text

    int walks = -1;     // count: also report walks of this length
    int samples = 1000; // sample
    int t_param = 0;    // d0
    std::string grid;   // d0: optional grid spec string
    int n_param = -1, m_param = -1; // search / forest(split)
    int k_param = -1, d_param = -1; // forest
};

// Applies MONTREE_MAX_EMBEDDINGS / MONTREE_MAX_NODES when set.
void apply_env_budgets(RunConfig& cfg);

// Dispatches to the module named by cfg.command; the returned document
// embeds the config and a "verdict" field for mathematical outcomes.
Json run_to_json(const RunConfig& cfg);

// Writes one report document in the configured format. Exit status: 0 ok,
// 2 validation error, 3 unreadable input, 4 budget exceeded.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace montree
