#include "montree/cli.hpp"
#include "montree/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace montree;

TEST_CASE("bound command on the clique-union equality case") {
    RunConfig cfg;
    cfg.command = "bound";
    cfg.graph_spec = "clique_union:k=3,s=4";
    cfg.tree_spec = "path:t=2";
    Json doc = run_to_json(cfg);
    CHECK(doc["mon_count"] == "72");
    CHECK(doc["bound"] == "72");
    CHECK(doc["equality"] == true);
    CHECK(doc["equality_classification"] == "d_regular");
    CHECK(doc["verdict"] == "equality");
    CHECK(doc["config"]["graph"] == "clique_union:k=3,s=4");
}

TEST_CASE("entropy command reports zero slack on clique unions") {
    RunConfig cfg;
    cfg.command = "entropy";
    cfg.graph_spec = "clique_union:k=2,s=5";
    cfg.tree_spec = "path:t=3";
    Json doc = run_to_json(cfg);
    double h = doc["h_total"].get<double>();
    CHECK(std::abs(h - std::log(10.0 * 4 * 3 * 2)) <= 1e-9);
    CHECK(std::abs(doc["slack"].get<double>()) <= 1e-9);
    CHECK(doc["verdict"] == "ok");
}

TEST_CASE("count command with walks") {
    RunConfig cfg;
    cfg.command = "count";
    cfg.graph_spec = "cycle:n=5";
    cfg.walks = 3;
    Json doc = run_to_json(cfg);
    CHECK(doc["walks"] == "40");
    CHECK(doc["nb_walks"] == "10"); // on a cycle every nb walk keeps its direction
}

TEST_CASE("sample command is seed-deterministic") {
    RunConfig cfg;
    cfg.command = "sample";
    cfg.graph_spec = "clique_union:k=1,s=4";
    cfg.tree_spec = "path:t=2";
    cfg.samples = 200;
    cfg.seed = 9;
    Json a = run_to_json(cfg);
    Json b = run_to_json(cfg);
    CHECK(a == b);
    CHECK(a["samples"] == 200);
    CHECK(a["dead_ends"] == 0);
}

TEST_CASE("run() output is byte-identical across invocations") {
    RunConfig cfg;
    cfg.command = "lemmas";
    cfg.graph_spec = "clique_union:k=2,s=4";
    cfg.tree_spec = "path:t=3";
    std::ostringstream out1, out2, err;
    CHECK(run(cfg, out1, err) == 0);
    CHECK(run(cfg, out2, err) == 0);
    CHECK(out1.str() == out2.str());
    CHECK_FALSE(out1.str().empty());
}

TEST_CASE("exit codes") {
    std::ostringstream out, err;

    RunConfig bad;
    bad.command = "frobnicate";
    CHECK(run(bad, out, err) == 2);

    RunConfig missing;
    missing.command = "bound";
    missing.graph_spec = "file:/no/such/file";
    missing.tree_spec = "path:t=2";
    CHECK(run(missing, out, err) == 3);

    RunConfig broke;
    broke.command = "entropy";
    broke.graph_spec = "clique_union:k=1,s=8";
    broke.tree_spec = "path:t=4";
    broke.max_embeddings = 10;
    CHECK(run(broke, out, err) == 4);

    RunConfig badfmt;
    badfmt.command = "bound";
    badfmt.graph_spec = "cycle:n=5";
    badfmt.tree_spec = "path:t=1";
    badfmt.format = "yaml";
    CHECK(run(badfmt, out, err) == 2);

    RunConfig csvwrong;
    csvwrong.command = "bound";
    csvwrong.graph_spec = "cycle:n=5";
    csvwrong.tree_spec = "path:t=1";
    csvwrong.format = "csv";
    CHECK(run(csvwrong, out, err) == 2);
}

TEST_CASE("search command emits csv") {
    RunConfig cfg;
    cfg.command = "search";
    cfg.n_param = 4;
    cfg.m_param = 3;
    cfg.tree_spec = "path:t=2";
    cfg.format = "csv";
    std::ostringstream out, err;
    CHECK(run(cfg, out, err) == 0);
    CHECK(out.str().find("minimum,") != std::string::npos);
}

TEST_CASE("d0 command") {
    RunConfig cfg;
    cfg.command = "d0";
    cfg.t_param = 2;
    Json doc = run_to_json(cfg);
    CHECK(doc["d0"].get<long>() > 0);
    CHECK(doc["verdict"] == "recorded");
}

TEST_CASE("environment variables set the default budgets") {
    setenv("MONTREE_MAX_EMBEDDINGS", "1234", 1);
    setenv("MONTREE_MAX_NODES", "99", 1);
    RunConfig cfg;
    apply_env_budgets(cfg);
    CHECK(cfg.max_embeddings == 1234);
    CHECK(cfg.max_nodes == 99);
    unsetenv("MONTREE_MAX_EMBEDDINGS");
    unsetenv("MONTREE_MAX_NODES");
}

TEST_CASE("forest command dispatches both variants") {
    RunConfig cfg;
    cfg.command = "forest";
    cfg.k_param = 2;
    cfg.n_param = 12;
    cfg.d_param = 2;
    Json doc = run_to_json(cfg);
    CHECK(doc["bipartite_strictly_smaller"] == true);

    RunConfig cfg2;
    cfg2.command = "forest";
    cfg2.k_param = 1;
    cfg2.n_param = 6;
    cfg2.m_param = 5;
    Json doc2 = run_to_json(cfg2);
    CHECK(doc2["split_is_minimizer"] == true);
}
