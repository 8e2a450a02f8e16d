#include "montree/cli.hpp"
#include "montree/errors.hpp"
#include "montree/families.hpp"
#include "montree/tree_catalog.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>

namespace montree {

namespace {

Json config_json(const RunConfig& c) {
    return Json{{"command", c.command},
                {"graph", c.graph_spec},
                {"tree", c.tree_spec},
                {"seed", c.seed},
                {"max_embeddings", c.max_embeddings},
                {"max_nodes", c.max_nodes},
                {"tol", c.tol},
                {"tol_identity", c.tol_identity},
                {"format", c.format},
                {"walks", c.walks},
                {"samples", c.samples},
                {"t", c.t_param},
                {"grid", c.grid},
                {"n", c.n_param},
                {"m", c.m_param},
                {"k", c.k_param},
                {"d", c.d_param}};
}

Graph need_graph(const RunConfig& c) {
    if (c.graph_spec.empty())
        throw InputError(c.command + ": needs --graph");
    return make_graph(parse_graph_family(c.graph_spec));
}

RootedTree need_tree(const RunConfig& c) {
    if (c.tree_spec.empty())
        throw InputError(c.command + ": needs --tree");
    return make_tree(parse_tree_family(c.tree_spec));
}

Json cmd_count(const RunConfig& c) {
    Json out;
    Graph g = need_graph(c);
    out["graph"] = to_json(g);
    if (!c.tree_spec.empty()) {
        RootedTree t = make_tree(parse_tree_family(c.tree_spec));
        out["tree"] = to_json(t);
        out["mon_count"] = to_json(count_injective(t, g, c.max_nodes));
        out["hom_count"] = to_json(count_hom_tree(t, g));
    }
    if (c.walks >= 0) {
        out["walks"] = to_json(count_walks(g, c.walks));
        out["nb_walks"] = to_json(count_nb_walks(g, c.walks));
    }
    if (c.tree_spec.empty() && c.walks < 0)
        throw InputError("count: needs --tree and/or --walks");
    return out;
}

Json cmd_bound(const RunConfig& c) {
    Graph g = need_graph(c);
    RootedTree t = need_tree(c);
    CountReport r = main_bound_check(t, g, c.max_nodes);
    Json out = to_json(r);
    out["graph"] = to_json(g);
    out["tree"] = to_json(t);
    if (t.edge_count() >= 1)
        out["adversary_bound"] = to_json(adversary_lower_bound(g, t.edge_count()));
    if (bipartition(g))
        out["bipartite_bound"] = to_json(bipartite_bound(g, t));
    out["verdict"] = r.equality ? "equality" : (r.holds ? "holds" : "fails");
    return out;
}

Json cmd_entropy(const RunConfig& c) {
    Graph g = need_graph(c);
    RootedTree t = need_tree(c);
    auto dist = ExactDistribution::build(t, g, c.max_embeddings);
    EntropyReport rep = entropy_report(dist);
    Json out = to_json(rep);
    out["graph"] = to_json(g);
    out["tree"] = to_json(t);
    out["verdict"] = rep.conditioned ? "conditioned" : "ok";
    return out;
}

Json cmd_sample(const RunConfig& c) {
    Graph g = need_graph(c);
    RootedTree t = need_tree(c);
    if (c.samples < 1)
        throw InputError("sample: needs a positive --samples");
    std::map<std::vector<int>, long> freq;
    long dead = 0;
    for (int s = 0; s < c.samples; ++s) {
        auto res = sample_greedy(t, g, c.seed + static_cast<std::uint64_t>(s));
        if (res.dead_end)
            ++dead;
        else
            ++freq[res.embedding.images];
    }
    Json rows = Json::array();
    for (const auto& [images, count] : freq)
        rows.push_back(Json{{"images", images}, {"count", count}});
    return Json{{"samples", c.samples},
                {"dead_ends", dead},
                {"distinct", freq.size()},
                {"frequencies", rows}};
}

Json cmd_lemmas(const RunConfig& c) {
    Graph g = need_graph(c);
    RootedTree t = need_tree(c);
    auto dist = ExactDistribution::build(t, g, c.max_embeddings);

    // twist identity over every level and vertex pair
    long twist_total = 0, twist_equal = 0, twist_caveat = 0;
    for (int i = 0; i < t.edge_count(); ++i)
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = 0; v < g.vertex_count(); ++v) {
                auto rep = check_twist_identity(dist, i, u, v);
                ++twist_total;
                if (rep.equal) ++twist_equal;
                if (rep.dead_end_caveat) ++twist_caveat;
            }

    // reverse ratios over every realized image of the x_0 -> x_{a(i+1)} path
    std::map<std::string, long> reverse_verdicts;
    long reverse_total = 0;
    for (int i = 0; i < t.edge_count(); ++i) {
        auto chain = t.root_path(t.ancestor(i + 1));
        std::set<std::vector<int>> seen;
        for (const auto& e : dist.level(i)) {
            std::vector<int> image;
            for (int idx : chain)
                image.push_back(e.images[idx]);
            if (!seen.insert(image).second) continue;
            auto rep = check_reverse_ratio(dist, i, make_graph_path(g, image));
            ++reverse_total;
            ++reverse_verdicts[to_string(rep.path_ratio.verdict)];
        }
    }
    Json rv = Json::object();
    for (const auto& [k, v] : reverse_verdicts)
        rv[k] = v;

    // the appendix identity on this graph's degree sequence
    Json jensen = Json::array();
    std::vector<int> degs;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) degs.push_back(g.degree(v));
    for (int k = 0; k < t.edge_count() && !degs.empty(); ++k) {
        bool ok = true;
        for (int dv : degs)
            if (dv <= k) ok = false;
        if (!ok) break;
        auto rep = jensen_error_identity(degs, k);
        jensen.push_back(Json{{"k", k},
                              {"lhs", rep.lhs},
                              {"rhs", rep.rhs},
                              {"residual", rep.residual},
                              {"within_tol", std::abs(rep.residual) <= c.tol_identity}});
    }

    WeakLemmaReport weak = weak_lemma_report(dist);
    bool all_equal = twist_equal == twist_total;
    return Json{{"graph", to_json(g)},
                {"tree", to_json(t)},
                {"twist_identity",
                 Json{{"instances", twist_total},
                      {"equal", twist_equal},
                      {"dead_end_caveat", twist_caveat}}},
                {"reverse_ratio", Json{{"instances", reverse_total}, {"verdicts", rv}}},
                {"jensen", jensen},
                {"weak_lemma", to_json(weak)},
                {"verdict", all_equal ? "twist_identity_exact" : "twist_identity_violations"}};
}

Json cmd_d0(const RunConfig& c) {
    if (c.t_param < 2)
        throw InputError("d0: needs --t >= 2");
    GridSpec grid{0.25, 0.0, 40};
    if (!c.grid.empty())
        grid = parse_grid_spec(c.grid);
    D0Report rep = empirical_d0(c.t_param, grid);
    Json out = to_json(rep);
    out["verdict"] = "recorded";
    return out;
}

Json cmd_search(const RunConfig& c) {
    if (c.n_param < 1 || c.m_param < 0)
        throw InputError("search: needs --n and --m");
    RootedTree t = need_tree(c);
    SearchResult res = find_min_mon(c.n_param, c.m_param, t);
    Json out = to_json(res);
    out["verdict"] = res.clique_union_admissible
                         ? (res.clique_union_is_minimizer ? "clique_union_minimizes"
                                                          : "clique_union_beaten")
                         : "clique_union_inadmissible";
    return out;
}

Json cmd_forest(const RunConfig& c) {
    if (c.k_param < 0)
        throw InputError("forest: needs --k");
    if (c.d_param >= 0) {
        if (c.n_param < 1)
            throw InputError("forest: needs --n");
        auto rep = forest_counterexample_check(c.k_param, c.n_param, c.d_param);
        Json out = to_json(rep);
        out["verdict"] =
            rep.bipartite_strictly_smaller ? "bipartite_smaller" : "clique_union_not_beaten";
        return out;
    }
    if (c.m_param >= 0) {
        if (c.n_param < 1)
            throw InputError("forest: needs --n");
        auto rep = split_graph_min_check(c.k_param, c.n_param, c.m_param);
        Json out = to_json(rep);
        out["verdict"] = rep.split_is_minimizer ? "split_minimizes" : "split_beaten";
        return out;
    }
    throw InputError("forest: needs --d (bipartite comparison) or --m (split minimum)");
}

std::string csv_escape(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void write_csv(const Json& doc, std::ostream& os) {
    // flat key,value rows; array-of-object fields become one row per element
    for (const auto& [key, value] : doc.items()) {
        if (key == "config") continue;
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            for (const auto& row : value) {
                os << key;
                for (const auto& [k2, v2] : row.items())
                    os << "," << k2 << "," << csv_escape(v2);
                os << "\n";
            }
        } else {
            os << key << "," << csv_escape(value) << "\n";
        }
    }
}

void write_text(const Json& doc, std::ostream& os, const std::string& prefix = "") {
    for (const auto& [key, value] : doc.items()) {
        if (key == "config") continue;
        if (value.is_object()) {
            os << prefix << key << ":\n";
            write_text(value, os, prefix + "  ");
        } else {
            os << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
               << "\n";
        }
    }
}

} // namespace

void apply_env_budgets(RunConfig& cfg) {
    if (const char* e = std::getenv("MONTREE_MAX_EMBEDDINGS"))
        cfg.max_embeddings = std::strtoull(e, nullptr, 10);
    if (const char* e = std::getenv("MONTREE_MAX_NODES"))
        cfg.max_nodes = std::strtoull(e, nullptr, 10);
}

Json run_to_json(const RunConfig& cfg) {
    if (cfg.max_embeddings == 0 || cfg.max_nodes == 0)
        throw InputError("budgets must be positive");
    Json out;
    if (cfg.command == "count")
        out = cmd_count(cfg);
    else if (cfg.command == "bound")
        out = cmd_bound(cfg);
    else if (cfg.command == "entropy")
        out = cmd_entropy(cfg);
    else if (cfg.command == "sample")
        out = cmd_sample(cfg);
    else if (cfg.command == "lemmas")
        out = cmd_lemmas(cfg);
    else if (cfg.command == "d0")
        out = cmd_d0(cfg);
    else if (cfg.command == "search")
        out = cmd_search(cfg);
    else if (cfg.command == "forest")
        out = cmd_forest(cfg);
    else
        throw InputError("unknown command: '" + cfg.command + "'");
    out["config"] = config_json(cfg);
    return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Json doc = run_to_json(cfg);
        if (cfg.format == "json") {
            out << doc.dump(2) << "\n";
        } else if (cfg.format == "csv") {
            if (cfg.command != "search" && cfg.command != "forest")
                throw InputError("csv output is only supported for search and forest");
            write_csv(doc, out);
        } else if (cfg.format == "text") {
            write_text(doc, out);
        } else {
            throw InputError("unknown format: '" + cfg.format + "'");
        }
        return 0;
    } catch (const ResourceError& e) {
        err << "error (budget): " << e.what() << "\n";
        return 4;
    } catch (const IoError& e) {
        err << "error (input): " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace montree
