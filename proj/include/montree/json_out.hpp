#pragma once

#include "montree/counting.hpp"
#include "montree/entropy.hpp"
#include "montree/extremal.hpp"
#include "montree/lemma_lab.hpp"
#include "montree/prune.hpp"

#include <json.hpp>

namespace montree {

using Json = nlohmann::ordered_json;

// Rationals and big integers are serialized as strings; doubles keep
// nlohmann's shortest round-trip formatting. Field names are a v1 contract.

inline Json to_json(const Rational& q) { return rational_str(q); }
inline Json to_json(const BigInt& z) { return z.str(); }

inline Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back(Json::array({u, v}));
    return Json{{"n", g.vertex_count()},
                {"m", g.edge_count()},
                {"average_degree", to_json(g.average_degree())},
                {"min_degree", g.min_degree()},
                {"edges", edges}};
}

inline Json to_json(const RootedTree& t) {
    Json anc = Json::array();
    for (int i = 1; i <= t.edge_count(); ++i)
        anc.push_back(t.ancestor(i));
    auto [t1, t2] = t.bipartition_sizes();
    Json labels = Json::array();
    for (int i = 0; i < t.vertex_count(); ++i)
        labels.push_back(t.original_label(i));
    return Json{{"t", t.edge_count()},
                {"ancestor", anc},
                {"diameter", t.diameter()},
                {"t1", t1},
                {"t2", t2},
                {"original_labels", labels}};
}

inline Json to_json(const CountReport& r) {
    return Json{{"mon_count", to_json(r.mon_count)},
                {"hom_count", to_json(r.hom_count)},
                {"bound", to_json(r.bound)},
                {"holds", r.holds},
                {"equality", r.equality},
                {"equality_classification", to_string(r.equality_classification)}};
}

inline Json to_json(const AdversaryBound& b) {
    return Json{{"value", to_json(b.value)}, {"vacuous", b.vacuous}};
}

inline Json to_json(const BipartiteBoundReport& r) {
    return Json{{"a", r.a},           {"b", r.b},
                {"e", r.e},           {"t1", r.t1},
                {"t2", r.t2},         {"value", to_json(r.value)},
                {"value_swapped", r.swapped_defined ? to_json(r.value_swapped) : Json(nullptr)}};
}

inline Json to_json(const PruneResult& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps)
        steps.push_back(Json{{"vertex", s.vertex},
                             {"degree", s.degree_at_deletion},
                             {"n_before", s.n_before},
                             {"m_before", s.m_before},
                             {"n_after", s.n_after},
                             {"m_after", s.m_after}});
    return Json{{"steps", steps},
                {"kept_vertices", r.kept_ids},
                {"final", to_json(r.pruned)}};
}

inline Json to_json(const RValue& r) {
    Json v = r.defined ? Json(r.value) : Json(nullptr);
    return Json{{"value", v}, {"null_event", r.null_event}, {"defined", r.defined}};
}

inline Json to_json(const EntropyReport& r) {
    Json levels = Json::array();
    for (const auto& l : r.levels) {
        Json jl{{"i", l.i},
                {"h_cond", l.h_cond},
                {"defined", l.defined},
                {"excluded_vertices", l.excluded_vertices}};
        if (l.defined) {
            jl["log_d_minus_i"] = l.log_d_minus_i;
            jl["pi1"] = l.pi1;
            jl["pi2"] = l.pi2;
            jl["pi3"] = l.pi3;
            jl["residual"] = l.residual;
        }
        levels.push_back(jl);
    }
    Json rt = Json::array();
    for (const auto& row : r.r_table) {
        Json jr = Json::array();
        for (const auto& rv : row)
            jr.push_back(to_json(rv));
        rt.push_back(jr);
    }
    return Json{{"h_total", r.h_total},
                {"h_level1", r.h_level1_defined ? Json(r.h_level1) : Json(nullptr)},
                {"chain_residual", r.chain_residual},
                {"levels", levels},
                {"model_bound_log", r.model_bound_defined ? Json(r.model_bound_log) : Json(nullptr)},
                {"slack", r.model_bound_defined ? Json(r.slack) : Json(nullptr)},
                {"conditioned", r.conditioned},
                {"failure_mass", to_json(r.failure_mass)},
                {"support_size", r.support_size},
                {"support_log", r.support_log},
                {"r_table", rt}};
}

inline Json to_json(const RatioCheck& c) {
    Json ratio = c.denominator == 0 ? Json(nullptr) : Json(rational_str(c.ratio));
    return Json{{"numerator", to_json(c.numerator)},
                {"denominator", to_json(c.denominator)},
                {"ratio", ratio},
                {"verdict", to_string(c.verdict)}};
}

inline Json to_json(const ReverseRatioReport& r) {
    return Json{{"bound_eps", to_json(r.bound_eps)},
                {"hypothesis_min_degree", r.hypothesis_min_degree},
                {"dead_end_caveat", r.dead_end_caveat},
                {"path_ratio", to_json(r.path_ratio)},
                {"pair_ratio", to_json(r.pair_ratio)},
                {"from_to_ratio", to_json(r.from_to_ratio)},
                {"nc_pair_ratio", to_json(r.nc_pair_ratio)}};
}

inline Json to_json(const TwistIdentityReport& r) {
    return Json{{"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)},
                {"equal", r.equal},
                {"dead_end_caveat", r.dead_end_caveat}};
}

inline Json to_json(const JensenIdentityReport& r) {
    return Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", r.residual}};
}

inline Json to_json(const SigmaTriple& s) {
    return Json{{"sigma1", s.sigma1}, {"sigma2", s.sigma2}, {"sigma3", s.sigma3},
                {"c_u", s.c_u},       {"c_v", s.c_v},       {"d", s.d},
                {"t", s.t},           {"i", s.i},
                {"deg_u", s.deg_u},   {"deg_v", s.deg_v}};
}

inline Json to_json(const GridSpec& g) {
    return Json{{"lo", g.lo}, {"hi", g.hi}, {"per_decade", g.per_decade}};
}

inline Json to_json(const D0Report& r) {
    return Json{{"t", r.t},
                {"d0", r.d0},
                {"grid", to_json(r.grid)},
                {"c_over_t4", r.c_over_t4},
                {"violations_below", r.violations_below}};
}

inline Json to_json(const WeakLemmaReport& r) {
    Json levels = Json::array();
    for (const auto& l : r.levels)
        levels.push_back(Json{{"i", l.i},
                              {"pi1", l.pi1},
                              {"pi1_rhs", l.pi1_rhs},
                              {"pi2", l.pi2},
                              {"pi2_rhs", l.pi2_rhs},
                              {"pi3", l.pi3},
                              {"pi3_rhs", l.pi3_rhs}});
    return Json{{"hypothesis_min_degree", r.hypothesis_min_degree},
                {"defined", r.defined},
                {"h_total", r.h_total},
                {"master_rhs", r.master_rhs},
                {"master_verdict", to_string(r.master_verdict)},
                {"pi1_verdict", to_string(r.pi1_verdict)},
                {"pi2_verdict", to_string(r.pi2_verdict)},
                {"pi3_verdict", to_string(r.pi3_verdict)},
                {"levels", levels}};
}

inline Json to_json(const SearchResult& r) {
    Json mins = Json::array();
    for (const auto& g : r.minimizers) {
        Json edges = Json::array();
        for (auto [u, v] : g.edges())
            edges.push_back(Json::array({u, v}));
        mins.push_back(edges);
    }
    return Json{{"n", r.n},
                {"m", r.m},
                {"pattern", r.pattern},
                {"minimum", to_json(r.minimum)},
                {"class_count", r.class_count},
                {"minimizers", mins},
                {"bound", to_json(r.bound)},
                {"margin", to_json(r.margin)},
                {"clique_union_admissible", r.clique_union_admissible},
                {"clique_union_is_minimizer", r.clique_union_is_minimizer}};
}

inline Json to_json(const ForestCompareReport& r) {
    return Json{{"k", r.k},
                {"n", r.n},
                {"d", r.d},
                {"clique_union_count", to_json(r.clique_union_count)},
                {"bipartite_count", to_json(r.bipartite_count)},
                {"bipartite_strictly_smaller", r.bipartite_strictly_smaller}};
}

inline Json to_json(const SplitMinReport& r) {
    return Json{{"k", r.k},
                {"n", r.n},
                {"m", r.m},
                {"a", r.a},
                {"split_count", to_json(r.split_count)},
                {"minimum", to_json(r.minimum)},
                {"class_count", r.class_count},
                {"split_is_minimizer", r.split_is_minimizer}};
}

} // namespace montree
