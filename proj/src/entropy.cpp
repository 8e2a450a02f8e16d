#include "montree/entropy.hpp"
#include "montree/errors.hpp"

#include <cmath>
#include <limits>

namespace montree {

namespace {

int neighbors_used(const Graph& g, int v, const std::vector<int>& images) {
    int used = 0;
    for (int w : images)
        if (g.has_edge(v, w)) ++used;
    return used;
}

} // namespace

RValue r_value(const ExactDistribution& dist, int i, int v) {
    const auto& g = dist.graph();
    const auto& t = dist.tree();
    if (i < 0 || i >= t.edge_count())
        throw InputError("r_value: needs 0 <= i < t");
    const int anchor = t.ancestor(i + 1);

    Rational weight = 0;
    double sum = 0.0;
    bool defined = true;
    for (const auto& e : dist.level(i)) {
        if (e.images[anchor] != v) continue;
        weight += e.prob;
        int free = g.degree(v) - neighbors_used(g, v, e.images);
        if (free <= 0) {
            defined = false; // log(0): a dead end sits inside the event
            continue;
        }
        sum += to_double(e.prob) * std::log(static_cast<double>(free));
    }
    RValue out;
    if (weight == 0) {
        out.null_event = true;
        out.defined = g.degree(v) > i;
        out.value = out.defined ? std::log(static_cast<double>(g.degree(v) - i))
                                : -std::numeric_limits<double>::infinity();
        return out;
    }
    out.defined = defined;
    out.value = defined ? sum / to_double(weight) : -std::numeric_limits<double>::infinity();
    return out;
}

EntropyReport entropy_report(const ExactDistribution& dist) {
    const auto& g = dist.graph();
    const auto& tree = dist.tree();
    const int t = tree.edge_count();
    const int n = g.vertex_count();

    EntropyReport rep;
    rep.failure_mass = dist.failure_mass();
    rep.conditioned = rep.failure_mass != 0;
    const Rational success = 1 - rep.failure_mass;
    if (success == 0)
        throw InputError("entropy_report: the embedding never completes");

    // cond[i][k] = P(phi^i = entry k AND phi completes) / P(completes)
    std::vector<std::vector<Rational>> cond(t + 1);
    cond[t].reserve(dist.level(t).size());
    for (const auto& e : dist.level(t))
        cond[t].push_back(e.prob / success);
    for (int i = t; i >= 1; --i) {
        cond[i - 1].assign(dist.level(i - 1).size(), Rational(0));
        for (std::size_t k = 0; k < dist.level(i).size(); ++k)
            cond[i - 1][dist.level(i).at(k).parent] += cond[i][k];
    }

    auto entropy_of = [](const std::vector<Rational>& masses) {
        double h = 0.0;
        for (const auto& p : masses)
            if (p != 0) h -= to_double(p) * log_rational(p);
        return h;
    };

    rep.h_total = entropy_of(cond[t]);
    rep.support_size = dist.level(t).size();
    rep.support_log =
        rep.support_size ? std::log(static_cast<double>(rep.support_size)) : 0.0;

    // H[phi^{i+1} | phi^i] directly from parent/child masses
    std::vector<double> h_cond(t + 1, 0.0);
    for (int i = 1; i <= t; ++i) {
        double h = 0.0;
        for (std::size_t k = 0; k < dist.level(i).size(); ++k) {
            const Rational& pc = cond[i][k];
            if (pc == 0) continue;
            const Rational& pp = cond[i - 1][dist.level(i).at(k).parent];
            h += to_double(pc) * log_rational(pp / pc);
        }
        h_cond[i] = h;
    }
    if (t >= 1) {
        rep.h_level1 = entropy_of(cond[1]);
        rep.h_level1_defined = true;
        double chain = rep.h_level1;
        for (int i = 1; i <= t - 1; ++i)
            chain += h_cond[i + 1];
        rep.chain_residual = rep.h_total - chain;
        if (std::abs(rep.chain_residual) > kEntropyTol)
            throw InternalError("entropy_report: chain rule residual " +
                                std::to_string(rep.chain_residual));
    }

    const Rational d = g.average_degree();
    const Rational two_m(2 * g.edge_count());

    for (int i = 1; i <= t - 1; ++i) {
        LevelDecomposition lvl;
        lvl.i = i;
        lvl.h_cond = h_cond[i + 1];
        const int anchor = tree.ancestor(i + 1);

        std::vector<Rational> anchor_mass(n, Rational(0));
        std::vector<Rational> from_mass(n, Rational(0));
        std::vector<double> log_sum(n, 0.0);
        for (std::size_t k = 0; k < dist.level(i).size(); ++k) {
            const auto& e = dist.level(i).at(k);
            const Rational& pc = cond[i][k];
            if (pc == 0) continue;
            int v = e.images[anchor];
            anchor_mass[v] += pc;
            from_mass[e.images[0]] += pc;
            int free = g.degree(v) - neighbors_used(g, v, e.images);
            // pc > 0 implies a completion exists, so free >= 1
            log_sum[v] += to_double(pc) * std::log(static_cast<double>(free));
        }

        if (!rep.conditioned) {
            // the collapse P(phi^i in Gamma(v,*)) = d(v)/2|E| must be exact
            for (int v = 0; v < n; ++v)
                if (from_mass[v] != Rational(g.degree(v)) / two_m)
                    throw InternalError("entropy_report: level-0 marginal drifted");
        }

        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= 1 && g.degree(v) <= i)
                lvl.excluded_vertices.push_back(v);
        lvl.defined = lvl.excluded_vertices.empty() && d > i;

        std::vector<RValue> rvals(n);
        for (int v = 0; v < n; ++v) {
            RValue rv;
            if (anchor_mass[v] == 0) {
                rv.null_event = true;
                rv.defined = g.degree(v) > i;
                rv.value = rv.defined ? std::log(static_cast<double>(g.degree(v) - i))
                                      : -std::numeric_limits<double>::infinity();
            } else {
                rv.value = log_sum[v] / to_double(anchor_mass[v]);
            }
            rvals[v] = rv;
        }

        if (lvl.defined) {
            lvl.log_d_minus_i = log_rational(d - i);
            double pi1 = 0.0, pi2 = 0.0, pi3 = 0.0;
            for (int v = 0; v < n; ++v) {
                if (g.degree(v) == 0) continue;
                double weight = to_double(Rational(g.degree(v)) / two_m);
                double log_dvi = std::log(static_cast<double>(g.degree(v) - i));
                pi1 += weight * log_dvi;
                pi2 += weight * (rvals[v].value - log_dvi);
                pi3 += (to_double(from_mass[v] - anchor_mass[v])) * rvals[v].value;
            }
            lvl.pi1 = pi1 - lvl.log_d_minus_i;
            lvl.pi2 = pi2;
            lvl.pi3 = pi3;
            lvl.residual = lvl.h_cond - lvl.log_d_minus_i - lvl.pi1 - lvl.pi2 + lvl.pi3;
            if (!rep.conditioned && std::abs(lvl.residual) > kEntropyTol)
                throw InternalError("entropy_report: decomposition residual at level " +
                                    std::to_string(i));
        }

        rep.r_table.push_back(std::move(rvals));
        rep.levels.push_back(std::move(lvl));
    }

    Rational bound = Rational(n) * falling_factorial(d, static_cast<unsigned>(t));
    rep.model_bound_defined = bound > 0;
    if (rep.model_bound_defined) {
        rep.model_bound_log = log_rational(bound);
        rep.slack = rep.h_total - rep.model_bound_log;
    }
    return rep;
}

} // namespace montree
