#include "montree/lemma_lab.hpp"
#include "montree/entropy.hpp"
#include "montree/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace montree {

GraphPath make_graph_path(const Graph& g, std::vector<int> vertices) {
    if (vertices.empty())
        throw InputError("path: empty vertex sequence");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count())
            throw InputError("path: vertex out of range");
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[j] == v)
                throw InputError("path: repeated vertex " + std::to_string(v));
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!g.has_edge(vertices[i], vertices[i + 1]))
            throw InputError("path: missing edge " + std::to_string(vertices[i]) + "-" +
                             std::to_string(vertices[i + 1]));
    return GraphPath{std::move(vertices)};
}

GraphPath reverse_path(const GraphPath& p) {
    GraphPath out = p;
    std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

bool is_complete_path(const Graph& g, const GraphPath& p) {
    const auto& v = p.vertices;
    const int k = p.length();
    for (int j = 1; j < k; ++j)
        if (!g.has_edge(v[0], v[j]) || !g.has_edge(v[k], v[j]))
            return false;
    return true;
}

GraphPath twist_path(const Graph& g, const GraphPath& p) {
    const auto& v = p.vertices;
    const int k = p.length();
    for (int j = 1; j < k; ++j) {
        if (!g.has_edge(v[0], v[j]))
            throw InputError("twist: path not complete, missing edge " +
                             std::to_string(v[0]) + "-" + std::to_string(v[j]));
        if (!g.has_edge(v[k], v[j]))
            throw InputError("twist: path not complete, missing edge " +
                             std::to_string(v[k]) + "-" + std::to_string(v[j]));
    }
    GraphPath out = p;
    std::swap(out.vertices.front(), out.vertices.back());
    return make_graph_path(g, out.vertices); // revalidate
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::hypothesis_unmet: return "hypothesis_unmet";
    case Verdict::fails: return "fails";
    case Verdict::inapplicable: return "inapplicable";
    }
    return "?";
}

namespace {

RatioCheck ratio_check(const Rational& num, const Rational& den, const Rational& eps,
                       bool hypotheses_ok) {
    RatioCheck out;
    out.numerator = num;
    out.denominator = den;
    if (den == 0) {
        out.verdict = Verdict::inapplicable;
        return out;
    }
    out.ratio = num / den;
    bool within = out.ratio >= 1 - eps && out.ratio <= 1 + eps;
    out.verdict = within ? Verdict::holds
                         : (hypotheses_ok ? Verdict::fails : Verdict::hypothesis_unmet);
    return out;
}

} // namespace

ReverseRatioReport check_reverse_ratio(const ExactDistribution& dist, int i,
                                       const GraphPath& p) {
    const auto& tree = dist.tree();
    const auto& g = dist.graph();
    if (i < 0 || i >= tree.edge_count())
        throw InputError("check_reverse_ratio: needs 0 <= i < t");
    const int anchor = tree.ancestor(i + 1);
    if (static_cast<int>(tree.root_path(anchor).size()) != static_cast<int>(p.vertices.size()))
        throw InputError("check_reverse_ratio: path length must equal the x_0 -> x_{a(i+1)} "
                         "distance in the tree");

    const int t = tree.edge_count();
    const Rational d = g.average_degree();
    ReverseRatioReport rep;
    rep.bound_eps = d == 0 ? Rational(0) : Rational(8 * t * t) / d;
    rep.hypothesis_min_degree = Rational(g.min_degree()) >= d / 4;
    rep.dead_end_caveat = dist.failure_mass_through(i) != 0;
    const bool hyp = rep.hypothesis_min_degree && !rep.dead_end_caveat;

    auto rp = reverse_path(p);
    rep.path_ratio = ratio_check(dist.probability(GammaSelector::along(i, p.vertices)),
                                 dist.probability(GammaSelector::along(i, rp.vertices)),
                                 rep.bound_eps, hyp);
    const int u = p.vertices.front(), v = p.vertices.back();
    rep.pair_ratio = ratio_check(dist.probability(GammaSelector::pair_uv(i, u, v)),
                                 dist.probability(GammaSelector::pair_uv(i, v, u)),
                                 rep.bound_eps, hyp);
    rep.from_to_ratio = ratio_check(dist.probability(GammaSelector::from(i, u)),
                                    dist.probability(GammaSelector::to(i, u)),
                                    rep.bound_eps, hyp);
    rep.nc_pair_ratio = ratio_check(
        dist.probability(GammaSelector::pair_uv(i, u, v, CompletenessFilter::non_complete)),
        dist.probability(GammaSelector::pair_uv(i, v, u, CompletenessFilter::non_complete)),
        rep.bound_eps, hyp);
    return rep;
}

TwistIdentityReport check_twist_identity(const ExactDistribution& dist, int i, int u, int v) {
    const auto& tree = dist.tree();
    if (i < 0 || i >= tree.edge_count())
        throw InputError("check_twist_identity: needs 0 <= i < t");
    TwistIdentityReport rep;
    rep.dead_end_caveat = dist.failure_mass_through(i) != 0;
    Rational p_vu = dist.probability(GammaSelector::pair_uv(i, v, u));
    Rational p_uv = dist.probability(GammaSelector::pair_uv(i, u, v));
    Rational nc_vu =
        dist.probability(GammaSelector::pair_uv(i, v, u, CompletenessFilter::non_complete));
    Rational nc_uv =
        dist.probability(GammaSelector::pair_uv(i, u, v, CompletenessFilter::non_complete));
    rep.lhs = p_vu - p_uv;
    rep.rhs = nc_vu - nc_uv;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

JensenIdentityReport jensen_error_identity(const std::vector<int>& degrees, int k) {
    if (degrees.empty())
        throw InputError("jensen_error_identity: empty degree list");
    if (k < 0)
        throw InputError("jensen_error_identity: negative k");
    long sum = 0;
    for (int di : degrees) {
        if (di <= k)
            throw InputError("jensen_error_identity: needs every d_i > k");
        sum += di;
    }
    const std::size_t n = degrees.size();
    const double d = static_cast<double>(sum) / static_cast<double>(n);

    JensenIdentityReport rep;
    double lhs = 0.0;
    for (int di : degrees)
        lhs += static_cast<double>(di) / static_cast<double>(n) * std::log(di - k);
    rep.lhs = lhs / d - std::log(d - k);

    double rhs = 0.0;
    for (int di : degrees) {
        double c = di / d;
        rhs += c * std::log((c * d - k) / (d - k)) - (c - 1.0) * d / (d - k);
    }
    rep.rhs = rhs / static_cast<double>(n);
    rep.residual = rep.lhs - rep.rhs;
    return rep;
}

double L_over_c(double c, double d, int i) {
    return std::log((c * d - i) / (d - i)) - (c - 1.0) / c * d / (d - i);
}

SigmaTriple sigma_terms_real(double c_u, double c_v, double d, int t, int i,
                             double deg_u, double deg_v) {
    if (!(c_u * d > i) || !(c_v * d > i))
        throw InputError("sigma_terms: needs c_u d > i and c_v d > i");
    if (!(d > i))
        throw InputError("sigma_terms: needs d > i");
    if (!(deg_u > 0) || !(deg_v > 0))
        throw InputError("sigma_terms: degrees must be positive");
    SigmaTriple out;
    out.c_u = c_u;
    out.c_v = c_v;
    out.d = d;
    out.t = t;
    out.i = i;
    out.deg_u = deg_u;
    out.deg_v = deg_v;
    out.sigma1 = 0.125 * (L_over_c(c_v, d, i) + L_over_c(c_u, d, i));
    out.sigma2 = 1.0 / (8.0 * t) * std::min(1.0 / deg_u, 1.0 / deg_v);
    out.sigma3 = 8.0 * t * t / d * (std::abs(std::log(deg_u / deg_v)) + 8.0 * t / d);
    return out;
}

SigmaTriple sigma_terms(const Rational& c_u, const Rational& c_v, const Rational& d,
                        int t, int i, int deg_u, int deg_v) {
    return sigma_terms_real(to_double(c_u), to_double(c_v), to_double(d), t, i,
                            static_cast<double>(deg_u), static_cast<double>(deg_v));
}

GridSpec parse_grid_spec(std::string_view s) {
    std::string str{s};
    if (str.rfind("geom:", 0) != 0)
        throw InputError("grid spec: expected 'geom:lo=..,hi=..,per_decade=..'");
    GridSpec out;
    std::istringstream in(str.substr(5));
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("grid spec: expected key=value in '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        try {
            if (key == "lo")
                out.lo = std::stod(val);
            else if (key == "hi")
                out.hi = std::stod(val);
            else if (key == "per_decade")
                out.per_decade = std::stoi(val);
            else
                throw InputError("grid spec: unknown key '" + key + "'");
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            throw InputError("grid spec: bad value in '" + item + "'");
        }
    }
    if (out.lo <= 0 || out.hi < out.lo || out.per_decade < 1)
        throw InputError("grid spec: need 0 < lo <= hi and per_decade >= 1");
    return out;
}

std::vector<double> geometric_grid(const GridSpec& spec) {
    // anchored at 1 so the binding point c_u = c_v = 1 is never straddled
    const double log_r = std::log(10.0) / spec.per_decade;
    long k_lo = static_cast<long>(std::ceil(std::log(spec.lo) / log_r - 1e-9));
    long k_hi = static_cast<long>(std::floor(std::log(spec.hi) / log_r + 1e-9));
    std::vector<double> out;
    out.reserve(k_hi - k_lo + 1);
    for (long k = k_lo; k <= k_hi; ++k)
        out.push_back(std::exp(k * log_r));
    return out;
}

MonotonicityReport check_L_monotonicity(const Rational& d, int i, const GridSpec& grid,
                                        double large_d_threshold) {
    const double dd = to_double(d);
    if (!(dd > i))
        throw InputError("check_L_monotonicity: needs d > i");
    MonotonicityReport rep;
    rep.decreasing_checked = dd >= large_d_threshold;
    const double c_min = i / (dd - i); // non-negativity region starts here
    double prev = 0.0;
    bool have_prev = false;
    bool first = true;
    for (double c : geometric_grid(grid)) {
        if (c < c_min && i > 0) continue;
        if (!(c * dd > i)) continue;
        double val = L_over_c(c, dd, i);
        if (first || val < rep.min_value) rep.min_value = val;
        first = false;
        if (val < 0) rep.nonnegative = false;
        if (have_prev) {
            if (prev >= 1.0 && c > 1.0 && !(val > L_over_c(prev, dd, i)))
                rep.increasing_above_one = false;
            if (rep.decreasing_checked && c <= 1.0 && prev >= c_min &&
                !(val < L_over_c(prev, dd, i)))
                rep.decreasing_below_one = false;
        }
        prev = c;
        have_prev = true;
    }
    return rep;
}

namespace {

bool grid_ok_for_d(double d, int t, const GridSpec& spec, long* violations) {
    GridSpec use = spec;
    if (use.hi <= 0) use.hi = d * d; // cover the c > d regime of case 3
    auto grid = geometric_grid(use);
    long bad = 0;
    for (int i = 1; i < t; ++i) {
        if (!(d > i)) return false;
        std::vector<double> l_vals(grid.size());
        for (std::size_t a = 0; a < grid.size(); ++a)
            l_vals[a] = grid[a] * d > i ? L_over_c(grid[a], d, i) : 0.0;
        for (std::size_t a = 0; a < grid.size(); ++a) {
            double cu = grid[a];
            if (!(cu * d > i)) continue;
            for (std::size_t b = a; b < grid.size(); ++b) {
                double cv = grid[b];
                if (!(cv * d > i)) continue;
                double s1 = 0.125 * (l_vals[a] + l_vals[b]);
                double s2 = 1.0 / (8.0 * t) * 1.0 / (d * std::max(cu, cv));
                double s3 = 8.0 * t * t / d * (std::log(cv / cu) + 8.0 * t / d);
                if (s1 + s2 - s3 < 0) {
                    if (!violations) return false;
                    ++bad;
                }
            }
        }
    }
    if (violations) *violations = bad;
    return bad == 0;
}

} // namespace

D0Report empirical_d0(int t, const GridSpec& grid) {
    if (t < 2)
        throw InputError("empirical_d0: needs t >= 2");
    D0Report rep;
    rep.t = t;
    rep.grid = grid;

    long lo = std::max(4L * t, static_cast<long>(t) + 1);
    long hi = lo;
    while (!grid_ok_for_d(static_cast<double>(hi), t, grid, nullptr)) {
        hi *= 2;
        if (hi > (1L << 40))
            throw InternalError("empirical_d0: no certifying d found");
    }
    long lo2 = hi / 2;
    while (lo2 + 1 < hi) {
        long mid = lo2 + (hi - lo2) / 2;
        if (grid_ok_for_d(static_cast<double>(mid), t, grid, nullptr))
            hi = mid;
        else
            lo2 = mid;
    }
    rep.d0 = hi;
    rep.c_over_t4 = static_cast<double>(hi) / (static_cast<double>(t) * t * t * t);
    grid_ok_for_d(static_cast<double>(hi - 1), t, grid, &rep.violations_below);
    return rep;
}

WeakLemmaReport weak_lemma_report(const ExactDistribution& dist) {
    const auto& g = dist.graph();
    const auto& tree = dist.tree();
    const int t = tree.edge_count();
    const Rational d = g.average_degree();

    WeakLemmaReport rep;
    rep.hypothesis_min_degree = Rational(g.min_degree()) >= d / 4;
    auto ent = entropy_report(dist);
    rep.h_total = ent.h_total;
    rep.defined = !ent.conditioned && ent.model_bound_defined;
    for (const auto& lvl : ent.levels)
        rep.defined = rep.defined && lvl.defined;

    const double dd = to_double(d);
    double nc_sum = 0.0;
    double pi2_total = 0.0, pi2_rhs_total = 0.0;
    for (int i = 1; i <= t - 1 && rep.defined; ++i) {
        const int anchor = tree.ancestor(i + 1);
        std::map<std::pair<int, int>, Rational> nc_mass;
        for (const auto& e : dist.level(i))
            if (!classify_complete_at(tree, g, e.images, anchor))
                nc_mass[{e.images[0], e.images[anchor]}] += e.prob;

        PiLemmaLevel lvl;
        lvl.i = i;
        lvl.defined = true;
        const auto& ent_lvl = ent.levels[i - 1];
        lvl.pi1 = ent_lvl.pi1;
        lvl.pi2 = ent_lvl.pi2;
        lvl.pi3 = ent_lvl.pi3;
        for (const auto& [uv, mass] : nc_mass) {
            auto [u, v] = uv;
            double w = to_double(mass);
            double cu = g.degree(u) / dd, cv = g.degree(v) / dd;
            auto sig = sigma_terms_real(cu, cv, dd, t, i, g.degree(u), g.degree(v));
            lvl.pi1_rhs += w * sig.sigma1; // (1/8)(f(c_u) + f(c_v))
            lvl.pi2_rhs += w * sig.sigma2;
            lvl.pi3_rhs += w * sig.sigma3;
            nc_sum += w * (sig.sigma1 + sig.sigma2 - sig.sigma3);
        }
        pi2_total += lvl.pi2;
        pi2_rhs_total += lvl.pi2_rhs;
        rep.levels.push_back(lvl);
    }

    auto verdict_of = [&](bool ok) {
        return ok ? Verdict::holds
                  : (rep.hypothesis_min_degree ? Verdict::fails : Verdict::hypothesis_unmet);
    };
    if (rep.defined) {
        rep.master_rhs = ent.model_bound_log + nc_sum;
        rep.master_verdict = verdict_of(rep.h_total >= rep.master_rhs - kEntropyTol);
        bool pi1_ok = true, pi3_ok = true;
        for (const auto& lvl : rep.levels) {
            pi1_ok = pi1_ok && lvl.pi1 >= lvl.pi1_rhs - kEntropyTol;
            pi3_ok = pi3_ok && lvl.pi3 <= lvl.pi3_rhs + kEntropyTol;
        }
        rep.pi1_verdict = verdict_of(pi1_ok);
        rep.pi3_verdict = verdict_of(pi3_ok);
        rep.pi2_verdict = verdict_of(pi2_total >= pi2_rhs_total - kEntropyTol);
    }
    return rep;
}

} // namespace montree
