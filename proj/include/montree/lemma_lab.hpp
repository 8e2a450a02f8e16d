#pragma once

#include "montree/distribution.hpp"
#include "montree/numeric.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace montree {

// Path in G: distinct vertices, consecutive pairs adjacent.
struct GraphPath {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

GraphPath make_graph_path(const Graph& g, std::vector<int> vertices);
GraphPath reverse_path(const GraphPath& p);

// p is complete when both endpoints see every interior vertex.
bool is_complete_path(const Graph& g, const GraphPath& p);

// (p_0,...,p_k) -> (p_k, p_1,...,p_{k-1}, p_0); requires p complete, which
// makes the result a genuine path. An involution.
GraphPath twist_path(const Graph& g, const GraphPath& p);

enum class Verdict { holds, hypothesis_unmet, fails, inapplicable };
std::string to_string(Verdict v);

struct RatioCheck {
    Rational numerator, denominator;
    Rational ratio; // meaningful iff denominator != 0
    Verdict verdict = Verdict::inapplicable;
};

struct ReverseRatioReport {
    Rational bound_eps;      // 8 t^2 / d
    bool hypothesis_min_degree = false; // delta >= d/4
    bool dead_end_caveat = false;       // failure mass through level i > 0
    RatioCheck path_ratio;    // Gamma_i(p) / Gamma_i(reverse p)
    RatioCheck pair_ratio;    // Gamma_i(u,v) / Gamma_i(v,u), u = p_0, v = p_k
    RatioCheck from_to_ratio; // Gamma_i(u,*) / Gamma_i(*,u)
    RatioCheck nc_pair_ratio; // Gamma_i^nc(u,v) / Gamma_i^nc(v,u)
};

// Reverse-path ratio bounds 1 +- 8t^2/d, with the endpoint-pair, from/to and
// non-complete corollary variants.
ReverseRatioReport check_reverse_ratio(const ExactDistribution& dist, int i,
                                       const GraphPath& p);

struct TwistIdentityReport {
    Rational lhs; // P(Gamma_i(v,u)) - P(Gamma_i(u,v))
    Rational rhs; // P(Gamma_i^nc(v,u)) - P(Gamma_i^nc(u,v))
    bool equal = false;
    bool dead_end_caveat = false; // identity can fail when embeddings die
};

TwistIdentityReport check_twist_identity(const ExactDistribution& dist, int i, int u, int v);

struct JensenIdentityReport {
    double lhs = 0.0, rhs = 0.0, residual = 0.0;
};

// Both sides of the exact Jensen-error identity for x log(x - k).
JensenIdentityReport jensen_error_identity(const std::vector<int>& degrees, int k);

// L(c)/c = log((cd - i)/(d - i)) - (c - 1)/c * d/(d - i)
double L_over_c(double c, double d, int i);

struct SigmaTriple {
    double sigma1 = 0.0, sigma2 = 0.0, sigma3 = 0.0;
    double c_u = 0.0, c_v = 0.0, d = 0.0;
    int t = 0, i = 0;
    double deg_u = 0.0, deg_v = 0.0;
};

SigmaTriple sigma_terms(const Rational& c_u, const Rational& c_v, const Rational& d,
                        int t, int i, int deg_u, int deg_v);
SigmaTriple sigma_terms_real(double c_u, double c_v, double d, int t, int i,
                             double deg_u, double deg_v);

struct GridSpec {
    double lo = 0.25;
    double hi = 1e6;
    int per_decade = 1000;
};

// "geom:lo=0.25,hi=1e6,per_decade=1000"
GridSpec parse_grid_spec(std::string_view s);

// Geometric grid anchored so that c = 1 is exactly a grid point.
std::vector<double> geometric_grid(const GridSpec& spec);

struct MonotonicityReport {
    bool nonnegative = true;
    bool increasing_above_one = true;
    bool decreasing_below_one = true;
    bool decreasing_checked = false; // only asserted when d >= threshold
    double min_value = 0.0;
};

// Evaluates L(c)/c on the grid: non-negative everywhere, increasing on
// c >= 1, decreasing on [i/(d-i), 1] (the latter only for large d).
MonotonicityReport check_L_monotonicity(const Rational& d, int i, const GridSpec& grid,
                                        double large_d_threshold = 64.0);

struct D0Report {
    int t = 0;
    long d0 = -1; // smallest integer d on the search path that certifies the grid
    GridSpec grid;
    double c_over_t4 = 0.0; // d0 / t^4
    long violations_below = 0; // grid violations at d0 - 1, search postcondition
};

// Smallest d such that Sigma1 + Sigma2 - Sigma3 >= 0 over the whole
// (c_u, c_v) grid with degrees coupled as c*d, for every 1 <= i < t.
D0Report empirical_d0(int t, const GridSpec& grid = GridSpec{0.25, 0.0, 40});

struct PiLemmaLevel {
    int i = 0;
    double pi1 = 0.0, pi1_rhs = 0.0;        // Pi1 >= rhs
    double pi3 = 0.0, pi3_rhs = 0.0;        // Pi3 <= rhs
    double pi2 = 0.0, pi2_rhs = 0.0;        // summed over i: Pi2 >= rhs
    bool defined = false;
};

struct WeakLemmaReport {
    bool hypothesis_min_degree = false;
    bool defined = false;       // entropy decomposition defined on every level
    double h_total = 0.0;
    double master_rhs = 0.0;    // log(n(d)_t) + sum of nc-weighted Sigma terms
    Verdict master_verdict = Verdict::inapplicable;
    std::vector<PiLemmaLevel> levels;
    Verdict pi1_verdict = Verdict::inapplicable;
    Verdict pi2_verdict = Verdict::inapplicable; // on the level sums
    Verdict pi3_verdict = Verdict::inapplicable;
};

// Evaluates the three Pi lemmas and the master inequality
// H >= log(n(d)_t) + sum P(nc(u,v)) (Sigma1 + Sigma2 - Sigma3) on a concrete
// instance. Desk-scale graphs rarely satisfy the hypotheses; verdicts say so.
WeakLemmaReport weak_lemma_report(const ExactDistribution& dist);

} // namespace montree
