#pragma once

#include "montree/distribution.hpp"

#include <vector>

namespace montree {

inline constexpr double kEntropyTol = 1e-9;

struct RValue {
    double value = 0.0;
    bool null_event = false; // P(phi^i in Gamma_i(*, v)) = 0, convention used
    bool defined = true;     // false when the value would be log of <= 0
};

// Conditional expectation of log(d(v) - |N(v) cap im(gamma)|) over
// Gamma_i(*, v) under the raw law; convention log(d(v) - i) on null events.
RValue r_value(const ExactDistribution& dist, int i, int v);

struct LevelDecomposition {
    int i = 0;
    double h_cond = 0.0;        // H[phi^{i+1} | phi^i]
    double log_d_minus_i = 0.0; // only meaningful when defined
    double pi1 = 0.0, pi2 = 0.0, pi3 = 0.0;
    double residual = 0.0;      // h_cond - log(d-i) - pi1 - pi2 + pi3
    bool defined = false;       // all logs well-formed: d > i and no excluded vertices
    std::vector<int> excluded_vertices; // v with 1 <= d(v) <= i
};

struct EntropyReport {
    double h_total = 0.0;  // H[phi] (success-conditioned when flagged)
    double h_level1 = 0.0; // H[phi^1], log(2m) when failure-free
    bool h_level1_defined = false;
    double chain_residual = 0.0;
    std::vector<LevelDecomposition> levels; // i = 1 .. t-1

    double model_bound_log = 0.0; // log(n (d)_t)
    bool model_bound_defined = false;
    double slack = 0.0; // h_total - model_bound_log

    bool conditioned = false; // failure mass > 0: law conditioned on success
    Rational failure_mass;

    std::size_t support_size = 0;
    double support_log = 0.0; // log |support|; h_total <= support_log always

    std::vector<std::vector<RValue>> r_table; // [i-1][v] for i = 1..t-1
};

// Full entropy accounting of the embedding law: chain rule terms, the
// per-level decomposition into log(d-i) + Pi1 + Pi2 - Pi3, and the model
// bound. Throws InternalError if a well-defined residual exceeds tolerance
// on a failure-free instance.
EntropyReport entropy_report(const ExactDistribution& dist);

} // namespace montree
