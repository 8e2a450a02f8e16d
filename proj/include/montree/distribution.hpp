#pragma once

#include "montree/graph.hpp"
#include "montree/numeric.hpp"
#include "montree/tree.hpp"

#include <cstdint>
#include <vector>

namespace montree {

inline constexpr std::uint64_t kDefaultEmbeddingBudget = 5'000'000;

// gamma^i = (gamma_0, ..., gamma_i): images of x_0..x_i in V(G).
struct PartialEmbedding {
    std::vector<int> images;
    int level() const { return static_cast<int>(images.size()) - 1; }
};

struct SampleResult {
    PartialEmbedding embedding; // full on success, the progress made otherwise
    bool dead_end = false;
};

// One draw of the greedy embedding: x_0 lands on v with probability
// d(v)/2|E|, every later vertex uniformly on N(parent image) minus the used
// set. Deterministic per seed.
SampleResult sample_greedy(const RootedTree& t, const Graph& g, std::uint64_t seed);

enum class SelectorKind {
    from_vertex, // gamma_0 = u
    to_anchor,   // gamma_{a(i+1)} = v
    pair,        // both of the above
    path,        // gamma along the tree path from x_0 to x_{a(i+1)}
};

enum class CompletenessFilter { all, non_complete, complete_only };

struct GammaSelector {
    SelectorKind kind;
    int level; // i
    int u = -1;
    int v = -1;
    std::vector<int> path; // graph vertices, for SelectorKind::path
    CompletenessFilter filter = CompletenessFilter::all;

    static GammaSelector from(int level, int u) {
        return {SelectorKind::from_vertex, level, u, -1, {}, CompletenessFilter::all};
    }
    static GammaSelector to(int level, int v) {
        return {SelectorKind::to_anchor, level, -1, v, {}, CompletenessFilter::all};
    }
    static GammaSelector pair_uv(int level, int u, int v,
                                 CompletenessFilter f = CompletenessFilter::all) {
        return {SelectorKind::pair, level, u, v, {}, f};
    }
    static GammaSelector along(int level, std::vector<int> p,
                               CompletenessFilter f = CompletenessFilter::all) {
        return {SelectorKind::path, level, -1, -1, std::move(p), f};
    }
};

// gamma is complete iff gamma_0 and gamma_{anchor} see the image of every
// interior non-leaf of T^{anchor}. The anchor for a level-i embedding is
// a(i+1); completeness only depends on the prefix up to the anchor.
bool classify_complete_at(const RootedTree& t, const Graph& g,
                          const std::vector<int>& images, int anchor);
bool classify_complete(const RootedTree& t, const Graph& g, const PartialEmbedding& e);

// The exact law of the greedy embedding: every reachable partial embedding
// with its rational probability, level by level, plus the mass lost to dead
// ends. Queries are read-only and safe to run concurrently.
class ExactDistribution {
public:
    struct Entry {
        std::vector<int> images;
        Rational prob;
        int parent = -1; // index into the previous level
    };

    static ExactDistribution build(const RootedTree& t, const Graph& g,
                                   std::uint64_t max_embeddings = kDefaultEmbeddingBudget);

    const RootedTree& tree() const { return tree_; }
    const Graph& graph() const { return graph_; }

    int top_level() const { return tree_.edge_count(); } // t
    const std::vector<Entry>& level(int i) const { return levels_[i]; }

    Rational level_mass(int i) const;
    Rational failure_mass() const { return failure_total_; }
    // mass lost to dead ends at steps <= i (i.e. P(phi^i undefined))
    Rational failure_mass_through(int i) const;

    // P(phi^i in the selected Gamma-set)
    Rational probability(const GammaSelector& sel) const;

    bool matches(const GammaSelector& sel, const Entry& e) const;

private:
    RootedTree tree_;
    Graph graph_;
    std::vector<std::vector<Entry>> levels_; // levels_[i]: embeddings of T^i
    std::vector<Rational> failure_at_;       // failure_at_[i]: mass dying at step i
    Rational failure_total_ = 0;
};

inline Rational gamma_probability(const ExactDistribution& dist, const GammaSelector& sel) {
    return dist.probability(sel);
}

} // namespace montree
