#include "montree/distribution.hpp"
#include "montree/errors.hpp"
#include "montree/rng.hpp"

#include <algorithm>

namespace montree {

SampleResult sample_greedy(const RootedTree& tree, const Graph& g, std::uint64_t seed) {
    if (g.edge_count() == 0)
        throw InputError("sample_greedy: graph has no edges");
    Rng rng(seed);
    SampleResult out;
    auto& img = out.embedding.images;

    // phi_0 = v with probability d(v)/2m: pick an oriented edge endpoint
    std::uint64_t pick = uniform_below(rng, 2 * static_cast<std::uint64_t>(g.edge_count()));
    int v0 = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t d = g.degree(v);
        if (pick < d) {
            v0 = v;
            break;
        }
        pick -= d;
    }
    img.push_back(v0);

    std::vector<bool> used(g.vertex_count(), false);
    used[v0] = true;
    std::vector<int> choices;
    for (int i = 1; i <= tree.edge_count(); ++i) {
        choices.clear();
        for (int w : g.neighbors(img[tree.ancestor(i)]))
            if (!used[w]) choices.push_back(w);
        if (choices.empty()) {
            out.dead_end = true;
            return out;
        }
        int w = choices[uniform_below(rng, choices.size())];
        img.push_back(w);
        used[w] = true;
    }
    return out;
}

bool classify_complete_at(const RootedTree& t, const Graph& g,
                          const std::vector<int>& images, int anchor) {
    for (int j = 1; j < anchor; ++j) {
        if (t.is_leaf_in_prefix(j, anchor)) continue;
        if (!g.has_edge(images[0], images[j])) return false;
        if (!g.has_edge(images[anchor], images[j])) return false;
    }
    return true;
}

bool classify_complete(const RootedTree& t, const Graph& g, const PartialEmbedding& e) {
    int i = e.level();
    if (i >= t.edge_count())
        throw InputError("classify_complete: needs level i < t");
    return classify_complete_at(t, g, e.images, t.ancestor(i + 1));
}

ExactDistribution ExactDistribution::build(const RootedTree& t, const Graph& g,
                                           std::uint64_t max_embeddings) {
    ExactDistribution dist;
    dist.tree_ = t;
    dist.graph_ = g;
    dist.levels_.resize(t.edge_count() + 1);
    dist.failure_at_.assign(t.edge_count() + 1, Rational(0));

    if (g.edge_count() == 0)
        throw InputError("exact_distribution: graph has no edges");

    std::uint64_t total_entries = 0;
    auto& level0 = dist.levels_[0];
    const Rational two_m(2 * g.edge_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        level0.push_back({{v}, Rational(g.degree(v)) / two_m, -1});
        ++total_entries;
    }

    std::vector<int> choices;
    for (int i = 1; i <= t.edge_count(); ++i) {
        auto& prev = dist.levels_[i - 1];
        auto& cur = dist.levels_[i];
        for (std::size_t pi = 0; pi < prev.size(); ++pi) {
            const auto& entry = prev[pi];
            choices.clear();
            for (int w : g.neighbors(entry.images[t.ancestor(i)]))
                if (std::find(entry.images.begin(), entry.images.end(), w) ==
                    entry.images.end())
                    choices.push_back(w);
            if (choices.empty()) {
                dist.failure_at_[i] += entry.prob;
                continue;
            }
            Rational p = entry.prob / static_cast<int>(choices.size());
            for (int w : choices) {
                if (++total_entries > max_embeddings)
                    throw ResourceError("exact_distribution: embedding budget exceeded");
                Entry e;
                e.images = entry.images;
                e.images.push_back(w);
                e.prob = p;
                e.parent = static_cast<int>(pi);
                cur.push_back(std::move(e));
            }
        }
    }
    for (const auto& f : dist.failure_at_)
        dist.failure_total_ += f;
    return dist;
}

Rational ExactDistribution::level_mass(int i) const {
    Rational total = 0;
    for (const auto& e : levels_[i])
        total += e.prob;
    return total;
}

Rational ExactDistribution::failure_mass_through(int i) const {
    Rational total = 0;
    for (int j = 0; j <= i && j <= top_level(); ++j)
        total += failure_at_[j];
    return total;
}

bool ExactDistribution::matches(const GammaSelector& sel, const Entry& e) const {
    const int i = sel.level;
    int anchor = -1;
    if (sel.kind != SelectorKind::from_vertex || sel.filter != CompletenessFilter::all) {
        if (i >= tree_.edge_count())
            throw InputError("gamma selector: anchor-based query needs level i < t");
        anchor = tree_.ancestor(i + 1);
    }
    switch (sel.kind) {
    case SelectorKind::from_vertex:
        if (e.images[0] != sel.u) return false;
        break;
    case SelectorKind::to_anchor:
        if (e.images[anchor] != sel.v) return false;
        break;
    case SelectorKind::pair:
        if (e.images[0] != sel.u || e.images[anchor] != sel.v) return false;
        break;
    case SelectorKind::path: {
        auto chain = tree_.root_path(anchor);
        if (chain.size() != sel.path.size())
            throw InputError("gamma selector: path length must match the x_0 -> x_{a(i+1)} "
                             "distance in the tree");
        for (std::size_t j = 0; j < chain.size(); ++j)
            if (e.images[chain[j]] != sel.path[j]) return false;
        break;
    }
    }
    if (sel.filter != CompletenessFilter::all) {
        bool complete = classify_complete_at(tree_, graph_, e.images, anchor);
        if (sel.filter == CompletenessFilter::non_complete && complete) return false;
        if (sel.filter == CompletenessFilter::complete_only && !complete) return false;
    }
    return true;
}

Rational ExactDistribution::probability(const GammaSelector& sel) const {
    if (sel.level < 0 || sel.level > top_level())
        throw InputError("gamma selector: level out of range");
    Rational total = 0;
    for (const auto& e : levels_[sel.level])
        if (matches(sel, e))
            total += e.prob;
    return total;
}

} // namespace montree
