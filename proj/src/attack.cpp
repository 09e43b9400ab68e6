#include "netresil/attack.hpp"

#include <algorithm>
#include <cmath>

#include "netresil/prng.hpp"

namespace netresil {

std::string to_string(AttackKind kind) {
    return kind == AttackKind::Targeted ? "targeted" : "random";
}

std::string to_string(TargetingMode mode) {
    return mode == TargetingMode::Static ? "static" : "adaptive";
}

AttackScenario AttackScenario::targeted(double fraction, CentralityKind centrality,
                                        TargetingMode mode) {
    AttackScenario s;
    s.kind = AttackKind::Targeted;
    s.fraction = fraction;
    s.centrality = centrality;
    s.mode = mode;
    return s;
}

AttackScenario AttackScenario::random(double fraction, std::uint64_t seed) {
    AttackScenario s;
    s.kind = AttackKind::Random;
    s.fraction = fraction;
    s.seed = seed;
    return s;
}

std::size_t attack_size(double fraction, std::size_t n) {
    // The 1e-9 slack keeps fractions like 1/3, whose binary representation
    // sits just below the rational value, from flooring one short.
    const double scaled = fraction * static_cast<double>(n) + 1e-9;
    const auto k = static_cast<std::size_t>(std::floor(scaled));
    return std::min(k, n);
}

std::vector<NodeId> select_targets_targeted(const Graph& g, CentralityKind centrality,
                                            std::size_t k, TargetingMode mode) {
    const std::size_t n = g.node_count();
    if (k < 1 || k > n) throw BadKError(k, n);

    if (mode == TargetingMode::Static) {
        auto scores = compute_centrality(g, centrality);
        std::vector<std::uint32_t> idx(n);
        for (std::uint32_t i = 0; i < n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (scores.scores[a] != scores.scores[b])
                return scores.scores[a] > scores.scores[b];
            return a < b;
        });
        std::vector<NodeId> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k; ++i) out.push_back(g.id_at(idx[i]));
        return out;
    }

    // Adaptive: re-rank on the residual graph after every single removal.
    std::vector<NodeId> out;
    out.reserve(k);
    Graph residual = g;
    for (std::size_t round = 0; round < k; ++round) {
        auto scores = compute_centrality(residual, centrality);
        std::size_t best = 0;
        for (std::size_t i = 1; i < scores.scores.size(); ++i) {
            if (scores.scores[i] > scores.scores[best]) best = i;
        }
        const NodeId victim = residual.id_at(best);
        out.push_back(victim);
        residual = apply_removal(residual, std::vector<NodeId>{victim});
    }
    return out;
}

std::vector<NodeId> select_targets_random(const Graph& g, std::size_t k, std::uint64_t seed) {
    const std::size_t n = g.node_count();
    if (k < 1 || k > n) throw BadKError(k, n);
    std::vector<NodeId> pool = g.nodes();
    SplitMix64 rng(seed);
    partial_shuffle(pool, k, rng);
    pool.resize(k);
    return pool;
}

Graph apply_removal(const Graph& g, std::span<const NodeId> victims) {
    std::vector<char> removed(g.node_count(), 0);
    for (NodeId v : victims) removed[g.index_of(v)] = 1;

    std::vector<NodeId> kept;
    kept.reserve(g.node_count());
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        if (!removed[i]) kept.push_back(g.id_at(i));
    }
    return g.induced_subgraph(kept);
}

FragmentationMetrics measure(const Graph& g, const MeasureOptions& opts) {
    if (g.node_count() == 0) throw EmptyGraphError();
    FragmentationMetrics out;
    auto decomposition = connected_components(g);
    out.component_count = decomposition.count();
    out.largest_component_size = decomposition.components.front().size();
    if (out.largest_component_size > 1) {
        Graph largest = g.induced_subgraph(decomposition.components.front());
        out.avg_path_length_largest =
            largest.node_count() > opts.sample_threshold
                ? average_path_length_sampled(largest, opts.sample_sources, opts.sample_seed)
                : average_path_length(largest);
    }
    return out;
}

AttackOutcome run_scenario(const Graph& g, const AttackScenario& scenario,
                           const MeasureOptions& opts) {
    if (!(scenario.fraction > 0.0 && scenario.fraction < 1.0))
        throw BadParamsError("attack fraction must lie in (0, 1)");
    const std::size_t k = attack_size(scenario.fraction, g.node_count());
    if (k < 1) throw FractionTooSmallError(scenario.fraction);

    AttackOutcome outcome;
    outcome.scenario = scenario;
    outcome.removed = scenario.kind == AttackKind::Targeted
                          ? select_targets_targeted(g, scenario.centrality, k, scenario.mode)
                          : select_targets_random(g, k, scenario.seed);
    outcome.before = measure(g, opts);
    Graph post = apply_removal(g, outcome.removed);
    outcome.after = post.node_count() == 0 ? FragmentationMetrics{0, 0, 0.0}
                                           : measure(post, opts);
    return outcome;
}

ScenarioComparison compare_scenarios(const Graph& g, const AttackScenario& targeted,
                                     const AttackScenario& random,
                                     const MeasureOptions& opts) {
    if (targeted.kind != AttackKind::Targeted || random.kind != AttackKind::Random)
        throw BadParamsError("compare_scenarios expects one targeted and one random scenario");
    if (targeted.fraction != random.fraction) throw MismatchedFractionError();
    return ScenarioComparison{run_scenario(g, targeted, opts), run_scenario(g, random, opts)};
}

}  // namespace netresil
