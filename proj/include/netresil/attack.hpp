#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netresil/centrality.hpp"
#include "netresil/graph.hpp"

namespace netresil {

enum class AttackKind { Targeted, Random };
enum class TargetingMode { Static, Adaptive };

std::string to_string(AttackKind kind);
std::string to_string(TargetingMode mode);

/// One attack configuration. `seed` drives random victim selection only;
/// `centrality` and `mode` apply to targeted attacks only.
struct AttackScenario {
    AttackKind kind = AttackKind::Targeted;
    double fraction = 1.0 / 3.0;  // in (0, 1)
    CentralityKind centrality = CentralityKind::Betweenness;
    TargetingMode mode = TargetingMode::Static;
    std::uint64_t seed = 0;

    static AttackScenario targeted(double fraction = 1.0 / 3.0,
                                   CentralityKind centrality = CentralityKind::Betweenness,
                                   TargetingMode mode = TargetingMode::Static);
    static AttackScenario random(double fraction, std::uint64_t seed);
};

/// The before/after measurement triple: component count, size of the largest
/// component, and mean path length within the largest component.
struct FragmentationMetrics {
    std::size_t component_count = 0;
    std::size_t largest_component_size = 0;
    double avg_path_length_largest = 0.0;

    bool operator==(const FragmentationMetrics&) const = default;
};

/// Controls how measure() evaluates the path-length metric: exact all-sources
/// BFS up to `sample_threshold` nodes, the seeded sampled estimator above it.
struct MeasureOptions {
    std::size_t sample_threshold = 2000;
    std::size_t sample_sources = 64;
    std::uint64_t sample_seed = 0;
};

struct AttackOutcome {
    AttackScenario scenario;
    std::vector<NodeId> removed;  // in removal order; |removed| = floor(f * n)
    FragmentationMetrics before;
    FragmentationMetrics after;
};

struct ScenarioComparison {
    AttackOutcome targeted;
    AttackOutcome random;
};

/// Number of victims for fraction f on n nodes: floor(f * n), evaluated with
/// a 1e-9 slack so that fractions like 1/3 stored in binary floating point
/// still floor to the exact rational value.
std::size_t attack_size(double fraction, std::size_t n);

/// Static: rank once on g, return the top k by (score descending, id
/// ascending). Adaptive: k rounds of rank-on-residual, removing the single
/// top node each round. Throws BadKError unless 1 <= k <= n.
std::vector<NodeId> select_targets_targeted(const Graph& g, CentralityKind centrality,
                                            std::size_t k,
                                            TargetingMode mode = TargetingMode::Static);

/// Uniform sample without replacement: partial Fisher-Yates over the
/// ascending node list driven by splitmix64(seed). Deterministic.
std::vector<NodeId> select_targets_random(const Graph& g, std::size_t k,
                                          std::uint64_t seed);

/// New graph with `victims` and their incident edges removed; g is unchanged.
Graph apply_removal(const Graph& g, std::span<const NodeId> victims);

/// Fragmentation triple of g. Throws EmptyGraphError on an empty graph.
FragmentationMetrics measure(const Graph& g, const MeasureOptions& opts = {});

/// Runs one scenario: select victims, measure before and after. A removal
/// that empties the graph yields after = (0, 0, 0.0). Throws
/// FractionTooSmallError when floor(f * n) = 0.
AttackOutcome run_scenario(const Graph& g, const AttackScenario& scenario,
                           const MeasureOptions& opts = {});

/// Runs a targeted and a random scenario against the same pristine graph.
/// Both must use the same fraction (MismatchedFractionError otherwise).
ScenarioComparison compare_scenarios(const Graph& g, const AttackScenario& targeted,
                                     const AttackScenario& random,
                                     const MeasureOptions& opts = {});

}  // namespace netresil
